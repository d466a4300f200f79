// chromaface: generate the critical planar families, compute their
// face-degree parameters exactly, verify coloring-theoretic properties,
// and run the two discharging rule systems with full charge audits.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chromaface/checks.hpp"
#include "chromaface/coloring.hpp"
#include "chromaface/discharging.hpp"
#include "chromaface/face_metrics.hpp"
#include "chromaface/families.hpp"
#include "chromaface/repro.hpp"

using json = nlohmann::ordered_json;
using namespace chromaface;

namespace {

struct Options {
  bool as_json = false;
  bool approx = false;
};

std::string fmt(const Rational& r, const Options& opt) {
  if (!opt.approx) return r.str();
  std::ostringstream os;
  os << r.to_double();
  return os.str();
}

json jrat(const Rational& r, const Options& opt) {
  if (opt.approx) return r.to_double();
  return r.str();
}

std::string first_tag(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path + "'");
  std::string line;
  while (std::getline(is, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    return tag;
  }
  throw std::runtime_error("'" + path + "' is empty");
}

struct LoadedGraph {
  Graph graph;
  std::optional<PlaneGraph> plane;
};

// Reads either format; plane-graph files carry their embedding along.
LoadedGraph load_graph(const std::string& path) {
  std::string tag = first_tag(path);
  std::ifstream is(path);
  if (tag == "p") return {read_edge_list(is), std::nullopt};
  if (tag == "pg") {
    PlaneGraph pg = read_plane_graph(is);
    Graph g = pg.graph();
    return {std::move(g), std::move(pg)};
  }
  throw std::runtime_error("'" + path + "' is neither an edge list ('p') " +
                           "nor a plane graph ('pg'), starts with '" + tag +
                           "'");
}

void write_file(const std::string& path,
                const std::function<void(std::ostream&)>& writer) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write '" + path + "'");
  writer(os);
  std::cout << "wrote " << path << "\n";
}

int cmd_gen(const std::string& family, int n, int m,
            const std::string& prefix) {
  auto emit = [&](const PlaneGraph& pg, const CertificateBundle* certs,
                  const Graph* regular) {
    write_file(prefix + ".el",
               [&](std::ostream& os) { write_edge_list(os, pg.graph()); });
    write_file(prefix + ".pg",
               [&](std::ostream& os) { write_plane_graph(os, pg); });
    if (certs)
      write_file(prefix + ".cert", [&](std::ostream& os) {
        write_certificates(os, *certs, *regular);
      });
  };
  if (family == "cycle") {
    emit(gen_odd_cycle(n), nullptr, nullptr);
  } else if (family == "prism" || family == "gn") {
    PrismFamily fam = gen_prism_G(n);
    emit(family == "prism" ? fam.cubic : fam.subdivided, nullptr, nullptr);
  } else if (family == "quartic" || family == "hn") {
    QuarticFamily fam = gen_quartic_H(n);
    emit(family == "quartic" ? fam.quartic : fam.subdivided, nullptr, nullptr);
  } else {  // quintic | tm
    QuinticFamily fam = gen_quintic_T(m);
    Graph regular = fam.regular.graph();
    emit(family == "quintic" ? fam.regular : fam.subdivided, &fam.certs,
         &regular);
  }
  return 0;
}

int cmd_metrics(const std::string& input, unsigned long long budget,
                const Options& opt) {
  LoadedGraph in = load_graph(input);
  const Graph& g = in.graph;
  json out;
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edge_count();

  if (!in.plane) {
    // derive an embedding when the graph is small enough to search
    try {
      in.plane = detail::first_planar_embedding(g, budget);
    } catch (const std::exception&) {
      // metrics that need faces are reported as unavailable
    }
  }
  Rational fbar = avg_face_degree(g);
  out["fbar"] = jrat(fbar, opt);
  out["size_identity"] = size_identity_check(g);
  if (in.plane) {
    out["faces"] = in.plane->face_count();
    try {
      out["local_min"] = jrat(local_min(*in.plane), opt);
    } catch (const std::exception& e) {
      out["local_min"] = nullptr;
      out["local_min_note"] = e.what();
    }
  } else {
    out["faces"] = nullptr;
    out["local_min"] = nullptr;
    out["note"] = "no embedding supplied or derivable within budget";
  }
  try {
    const RotationSystem* hint =
        in.plane ? &in.plane->rotation() : nullptr;
    FStarResult fs = max_local_face_average(g, budget, hint);
    out["fstar"] = jrat(fs.value, opt);
    out["fstar_status"] =
        fs.status == FStarStatus::exact ? "exact" : "lower_bound";
  } catch (const std::exception& e) {
    out["fstar"] = nullptr;
    out["fstar_note"] = e.what();
  }

  if (opt.as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto& [k, v] : out.items()) {
      std::cout << k << ": ";
      if (v.is_null())
        std::cout << "n/a";
      else if (v.is_string())
        std::cout << v.get<std::string>();
      else
        std::cout << v.dump();
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& input, const std::string& mode,
               unsigned long long nodes, const std::string& witness_out,
               const Options& opt) {
  json out;
  bool ok = true;
  if (mode == "certificates") {
    std::string tag = first_tag(input);
    if (tag != "cert")
      throw std::runtime_error("mode certificates needs a .cert file");
    std::ifstream is(input);
    CertificateBundle certs = read_certificates(is);
    Graph regular = gen_quintic_T(certs.m).regular.graph();
    CertificateReport rep = validate_certificates(certs, regular);
    ok = rep.all_ok();
    out["m"] = certs.m;
    out["matchings_disjoint"] = rep.matchings_disjoint;
    out["matchings_perfect"] = rep.matchings_perfect;
    out["union_is_edge_set"] = rep.union_is_edge_set;
    out["e1_in_all_unions"] = rep.e1_in_all_unions;
    out["unions_cover"] = rep.unions_cover;
    for (int a = 0; a < 3; ++a) {
      std::string key = "A" + std::to_string(a + 1);
      out[key + "_two_regular"] = rep.union_two_regular[a];
      out[key + "_circuits"] = rep.union_circuit_counts[a];
      out[key + "_hamiltonian"] = rep.union_hamiltonian[a];
    }
    out["ok"] = ok;
  } else {
    LoadedGraph in = load_graph(input);
    const Graph& g = in.graph;
    if (mode == "chromatic") {
      ClassDecision d = chromatic_index(g, nodes);
      out["chromatic_index"] = d.chromatic_index;
      out["class"] = d.class_label == GraphClass::class1 ? 1 : 2;
      out["witness_proper"] = is_proper(g, d.witness);
      ok = out["witness_proper"].get<bool>();
      if (!witness_out.empty()) {
        write_file(witness_out,
                   [&](std::ostream& os) { write_coloring(os, d.witness); });
        out["witness_file"] = witness_out;
      }
    } else if (mode == "critical") {
      CriticalityReport rep = criticality_report(g, nodes);
      out["critical"] = rep.critical;
      out["class2"] = rep.class2;
      out["deletions_class1"] = rep.deletions_colorable;
      out["deletions_total"] = rep.deletions_total;
      if (rep.failing_edge)
        out["failing_edge"] = rep.failing_edge->str();
      ok = rep.critical;
    } else if (mode == "overfull") {
      bool of = is_overfull(g);
      out["overfull"] = of;
      long long bound =
          (long long)g.max_degree() * (g.vertex_count() / 2) + 1;
      out["bound"] = bound;
      out["equality"] = of && g.edge_count() == bound;
      ok = of;
    } else {  // lemmas
      for (const CheckReport& rep :
           {check_lemma1(g), check_val(g), check_zhang(g), check_sz(g)}) {
        json jr;
        jr["holds"] = rep.holds;
        jr["violations"] = rep.violations.size();
        if (!rep.violations.empty())
          jr["first_violation"] = rep.violations.front().detail;
        out[rep.check_id] = jr;
        ok = ok && rep.holds;
      }
    }
  }
  if (opt.as_json) {
    out["ok"] = ok;
    std::cout << out.dump(2) << "\n";
  } else {
    if (mode == "critical")
      std::cout << "critical: " << (ok ? "true" : "false") << " ("
                << out["deletions_class1"].get<int>() << "/"
                << out["deletions_total"].get<int>()
                << " deletions class 1)\n";
    else
      for (auto& [k, v] : out.items())
        std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                  << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_discharge(const std::string& input, const std::string& ruleset,
                  const std::string& r_str, bool log, const Options& opt) {
  std::string tag = first_tag(input);
  if (tag != "pg")
    throw std::runtime_error("discharge needs a plane-graph (.pg) file");
  std::ifstream is(input);
  PlaneGraph pg = read_plane_graph(is);

  ChargeLedger led;
  json out;
  out["ruleset"] = ruleset;
  bool faces_ok = true;
  if (ruleset == "delta5") {
    std::optional<Rational> r;
    if (!r_str.empty()) r = Rational::parse(r_str);
    Rational used_r = r ? *r : local_min(pg);
    led = apply_delta5(pg, used_r);
    out["r"] = used_r.str();
    for (const Rational& f : led.face_final)
      if (!(f == Rational(0))) faces_ok = false;
    out["faces_final_zero"] = faces_ok;
  } else {
    led = apply_delta6(pg);
    out["star_value"] = jrat(delta6_star_value(pg), opt);
    for (int f = 0; f < pg.face_count(); ++f)
      if (pg.face_degree(f) >= 4 && !(led.face_final[f] == Rational(0)))
        faces_ok = false;
    out["faces4plus_final_zero"] = faces_ok;
  }
  out["total_initial"] = jrat(led.total_initial(), opt);
  out["total_final"] = jrat(led.total_final(), opt);
  out["conserved"] = led.conserved();
  out["flows_consistent"] = led.flows_consistent();
  if (auto mv = led.min_vertex_final()) out["min_vertex_final"] = jrat(*mv, opt);
  if (auto mf = led.min_face_final()) out["min_face_final"] = jrat(*mf, opt);
  json negatives = json::array();
  for (const auto& [el, val] : led.negative_final())
    negatives.push_back(el.str() + "=" + val.str());
  out["negative_final"] = negatives;
  out["transfer_count"] = led.transfers.size();
  if (log) {
    json tj = json::array();
    for (const Transfer& t : led.transfers)
      tj.push_back(t.rule + " " + t.from.str() + " -> " + t.to.str() + " : " +
                   t.amount.str());
    out["transfers"] = tj;
  }
  bool ok = led.conserved() && led.flows_consistent() && faces_ok;
  if (opt.as_json) {
    out["ok"] = ok;
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto& [k, v] : out.items()) {
      if (k == "transfers") {
        std::cout << "transfers:\n";
        for (auto& t : v) std::cout << "  " << t.get<std::string>() << "\n";
      } else {
        std::cout << k << ": "
                  << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  }
  return ok ? 0 : 1;
}

int cmd_check(const std::string& input, int k, const Options& opt) {
  LoadedGraph in = load_graph(input);
  json out;
  bool ok = true;
  for (const CheckReport& rep :
       {check_edge_bounds(in.graph, k), check_global_bound(in.graph, k)}) {
    json jr;
    jr["holds"] = rep.holds;
    json viol = json::array();
    for (const Violation& v : rep.violations) viol.push_back(v.detail);
    jr["violations"] = viol;
    json notes = json::array();
    for (const std::string& n : rep.hypothesis_notes) notes.push_back(n);
    jr["notes"] = notes;
    out[rep.check_id] = jr;
    ok = ok && rep.holds;
  }
  if (opt.as_json) {
    out["ok"] = ok;
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto& [key, jr] : out.items()) {
      std::cout << key << ": " << (jr["holds"].get<bool>() ? "holds" : "FAILS")
                << "\n";
      for (auto& v : jr["violations"])
        std::cout << "  violation: " << v.get<std::string>() << "\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_embeddings(const std::string& input, unsigned long long budget,
                   const Options& opt) {
  LoadedGraph in = load_graph(input);
  EnumerationResult res = enumerate_planar_embeddings(in.graph, budget);
  json out;
  out["enumerated"] = res.enumerated;
  out["planar"] = res.planar.size();
  if (connectivity_level(in.graph) >= 2 && !res.planar.empty()) {
    Spread s = embedding_spread(in.graph, budget);
    out["spread_min"] = jrat(s.min, opt);
    out["spread_max"] = jrat(s.max, opt);
    out["embedding_dependent"] = s.min < s.max;
  }
  if (opt.as_json)
    std::cout << out.dump(2) << "\n";
  else
    for (auto& [k, v] : out.items())
      std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                << "\n";
  return 0;
}

int cmd_table(const Options& opt) {
  auto rows = bounds_table();
  if (opt.as_json) {
    json out = json::array();
    for (const BoundsRow& r : rows) {
      json jr;
      jr["k"] = r.k;
      jr["conditional"] = r.conditional;
      jr["avg_bound"] =
          r.avg_infinite ? json("infinity")
                         : json({{"lower", r.avg_lower ? json(r.avg_lower->str())
                                                       : json(nullptr)},
                                 {"upper", r.avg_upper ? json(r.avg_upper->str())
                                                       : json(nullptr)},
                                 {"upper_refined",
                                  r.avg_upper_refined
                                      ? json(r.avg_upper_refined->str())
                                      : json(nullptr)}});
      jr["local_bound"] =
          r.local_infinite
              ? json("infinity")
              : json({{"lower", r.local_lower ? json(r.local_lower->str())
                                              : json(nullptr)},
                      {"upper", r.local_upper ? json(r.local_upper->str())
                                              : json(nullptr)}});
      out.push_back(jr);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "bounds for k-critical planar graphs (avg = average "
               "face-degree bound, local = local average bound)\n";
  auto render = [](const char* name, bool infinite,
                   const std::optional<Rational>& lower,
                   const std::optional<Rational>& upper,
                   const std::optional<Rational>& refined) {
    std::ostringstream os;
    if (infinite) {
      os << name << " = infinity";
      return os.str();
    }
    if (lower) os << lower->str() << " <= ";
    os << name;
    if (upper) os << " <= " << upper->str();
    if (refined) os << " (refined: " << name << " < " << refined->str() << ")";
    return os.str();
  };
  for (const BoundsRow& r : rows) {
    std::cout << "k=" << r.k;
    if (r.conditional) std::cout << " (existence open)";
    std::cout << ": "
              << render("avg", r.avg_infinite, r.avg_lower, r.avg_upper,
                        r.avg_upper_refined)
              << "; "
              << render("local", r.local_infinite, r.local_lower,
                        r.local_upper, std::nullopt)
              << "\n";
  }
  return 0;
}

int cmd_repro(const Options& opt) {
  auto results = run_acceptance();
  bool all = true;
  json out = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    if (opt.as_json) {
      out.push_back({{"criterion", r.id},
                     {"pass", r.pass},
                     {"detail", r.detail},
                     {"seconds", r.seconds}});
    } else {
      std::printf("[%s] %-26s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL",
                  r.id.c_str(), r.seconds, r.detail.c_str());
      std::fflush(stdout);
    }
  }
  if (opt.as_json) std::cout << out.dump(2) << "\n";
  if (!opt.as_json)
    std::cout << (all ? "all criteria passed" : "SOME CRITERIA FAILED")
              << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "chromaface: face-degree parameters, edge colorings and discharging "
      "audits for the critical planar graph families"};
  app.require_subcommand(1);
  Options opt;

  unsigned long long budget = 0;  // resolved after parse so env applies
  unsigned long long nodes = kDefaultNodeBudget;

  std::string family, out_prefix, input, mode, ruleset, r_str;
  int n = 0, mparam = 0, k = 0;
  bool log = false;

  auto* gen = app.add_subcommand("gen", "generate a family member");
  gen->add_option("--family", family, "cycle|prism|gn|quartic|hn|quintic|tm")
      ->required()
      ->check(CLI::IsMember(
          {"cycle", "prism", "gn", "quartic", "hn", "quintic", "tm"}));
  gen->add_option("--n", n, "cycle length or ring size");
  gen->add_option("--m", mparam, "number of nested circuits (quintic/tm)");
  gen->add_option("--out", out_prefix, "output file prefix")->required();

  auto add_common = [&](CLI::App* cmd, bool with_budget = true) {
    cmd->add_flag("--json", opt.as_json, "machine-readable output");
    cmd->add_flag("--approx", opt.approx,
                  "decimal output instead of exact rationals");
    if (with_budget)
      cmd->add_option("--budget", budget,
                      "enumeration budget (default: CHROMAFACE_BUDGET or 1e6)");
  };

  auto* metrics = app.add_subcommand("metrics", "face-degree parameters");
  metrics->add_option("input", input, "edge-list or plane-graph file")
      ->required();
  add_common(metrics);

  auto* verify = app.add_subcommand("verify", "coloring-theoretic checks");
  verify->add_option("input", input, "graph, plane-graph or cert file")
      ->required();
  verify
      ->add_option("--mode", mode,
                   "chromatic|critical|overfull|lemmas|certificates")
      ->required()
      ->check(CLI::IsMember(
          {"chromatic", "critical", "overfull", "lemmas", "certificates"}));
  verify->add_option("--nodes", nodes, "backtracking node budget");
  std::string witness_out;
  verify->add_option("--witness-out", witness_out,
                     "write the coloring witness to this file (chromatic)");
  add_common(verify, false);

  auto* discharge = app.add_subcommand("discharge", "run a discharging system");
  discharge->add_option("input", input, "plane-graph file")->required();
  discharge->add_option("--ruleset", ruleset, "delta5|delta6")
      ->required()
      ->check(CLI::IsMember({"delta5", "delta6"}));
  discharge->add_option("--r", r_str,
                        "rational r for delta5 (default: local minimum)");
  discharge->add_flag("--log", log, "include the full transfer log");
  add_common(discharge, false);

  auto* check = app.add_subcommand("check", "edge-count and face-degree bounds");
  check->add_option("input", input, "graph or plane-graph file")->required();
  check->add_option("--k", k, "target criticality class, 3..6")->required();
  add_common(check, false);

  auto* embeddings =
      app.add_subcommand("embeddings", "enumerate rotation systems");
  embeddings->add_option("input", input, "graph or plane-graph file")
      ->required();
  add_common(embeddings);

  auto* table = app.add_subcommand("table", "known bounds per k");
  add_common(table, false);

  auto* repro = app.add_subcommand("repro", "run the acceptance suite");
  add_common(repro, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (budget == 0) budget = default_budget();
    if (gen->parsed()) {
      if ((family == "quintic" || family == "tm")) {
        if (mparam == 0)
          throw std::runtime_error("--m is required for " + family);
      } else if (n == 0) {
        throw std::runtime_error("--n is required for " + family);
      }
      return cmd_gen(family, n, mparam, out_prefix);
    }
    if (metrics->parsed()) return cmd_metrics(input, budget, opt);
    if (verify->parsed())
      return cmd_verify(input, mode, nodes, witness_out, opt);
    if (discharge->parsed())
      return cmd_discharge(input, ruleset, r_str, log, opt);
    if (check->parsed()) return cmd_check(input, k, opt);
    if (embeddings->parsed()) return cmd_embeddings(input, budget, opt);
    if (table->parsed()) return cmd_table(opt);
    if (repro->parsed()) return cmd_repro(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
