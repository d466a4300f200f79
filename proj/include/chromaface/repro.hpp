#pragma once

// Reproducibility suite: re-derives every published value this library
// is built around, each as one pass/fail criterion. Used by the
// acceptance test binary and by the `repro` CLI subcommand.

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "chromaface/checks.hpp"
#include "chromaface/coloring.hpp"
#include "chromaface/discharging.hpp"
#include "chromaface/face_metrics.hpp"
#include "chromaface/families.hpp"

namespace chromaface {

struct CriterionResult {
  std::string id;
  bool pass = true;
  std::string detail;
  double seconds = 0;
};

namespace repro_detail {

struct Ctx {
  bool pass = true;
  std::ostringstream detail;
  int checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      pass = false;
      detail << (detail.tellp() > 0 ? "; " : "") << "FAILED: " << what;
    }
  }
  std::string summary(const std::string& extra = "") const {
    std::string s = std::to_string(checks) + " checks";
    if (!extra.empty()) s += ", " + extra;
    if (!pass) s += "; " + detail.str();
    return s;
  }
};

inline void closed_forms(Ctx& c) {
  for (int n = 3; n <= 10; ++n) {
    PrismFamily pf = gen_prism_G(n);
    c.expect(avg_face_degree(pf.subdivided.graph()) ==
                 Rational(6) - Rational(10, n + 2),
             "fbar(G_" + std::to_string(n) + ")");
    c.expect(pf.subdivided.face_count() == n + 2,
             "|F(G_" + std::to_string(n) + ")|");
    c.expect(pf.subdivided.face_degree_sum() == 6 * n + 2,
             "sum d(f) of G_" + std::to_string(n));
    QuarticFamily qf = gen_quartic_H(n);
    c.expect(avg_face_degree(qf.subdivided.graph()) ==
                 Rational(4) - Rational(3, n + 1),
             "fbar(H_" + std::to_string(n) + ")");
    c.expect(qf.subdivided.face_count() == 2 * n + 2,
             "|F(H_" + std::to_string(n) + ")|");
    c.expect(qf.subdivided.face_degree_sum() == 8 * n + 2,
             "sum d(f) of H_" + std::to_string(n));
  }
  for (int m = 4; m <= 6; ++m) {
    QuinticFamily tf = gen_quintic_T(m);
    c.expect(avg_face_degree(tf.subdivided.graph()) ==
                 Rational(10, 3) - Rational(7, 18 * m - 15),
             "fbar(T_" + std::to_string(m) + ")");
    c.expect(tf.subdivided.face_count() == 12 * m - 10,
             "|F(T_" + std::to_string(m) + ")|");
    c.expect(tf.subdivided.face_degree_sum() == 40 * m - 38,
             "sum d(f) of T_" + std::to_string(m));
  }
}

inline void local_parameters(Ctx& c) {
  for (int n = 3; n <= 8; ++n) {
    PrismFamily pf = gen_prism_G(n);
    auto rot = pf.cubic.rotation();
    auto fs = max_local_face_average(pf.cubic.graph(), 1 << 22, &rot);
    c.expect(fs.value == Rational(n + 8, 3) && fs.status == FStarStatus::exact,
             "F*(prism " + std::to_string(n) + ") via shortcut");
    QuarticFamily qf = gen_quartic_H(n);
    auto qrot = qf.quartic.rotation();
    auto qs = max_local_face_average(qf.quartic.graph(), 1 << 22, &qrot);
    c.expect(qs.value == Rational(n + 9, 4) && qs.status == FStarStatus::exact,
             "F*(quartic " + std::to_string(n) + ") via shortcut");
  }
  // full-enumeration cross-check; unique embeddings make min == max
  for (int n = 3; n <= 5; ++n) {
    Spread ps = embedding_spread(gen_prism_G(n).cubic.graph(), 1 << 20);
    c.expect(ps.min == Rational(n + 8, 3) && ps.max == ps.min,
             "enumerated F* of prism " + std::to_string(n));
    Spread qs = embedding_spread(gen_quartic_H(n).quartic.graph(), 31000000ULL);
    c.expect(qs.min == Rational(n + 9, 4) && qs.max == qs.min,
             "enumerated F* of quartic " + std::to_string(n));
  }
  for (int m = 4; m <= 6; ++m)
    c.expect(local_min(gen_quintic_T(m).subdivided) == Rational(16, 5),
             "local min of (T_" + std::to_string(m) + ", Sigma)");
}

inline void criticality(Ctx& c) {
  for (int n = 3; n <= 11; n += 2)
    c.expect(is_critical(gen_odd_cycle(n).graph()),
             "C_" + std::to_string(n) + " critical");
  for (int n = 3; n <= 6; ++n)
    c.expect(is_critical(gen_prism_G(n).subdivided.graph()),
             "G_" + std::to_string(n) + " critical");
  for (int n = 3; n <= 5; ++n)
    c.expect(is_critical(gen_quartic_H(n).subdivided.graph()),
             "H_" + std::to_string(n) + " critical");
  QuinticFamily tf = gen_quintic_T(4);
  auto dec = chromatic_index(tf.subdivided.graph());
  c.expect(dec.chromatic_index == 6 && dec.class_label == GraphClass::class2,
           "chi'(T_4) = 6");
  auto rep = criticality_report(tf.subdivided.graph());
  c.expect(rep.critical && rep.deletions_colorable == 61,
           "T_4: all 61 deletions 5-colorable");
}

inline void overfullness(Ctx& c) {
  auto check = [&](const Graph& g, const std::string& name) {
    c.expect(is_overfull(g), name + " overfull");
    c.expect(g.edge_count() == g.max_degree() * (g.vertex_count() / 2) + 1,
             name + " overfull with equality");
  };
  for (int n = 3; n <= 8; ++n) {
    check(gen_prism_G(n).subdivided.graph(), "G_" + std::to_string(n));
    check(gen_quartic_H(n).subdivided.graph(), "H_" + std::to_string(n));
  }
  for (int m = 4; m <= 6; ++m)
    check(gen_quintic_T(m).subdivided.graph(), "T_" + std::to_string(m));
}

inline void certificates(Ctx& c, std::string& extra) {
  int fallbacks = 0, colorings = 0;
  for (int m : {4, 5}) {
    QuinticFamily fam = gen_quintic_T(m);
    CertificateReport rep = validate_certificates(fam.certs, fam.regular.graph());
    c.expect(rep.matchings_disjoint && rep.matchings_perfect &&
                 rep.union_is_edge_set,
             "M1..M5 partition E(T_" + std::to_string(m) + ")");
    c.expect(rep.e1_in_all_unions, "e1 in A1 ∩ A2 ∩ A3, m=" + std::to_string(m));
    c.expect(rep.unions_cover,
             "A1 ∪ A2 ∪ A3 = E(T) - {e2,e4}, m=" + std::to_string(m));
    const Graph& sub = fam.subdivided.graph();
    for (const Edge& h : sub.edges()) {
      CertificateColoring cc = certificate_coloring(fam.subdivided, fam.certs, h);
      Graph minus = sub.without_edge(h);
      bool good = is_proper(minus, cc.coloring) &&
                  cc.coloring.assignment.size() ==
                      std::size_t(minus.edge_count());
      c.expect(good, "certificate coloring of T_" + std::to_string(m) +
                         " minus " + h.str());
      ++colorings;
      if (cc.used_fallback) ++fallbacks;
    }
  }
  extra = std::to_string(colorings) + " colorings, " +
          std::to_string(fallbacks) + " fallbacks";
  c.expect(fallbacks <= colorings / 10, "fallback count small");
}

inline void discharging_audits(Ctx& c) {
  auto audit = [&](const PlaneGraph& pg, const std::string& name) {
    Rational lm = local_min(pg);
    ChargeLedger l5 = apply_delta5(
        pg, lm > Rational(3) ? std::optional<Rational>() : Rational(15, 2));
    c.expect(l5.conserved() && l5.flows_consistent(),
             "delta5 conservation on " + name);
    bool faces_zero = true;
    for (const Rational& f : l5.face_final)
      if (!(f == Rational(0))) faces_zero = false;
    c.expect(faces_zero, "delta5 faces end at zero on " + name);

    ChargeLedger l6 = apply_delta6(pg);
    c.expect(l6.conserved() && l6.flows_consistent(),
             "delta6 conservation on " + name);
    bool f4_zero = true;
    for (int f = 0; f < pg.face_count(); ++f)
      if (pg.face_degree(f) >= 4 && !(l6.face_final[f] == Rational(0)))
        f4_zero = false;
    c.expect(f4_zero, "delta6 4+-faces end at zero on " + name);
  };
  for (int m = 4; m <= 6; ++m)
    audit(gen_quintic_T(m).subdivided, "T_" + std::to_string(m));
  for (int n = 3; n <= 8; ++n) {
    PrismFamily pf = gen_prism_G(n);
    audit(pf.cubic, "prism " + std::to_string(n));
    audit(pf.subdivided, "G_" + std::to_string(n));
    QuarticFamily qf = gen_quartic_H(n);
    audit(qf.quartic, "quartic " + std::to_string(n));
    audit(qf.subdivided, "H_" + std::to_string(n));
  }
  c.expect(delta6_star_value(gen_quintic_T(4).subdivided) == Rational(-9),
           "delta6 star value of T_4 is -9");
}

inline void supporting_inequalities(Ctx& c) {
  c.expect(!claim2_inequality(Rational(5)), "claim2 false at r=5");
  c.expect(claim2_inequality(Rational(27, 5)), "claim2 true at r=27/5");
  c.expect(claim2_value(Rational(27, 5)) == Rational(8, 25),
           "claim2 value 8/25 at r=27/5");
  c.expect(claim2_inequality(Rational(15, 2)), "claim2 true at r=15/2");
  c.expect(claim1_lower_bound(2, Rational(8), false).value == Rational(14, 39),
           "claim1(k=2, r=8) = 14/39");
  c.expect(claim1_lower_bound(5, Rational(8), false).value ==
               Rational(-10, 21),
           "claim1(k=5, r=8) = -10/21");
}

inline std::vector<std::pair<std::string, Graph>> critical_instances() {
  std::vector<std::pair<std::string, Graph>> out;
  for (int n = 3; n <= 11; n += 2)
    out.emplace_back("C_" + std::to_string(n), gen_odd_cycle(n).graph());
  for (int n = 3; n <= 6; ++n)
    out.emplace_back("G_" + std::to_string(n),
                     gen_prism_G(n).subdivided.graph());
  for (int n = 3; n <= 5; ++n)
    out.emplace_back("H_" + std::to_string(n),
                     gen_quartic_H(n).subdivided.graph());
  out.emplace_back("T_4", gen_quintic_T(4).subdivided.graph());
  return out;
}

inline void lemma_suites(Ctx& c) {
  for (const auto& [name, g] : critical_instances()) {
    c.expect(is_critical(g), name + " is critical");
    c.expect(check_lemma1(g).holds, "lemma1 on " + name);
    c.expect(check_val(g).holds, "adjacency lemma on " + name);
    c.expect(check_zhang(g).holds, "zhang on " + name);
    c.expect(check_sz(g).holds, "sanders-zhao on " + name);
  }
  // negative controls: a pendant vertex breaks lemma1/val, the house
  // graph breaks zhang, K4 minus an edge breaks sanders-zhao
  Graph g3 = gen_prism_G(3).subdivided.graph();
  std::vector<std::pair<int, int>> pe;
  for (const Edge& f : g3.edges()) pe.emplace_back(f.u, f.v);
  pe.emplace_back(1, g3.vertex_count() + 1);
  Graph pendant = Graph::from_edges(g3.vertex_count() + 1, pe);
  c.expect(!check_lemma1(pendant).holds &&
               !check_lemma1(pendant).violations.empty(),
           "lemma1 control produces violations");
  c.expect(!check_val(pendant).holds, "adjacency lemma control violations");
  Graph house =
      Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}});
  c.expect(!check_zhang(house).holds, "zhang control violations");
  Graph k4me = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  c.expect(!check_sz(k4me).holds, "sanders-zhao control violations");
}

inline void bound_checks(Ctx& c) {
  for (int n = 3; n <= 6; ++n) {
    Graph g = gen_prism_G(n).subdivided.graph();
    c.expect(check_edge_bounds(g, 3).holds,
             "edge bounds on G_" + std::to_string(n));
    c.expect(check_global_bound(g, 3).holds,
             "global bound on G_" + std::to_string(n));
  }
  for (int n = 3; n <= 5; ++n) {
    Graph g = gen_quartic_H(n).subdivided.graph();
    c.expect(check_edge_bounds(g, 4).holds,
             "edge bounds on H_" + std::to_string(n));
    c.expect(check_global_bound(g, 4).holds,
             "global bound on H_" + std::to_string(n));
  }
  for (int m = 4; m <= 6; ++m) {
    Graph g = gen_quintic_T(m).subdivided.graph();
    c.expect(check_edge_bounds(g, 5).holds,
             "edge bounds on T_" + std::to_string(m));
    c.expect(check_global_bound(g, 5).holds,
             "global bound on T_" + std::to_string(m));
  }
}

inline void oracle_equivalence(Ctx& c, std::string& extra) {
  long tested = 0;
  for (int n = 2; n <= 7; ++n) {
    std::vector<std::pair<int, int>> all;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
    const int ne = int(all.size());
    for (unsigned long mask = 1; mask < (1ul << ne); ++mask) {
      if (__builtin_popcountl(mask) > 12) continue;
      std::vector<std::pair<int, int>> chosen;
      for (int i = 0; i < ne; ++i)
        if (mask >> i & 1) chosen.push_back(all[i]);
      Graph g = Graph::from_edges(n, chosen);
      bool covers = true;
      for (int v = 1; v <= n; ++v)
        if (g.degree(v) == 0) covers = false;
      if (!covers || !g.is_connected()) continue;
      ++tested;
      if (chromatic_index(g).chromatic_index !=
          brute_force_chromatic_index(g)) {
        c.expect(false, "oracle mismatch on n=" + std::to_string(n) +
                            " mask=" + std::to_string(mask));
        return;
      }
    }
  }
  ++c.checks;
  extra = std::to_string(tested) + " connected graphs agreed";
}

inline void embedding_dependence(Ctx& c, std::string& extra) {
  auto w = find_embedding_spread_witness(8, 100000);
  c.expect(w.has_value(), "witness search");
  if (w) {
    c.expect(w->spread.min < w->spread.max, "witness spread is proper");
    c.expect(w->graph.vertex_count() <= 8, "witness on at most 8 vertices");
    c.expect(connectivity_level(w->graph) >= 2, "witness 2-connected");
    std::ostringstream os;
    os << "witness on " << w->graph.vertex_count() << " vertices, F range ["
       << w->spread.min << ", " << w->spread.max << "]";
    extra = os.str();
  }
}

}  // namespace repro_detail

inline std::vector<CriterionResult> run_acceptance() {
  using namespace repro_detail;
  struct Spec {
    std::string id;
    std::function<void(Ctx&, std::string&)> fn;
  };
  std::vector<Spec> specs = {
      {"1 closed-forms", [](Ctx& c, std::string&) { closed_forms(c); }},
      {"2 local-parameters", [](Ctx& c, std::string&) { local_parameters(c); }},
      {"3 criticality", [](Ctx& c, std::string&) { criticality(c); }},
      {"4 overfullness", [](Ctx& c, std::string&) { overfullness(c); }},
      {"5 certificates", [](Ctx& c, std::string& e) { certificates(c, e); }},
      {"6 discharging-audits",
       [](Ctx& c, std::string&) { discharging_audits(c); }},
      {"7 supporting-inequalities",
       [](Ctx& c, std::string&) { supporting_inequalities(c); }},
      {"8 lemma-suites", [](Ctx& c, std::string&) { lemma_suites(c); }},
      {"9 bound-checks", [](Ctx& c, std::string&) { bound_checks(c); }},
      {"10 oracle-equivalence",
       [](Ctx& c, std::string& e) { oracle_equivalence(c, e); }},
      {"11 embedding-dependence",
       [](Ctx& c, std::string& e) { embedding_dependence(c, e); }},
  };
  std::vector<CriterionResult> results;
  for (const Spec& spec : specs) {
    Ctx ctx;
    std::string extra;
    auto t0 = std::chrono::steady_clock::now();
    try {
      spec.fn(ctx, extra);
    } catch (const std::exception& ex) {
      ctx.pass = false;
      ctx.detail << "exception: " << ex.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    results.push_back({spec.id, ctx.pass, ctx.summary(extra),
                       std::chrono::duration<double>(t1 - t0).count()});
  }
  return results;
}

}  // namespace chromaface
