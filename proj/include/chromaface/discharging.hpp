#pragma once

// Mechanical execution of the two discharging rule systems on concrete
// plane graphs, with exact-rational ledgers and conservation audits.
// The engines apply the rules literally to any admissible input; the
// deliverable is the audited ledger, not a nonnegativity verdict.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromaface/embedding.hpp"
#include "chromaface/face_metrics.hpp"
#include "chromaface/rational.hpp"

namespace chromaface {

struct ChargeElement {
  enum Kind { vertex, face } kind;
  int id;  // vertex id (1-based) or face index (0-based)

  std::string str() const {
    return (kind == vertex ? "v" : "f") + std::to_string(id);
  }
  friend bool operator==(const ChargeElement& a, const ChargeElement& b) {
    return a.kind == b.kind && a.id == b.id;
  }
  friend bool operator<(const ChargeElement& a, const ChargeElement& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.id < b.id;
  }
};

struct Transfer {
  ChargeElement from;
  ChargeElement to;
  Rational amount;
  std::string rule;
};

struct ChargeLedger {
  std::vector<Rational> vertex_initial;  // index 0 unused
  std::vector<Rational> vertex_final;
  std::vector<Rational> face_initial;
  std::vector<Rational> face_final;
  std::vector<Transfer> transfers;  // ordered by (rule, from, to)

  Rational total_initial() const {
    Rational t(0);
    for (std::size_t v = 1; v < vertex_initial.size(); ++v)
      t += vertex_initial[v];
    for (const Rational& f : face_initial) t += f;
    return t;
  }
  Rational total_final() const {
    Rational t(0);
    for (std::size_t v = 1; v < vertex_final.size(); ++v) t += vertex_final[v];
    for (const Rational& f : face_final) t += f;
    return t;
  }
  bool conserved() const { return total_initial() == total_final(); }

  std::optional<Rational> min_vertex_final() const {
    std::optional<Rational> best;
    for (std::size_t v = 1; v < vertex_final.size(); ++v)
      if (!best || vertex_final[v] < *best) best = vertex_final[v];
    return best;
  }
  std::optional<Rational> min_face_final() const {
    std::optional<Rational> best;
    for (const Rational& f : face_final)
      if (!best || f < *best) best = f;
    return best;
  }

  std::vector<std::pair<ChargeElement, Rational>> negative_final() const {
    std::vector<std::pair<ChargeElement, Rational>> out;
    for (std::size_t v = 1; v < vertex_final.size(); ++v)
      if (vertex_final[v] < Rational(0))
        out.push_back({{ChargeElement::vertex, int(v)}, vertex_final[v]});
    for (std::size_t f = 0; f < face_final.size(); ++f)
      if (face_final[f] < Rational(0))
        out.push_back({{ChargeElement::face, int(f)}, face_final[f]});
    return out;
  }

  // final(x) == initial(x) + inflow(x) - outflow(x), recomputed from the
  // transfer log
  bool flows_consistent() const {
    std::vector<Rational> v(vertex_initial), f(face_initial);
    for (const Transfer& t : transfers) {
      auto& from_slot =
          t.from.kind == ChargeElement::vertex ? v[t.from.id] : f[t.from.id];
      auto& to_slot =
          t.to.kind == ChargeElement::vertex ? v[t.to.id] : f[t.to.id];
      from_slot -= t.amount;
      to_slot += t.amount;
    }
    return v == vertex_final && f == face_final;
  }
};

namespace detail {

inline void sort_transfers(std::vector<Transfer>& ts) {
  std::stable_sort(ts.begin(), ts.end(), [](const Transfer& a,
                                            const Transfer& b) {
    if (a.rule != b.rule) return a.rule < b.rule;
    if (!(a.from == b.from)) return a.from < b.from;
    return a.to < b.to;
  });
}

inline void settle(ChargeLedger& led) {
  led.vertex_final = led.vertex_initial;
  led.face_final = led.face_initial;
  for (const Transfer& t : led.transfers) {
    auto& from = t.from.kind == ChargeElement::vertex
                     ? led.vertex_final[t.from.id]
                     : led.face_final[t.from.id];
    auto& to = t.to.kind == ChargeElement::vertex ? led.vertex_final[t.to.id]
                                                  : led.face_final[t.to.id];
    from -= t.amount;
    to += t.amount;
  }
}

}  // namespace detail

enum class RuleSet { delta5, delta6 };

// Initial charges only, no rules applied.
inline ChargeLedger init_charges(const PlaneGraph& pg, RuleSet rs) {
  const Graph& g = pg.graph();
  ChargeLedger led;
  led.vertex_initial.assign(g.vertex_count() + 1, Rational(0));
  led.face_initial.assign(pg.face_count(), Rational(0));
  if (rs == RuleSet::delta5) {
    for (int v = 1; v <= g.vertex_count(); ++v)
      led.vertex_initial[v] = Rational(g.degree(v) - 4);
    for (int f = 0; f < pg.face_count(); ++f)
      led.face_initial[f] = Rational(pg.face_degree(f) - 4);
  } else {
    for (int v = 1; v <= g.vertex_count(); ++v)
      led.vertex_initial[v] = Rational(-1);
    for (int f = 0; f < pg.face_count(); ++f)
      led.face_initial[f] = Rational(2 * pg.face_degree(f) - 6);
  }
  led.vertex_final = led.vertex_initial;
  led.face_final = led.face_initial;
  if (rs == RuleSet::delta5 && led.total_initial() != Rational(-8))
    throw std::logic_error(
        "init_charges: Euler identity broken, total is not -8");
  return led;
}

// -|V| + sum over faces of (2 d(f) - 6); equals the delta6 initial total.
inline Rational delta6_star_value(const PlaneGraph& pg) {
  Rational t(-pg.graph().vertex_count());
  for (int f = 0; f < pg.face_count(); ++f)
    t += Rational(2 * pg.face_degree(f) - 6);
  return t;
}

// Defaults r to F((G,Sigma)) of the given plane graph when not supplied.
inline ChargeLedger apply_delta5(
    const PlaneGraph& pg, std::optional<Rational> r_opt = std::nullopt) {
  const Graph& g = pg.graph();
  if (g.max_degree() > 5)
    throw std::invalid_argument("apply_delta5: maximum degree " +
                                std::to_string(g.max_degree()) +
                                " exceeds 5");
  Rational r = r_opt ? *r_opt : local_min(pg);
  if (!(r > Rational(3)))
    throw std::invalid_argument("apply_delta5: r = " + r.str() +
                                " must exceed 3");

  const std::int64_t c2 = (Rational(2) * r).ceil();
  const std::int64_t c3 = (Rational(3) * r).ceil();
  const std::int64_t c4 = (Rational(4) * r).ceil();
  const std::int64_t c5 = (Rational(5) * r).ceil();

  ChargeLedger led = init_charges(pg, RuleSet::delta5);

  // R1: every face sends (d(f)-4)/d(f) per incidence; for triangles the
  // amount is negative, i.e. the vertex pays the face
  for (int f = 0; f < pg.face_count(); ++f) {
    int d = pg.face_degree(f);
    Rational amount(d - 4, d);
    for (const auto& dart : pg.faces()[f].darts)
      led.transfers.push_back({{ChargeElement::face, f},
                               {ChargeElement::vertex, dart.first},
                               amount,
                               "R1"});
  }

  auto count_neighbors_of_degree = [&](int v, int deg) {
    int c = 0;
    for (int u : g.neighbors(v))
      if (g.degree(u) == deg) ++c;
    return c;
  };

  for (int y = 1; y <= g.vertex_count(); ++y) {
    if (g.degree(y) != 5) continue;
    bool all_nbrs_4plus = true;
    for (int u : g.neighbors(y))
      if (g.degree(u) < 4) all_nbrs_4plus = false;
    for (int z : g.neighbors(y)) {
      switch (g.degree(z)) {
        case 2:
          led.transfers.push_back(
              {{ChargeElement::vertex, y},
               {ChargeElement::vertex, z},
               Rational(2, 3) + Rational(2, c2 - 3),
               "R2.1"});
          break;
        case 3:
          if (count_neighbors_of_degree(z, 4) > 0)
            led.transfers.push_back({{ChargeElement::vertex, y},
                                     {ChargeElement::vertex, z},
                                     Rational(1, 3) + Rational(2, c3 - 6),
                                     "R2.2.1"});
          else
            led.transfers.push_back(
                {{ChargeElement::vertex, y},
                 {ChargeElement::vertex, z},
                 Rational(2, 9) + Rational(4) / Rational(3 * (c3 - 6)),
                 "R2.2.2"});
          break;
        case 4: {
          int n5 = count_neighbors_of_degree(z, 5);
          if (n5 < 2 || n5 > 4)
            throw std::invalid_argument(
                "apply_delta5: R2.3 undefined, 4-vertex " +
                std::to_string(z) + " has " + std::to_string(n5) +
                " 5-neighbors (needs 2..4)");
          led.transfers.push_back({{ChargeElement::vertex, y},
                                   {ChargeElement::vertex, z},
                                   Rational(4, n5 * (c4 - 9)),
                                   "R2.3"});
          break;
        }
        case 5:
          if (all_nbrs_4plus && count_neighbors_of_degree(z, 2) > 0)
            led.transfers.push_back(
                {{ChargeElement::vertex, y},
                 {ChargeElement::vertex, z},
                 (Rational(4, c5 - 12) + Rational(2, c2 - 3)) / Rational(3),
                 "R2.4"});
          break;
        default:
          break;  // degree 1 vertices receive nothing
      }
    }
  }

  detail::sort_transfers(led.transfers);
  detail::settle(led);
  return led;
}

// ---- delta6 vertex classification ----

enum class VertexClass6 { heavy, bad_light, good_light, neither };

inline const char* vertex_class6_name(VertexClass6 c) {
  switch (c) {
    case VertexClass6::heavy: return "heavy";
    case VertexClass6::bad_light: return "bad_light";
    case VertexClass6::good_light: return "good_light";
    default: return "neither";
  }
}

// Classification reads structure only (degrees and incident face
// lengths); charges never feed back into the predicates.
inline std::vector<VertexClass6> classify_delta6(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  std::vector<VertexClass6> cls(g.vertex_count() + 1, VertexClass6::neither);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    int d = g.degree(v);
    std::vector<int> fs = pg.incident_faces(v);
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    bool has45 = false, has6plus = false;
    int count4plus = 0;
    for (int f : fs) {
      int fd = pg.face_degree(f);
      if (fd == 4 || fd == 5) has45 = true;
      if (fd >= 6) has6plus = true;
      if (fd >= 4) ++count4plus;
    }
    if ((d == 5 || d == 6) && has45) {
      cls[v] = VertexClass6::heavy;
    } else if (d >= 2 && d <= 4 && !has6plus && count4plus <= 1) {
      bool bad = false;
      for (int u : g.neighbors(v))
        if (g.degree(u) + d == 8) bad = true;
      cls[v] = bad ? VertexClass6::bad_light : VertexClass6::good_light;
    }
  }
  return cls;
}

inline ChargeLedger apply_delta6(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  if (g.max_degree() > 6)
    throw std::invalid_argument("apply_delta6: maximum degree " +
                                std::to_string(g.max_degree()) +
                                " exceeds 6");
  ChargeLedger led = init_charges(pg, RuleSet::delta6);
  std::vector<VertexClass6> cls = classify_delta6(pg);

  // R1: every 4+-face sends (2d(f)-6)/d(f) per incidence
  for (int f = 0; f < pg.face_count(); ++f) {
    int d = pg.face_degree(f);
    if (d < 4) continue;
    Rational amount(2 * d - 6, d);
    for (const auto& dart : pg.faces()[f].darts)
      led.transfers.push_back({{ChargeElement::face, f},
                               {ChargeElement::vertex, dart.first},
                               amount,
                               "R1"});
  }

  // R2: heavy vertices pay their light neighbors
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (cls[v] != VertexClass6::heavy) continue;
    for (int u : g.neighbors(v)) {
      if (cls[u] == VertexClass6::bad_light)
        led.transfers.push_back({{ChargeElement::vertex, v},
                                 {ChargeElement::vertex, u},
                                 Rational(3, 10),
                                 "R2"});
      else if (cls[u] == VertexClass6::good_light)
        led.transfers.push_back({{ChargeElement::vertex, v},
                                 {ChargeElement::vertex, u},
                                 Rational(1, 10),
                                 "R2"});
    }
  }

  detail::sort_transfers(led.transfers);
  detail::settle(led);
  return led;
}

// ---- the proofs' supporting inequalities ----

struct Claim1Result {
  Rational value;
  bool supported;  // the claim assumes r >= 15/2
};

// Minimum total a k-vertex receives from its incident faces under the
// delta5 R1 rule: (4-k)/3 - 4/(ceil(rk) - 3k + 3), or with at most two
// incident triangles 1/3 - 4/(ceil(rk) - 4k + 6).
inline Claim1Result claim1_lower_bound(int k, const Rational& r,
                                       bool at_most_two_triangles) {
  if (k < 2 || k > 5)
    throw std::invalid_argument("claim1_lower_bound: k = " +
                                std::to_string(k) + " outside 2..5");
  std::int64_t crk = (r * Rational(k)).ceil();
  std::int64_t denom =
      at_most_two_triangles ? crk - 4 * k + 6 : crk - 3 * k + 3;
  if (denom <= 0)
    throw std::invalid_argument(
        "claim1_lower_bound: nonpositive denominator at r = " + r.str());
  Rational value = at_most_two_triangles
                       ? Rational(1, 3) - Rational(4, denom)
                       : Rational(4 - k, 3) - Rational(4, denom);
  return {value, r >= Rational(15, 2)};
}

inline Rational claim2_value(const Rational& r) {
  return Rational(2) * r * r - Rational(15) * r + Rational(23);
}

// 2r^2 - 15r + 23 >= 0; holds for every r >= 5 + 2/5.
inline bool claim2_inequality(const Rational& r) {
  if (!(r > Rational(0)))
    throw std::invalid_argument("claim2_inequality: r must be positive");
  return claim2_value(r) >= Rational(0);
}

}  // namespace chromaface
