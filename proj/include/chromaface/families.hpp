#pragma once

// Generators for the critical families: odd cycles, the subdivided
// cubic prism family G_n, the subdivided quartic family H_n, and the
// subdivided quintic family T_m with its nested-circuit embedding and
// the matching certificates used to 5-color T_m minus any edge.
//
// All rotation systems are emitted directly from the nested-annuli
// drawing (counterclockwise order at each vertex); the PlaneGraph
// constructor verifies genus 0.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromaface/coloring.hpp"
#include "chromaface/embedding.hpp"
#include "chromaface/graph.hpp"

namespace chromaface {

inline PlaneGraph gen_odd_cycle(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("gen_odd_cycle: n must be odd and >= 3, got " +
                                std::to_string(n));
  std::vector<std::pair<int, int>> e;
  std::vector<std::vector<int>> rot(n + 1);
  for (int i = 1; i <= n; ++i) {
    e.emplace_back(i, i % n + 1);
    rot[i] = {i % n + 1, (i + n - 2) % n + 1};
  }
  return PlaneGraph(Graph::from_edges(n, e), RotationSystem(rot));
}

struct PrismFamily {
  PlaneGraph cubic;       // two concentric n-cycles joined by spokes
  PlaneGraph subdivided;  // G_n: spoke-adjacent edge x_1 x_2 subdivided
};

// x_i = i on the outer circuit, y_i = n+i on the inner one.
inline PrismFamily gen_prism_G(int n) {
  if (n < 3)
    throw std::invalid_argument("gen_prism_G: n must be >= 3, got " +
                                std::to_string(n));
  std::vector<std::pair<int, int>> e;
  std::vector<std::vector<int>> rot(2 * n + 1);
  for (int i = 1; i <= n; ++i) {
    int xn = i % n + 1, xp = (i + n - 2) % n + 1;
    e.emplace_back(i, xn);
    e.emplace_back(n + i, n + xn);
    e.emplace_back(i, n + i);
    rot[i] = {xn, n + i, xp};
    rot[n + i] = {i, n + xn, n + xp};
  }
  PlaneGraph cubic(Graph::from_edges(2 * n, e), RotationSystem(rot));
  PlaneGraph sub = cubic.subdivided(Edge(1, 2));
  return {std::move(cubic), std::move(sub)};
}

struct QuarticFamily {
  PlaneGraph quartic;     // prism plus chords x_i y_{i+1}
  PlaneGraph subdivided;  // H_n: edge x_1 x_2 subdivided
};

inline QuarticFamily gen_quartic_H(int n) {
  if (n < 3)
    throw std::invalid_argument("gen_quartic_H: n must be >= 3, got " +
                                std::to_string(n));
  std::vector<std::pair<int, int>> e;
  std::vector<std::vector<int>> rot(2 * n + 1);
  for (int i = 1; i <= n; ++i) {
    int xn = i % n + 1, xp = (i + n - 2) % n + 1;
    e.emplace_back(i, xn);
    e.emplace_back(n + i, n + xn);
    e.emplace_back(i, n + i);
    e.emplace_back(i, n + xn);  // chord x_i y_{i+1}
    rot[i] = {xn, n + xn, n + i, xp};
    rot[n + i] = {i, n + xn, n + xp, xp};
  }
  PlaneGraph quartic(Graph::from_edges(2 * n, e), RotationSystem(rot));
  PlaneGraph sub = quartic.subdivided(Edge(1, 2));
  return {std::move(quartic), std::move(sub)};
}

// Matching decomposition of the quintic graph T: five pairwise disjoint
// perfect matchings M1..M5 partitioning E(T), the outer-circuit edges
// e1..e4, and the circuit unions A1..A3 that drive the coloring
// certificates.
struct CertificateBundle {
  int m = 0;                                      // family parameter
  std::array<std::vector<Edge>, 5> matchings;     // M1..M5
  std::vector<Edge> special;                      // e1..e4 on the outer circuit
  std::array<std::vector<Edge>, 3> circuit_unions;  // A1..A3
};

struct QuinticFamily {
  PlaneGraph regular;     // T: 5-regular on 8m-8 vertices
  PlaneGraph subdivided;  // T_m: edge e1 = c_{m,1} c_{m,2} subdivided
  CertificateBundle certs;
};

namespace detail {

// Splits a 2-regular edge set into its two alternating classes per
// component circuit; "forced" edges select which class lands first.
// Components not touching a forced edge are seeded at their
// lowest-indexed edge.
inline std::pair<std::vector<Edge>, std::vector<Edge>> alternate_classes(
    int n, const std::vector<Edge>& edges, const std::vector<Edge>& forced) {
  std::vector<std::vector<std::pair<int, int>>> inc(n + 1);  // (nbr, edge idx)
  for (int i = 0; i < int(edges.size()); ++i) {
    inc[edges[i].u].emplace_back(edges[i].v, i);
    inc[edges[i].v].emplace_back(edges[i].u, i);
  }
  for (int v = 1; v <= n; ++v)
    if (!inc[v].empty() && inc[v].size() != 2)
      throw std::logic_error(
          "alternate_classes: edge set is not 2-regular at vertex " +
          std::to_string(v));

  std::vector<int> cls(edges.size(), -1);
  std::vector<char> edge_forced(edges.size(), 0);
  for (const Edge& f : forced)
    for (int i = 0; i < int(edges.size()); ++i)
      if (edges[i] == f) edge_forced[i] = 1;

  std::vector<char> seen(edges.size(), 0);
  for (int start = 0; start < int(edges.size()); ++start) {
    if (seen[start]) continue;
    // walk the circuit containing edge `start`
    std::vector<int> circuit{start};
    seen[start] = 1;
    int prev_v = edges[start].u, cur_v = edges[start].v;
    for (;;) {
      int next_e = -1, next_v = -1;
      for (auto [w, ei] : inc[cur_v])
        if (!seen[ei]) { next_e = ei; next_v = w; }
      if (next_e < 0) break;
      seen[next_e] = 1;
      circuit.push_back(next_e);
      prev_v = cur_v;
      cur_v = next_v;
    }
    if (circuit.size() % 2 != 0)
      throw std::logic_error("alternate_classes: odd circuit of length " +
                             std::to_string(circuit.size()));
    int anchor = -1;
    for (int pos = 0; pos < int(circuit.size()); ++pos)
      if (edge_forced[circuit[pos]]) {
        if (anchor >= 0 && (pos - anchor) % 2 != 0)
          throw std::logic_error(
              "alternate_classes: forced edges disagree on a circuit");
        if (anchor < 0) anchor = pos;
      }
    if (anchor < 0) {
      // deterministic seed: position of the lowest-indexed edge
      anchor = 0;
      for (int pos = 1; pos < int(circuit.size()); ++pos)
        if (edges[circuit[pos]] < edges[circuit[anchor]]) anchor = pos;
    }
    for (int pos = 0; pos < int(circuit.size()); ++pos)
      cls[circuit[pos]] = (pos - anchor) % 2 == 0 ? 0 : 1;
  }
  std::pair<std::vector<Edge>, std::vector<Edge>> out;
  for (int i = 0; i < int(edges.size()); ++i)
    (cls[i] == 0 ? out.first : out.second).push_back(edges[i]);
  return out;
}

}  // namespace detail

inline QuinticFamily gen_quintic_T(int m) {
  if (m < 4)
    throw std::invalid_argument("gen_quintic_T: m must be >= 4, got " +
                                std::to_string(m));
  const int n = 8 * m - 8;
  auto sq = [](int j) { return (j - 1 + 8) % 4 + 1; };   // 1..4
  auto oc = [](int k) { return (k - 1 + 16) % 8 + 1; };  // 1..8
  // layer vertex ids: inner square, octagons 2..m-1, outer square
  auto c1 = [&](int j) { return sq(j); };
  auto ci = [&](int i, int k) { return 4 + 8 * (i - 2) + oc(k); };
  auto cm = [&](int j) { return 4 + 8 * (m - 2) + sq(j); };

  std::vector<std::pair<int, int>> e;
  for (int j = 1; j <= 4; ++j) {
    e.emplace_back(c1(j), c1(j % 4 + 1));
    e.emplace_back(cm(j), cm(j % 4 + 1));
    for (int t = 2 * j - 1; t <= 2 * j + 1; ++t) e.emplace_back(c1(j), ci(2, t));
    for (int t = 2 * j - 2; t <= 2 * j; ++t) e.emplace_back(ci(m - 1, t), cm(j));
  }
  for (int i = 2; i <= m - 1; ++i)
    for (int k = 1; k <= 8; ++k) e.emplace_back(ci(i, k), ci(i, k % 8 + 1));
  for (int i = 2; i <= m - 2; ++i)
    for (int k = 1; k <= 8; ++k) {
      e.emplace_back(ci(i, k), ci(i + 1, k));
      if (k % 2 == 0) e.emplace_back(ci(i, k), ci(i + 1, k + 1));
    }

  std::vector<std::vector<int>> rot(n + 1);
  for (int j = 1; j <= 4; ++j) {
    rot[c1(j)] = {ci(2, 2 * j), ci(2, 2 * j + 1), c1(j + 1), c1(j - 1),
                  ci(2, 2 * j - 1)};
    rot[cm(j)] = {cm(j + 1), ci(m - 1, 2 * j), ci(m - 1, 2 * j - 1),
                  ci(m - 1, 2 * j - 2), cm(j - 1)};
  }
  for (int k = 1; k <= 8; ++k) {
    // layer 2 looks down at the inner square
    if (k % 2 == 1)
      rot[ci(2, k)] = {ci(3, k), ci(2, k + 1), c1((k + 1) / 2),
                       c1((k - 1) / 2), ci(2, k - 1)};
    else
      rot[ci(2, k)] = {ci(3, k), ci(3, k + 1), ci(2, k + 1), c1(k / 2),
                       ci(2, k - 1)};
    // layer m-1 looks up at the outer square
    if (k % 2 == 1)
      rot[ci(m - 1, k)] = {cm((k + 1) / 2), ci(m - 1, k + 1), ci(m - 2, k),
                           ci(m - 2, k - 1), ci(m - 1, k - 1)};
    else
      rot[ci(m - 1, k)] = {cm((k + 2) / 2), ci(m - 1, k + 1), ci(m - 2, k),
                           ci(m - 1, k - 1), cm(k / 2)};
    for (int i = 3; i <= m - 2; ++i) {
      if (k % 2 == 0)
        rot[ci(i, k)] = {ci(i + 1, k), ci(i + 1, k + 1), ci(i, k + 1),
                         ci(i - 1, k), ci(i, k - 1)};
      else
        rot[ci(i, k)] = {ci(i + 1, k), ci(i, k + 1), ci(i - 1, k),
                         ci(i - 1, k - 1), ci(i, k - 1)};
    }
  }

  PlaneGraph regular(Graph::from_edges(n, e), RotationSystem(rot));
  for (int v = 1; v <= n; ++v)
    if (regular.graph().degree(v) != 5)
      throw std::logic_error("gen_quintic_T: vertex " + std::to_string(v) +
                             " has degree " +
                             std::to_string(regular.graph().degree(v)));

  CertificateBundle certs;
  certs.m = m;
  auto& M = certs.matchings;
  for (int j : {1, 3}) {
    M[0].emplace_back(c1(j), c1(j + 1));  // M1 on the squares
    M[0].emplace_back(cm(j), cm(j + 1));
    M[1].emplace_back(c1(j + 1), c1(j + 2));  // M2 = the other class
    M[1].emplace_back(cm(j + 1), cm(j + 2));
  }
  for (int i = 2; i <= m - 1; ++i)
    for (int k = 1; k <= 8; k += 2) {
      M[0].emplace_back(ci(i, k + 1), ci(i, k + 2));  // contains c_{i,2}c_{i,3}
      M[1].emplace_back(ci(i, k), ci(i, k + 1));
    }
  for (int j = 1; j <= 4; ++j) {
    M[2].emplace_back(c1(j), ci(2, 2 * j + 1));
    M[2].emplace_back(ci(m - 1, 2 * j - 2), cm(j));
  }
  for (int i = 2; i <= m - 2; ++i)
    for (int j = 1; j <= 4; ++j)
      M[2].emplace_back(ci(i, 2 * j), ci(i + 1, 2 * j + 1));

  // leftover edges form even circuits; M4 is forced through c_{1,j}c_{2,2j}
  std::vector<char> used(regular.graph().edge_count() + 1, 0);
  for (int s = 0; s < 3; ++s)
    for (const Edge& f : M[s]) used[regular.graph().edge_index(f)] = 1;
  std::vector<Edge> leftover;
  for (const Edge& f : regular.graph().edges())
    if (!used[regular.graph().edge_index(f)]) leftover.push_back(f);
  std::vector<Edge> forced;
  for (int j = 1; j <= 4; ++j) forced.emplace_back(c1(j), ci(2, 2 * j));
  auto [m4, m5] = detail::alternate_classes(n, leftover, forced);
  M[3] = std::move(m4);
  M[4] = std::move(m5);

  for (int i = 1; i <= 4; ++i)
    certs.special.emplace_back(cm(i), cm(i % 4 + 1));

  // M2' = M2 with the outer square part swapped from {e2,e4} to {e1,e3}
  std::vector<Edge> m2p;
  for (const Edge& f : M[1])
    if (!(f == certs.special[1]) && !(f == certs.special[3])) m2p.push_back(f);
  m2p.push_back(certs.special[0]);
  m2p.push_back(certs.special[2]);

  auto join = [](const std::vector<Edge>& a, const std::vector<Edge>& b) {
    std::vector<Edge> out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
  };
  certs.circuit_unions[0] = join(M[0], M[2]);
  certs.circuit_unions[1] = join(m2p, M[3]);
  certs.circuit_unions[2] = join(m2p, M[4]);

  PlaneGraph subdivided = regular.subdivided(certs.special[0]);
  return {std::move(regular), std::move(subdivided), std::move(certs)};
}

// ---- certificate validation ----

struct CertificateReport {
  bool matchings_disjoint = false;
  bool matchings_perfect = false;   // each M_i covers every vertex once
  bool union_is_edge_set = false;   // M1 ∪ ... ∪ M5 = E(T)
  bool e1_in_all_unions = false;
  bool unions_cover = false;        // A1 ∪ A2 ∪ A3 = E(T) \ {e2,e4}
  std::array<bool, 3> union_two_regular{false, false, false};
  std::array<int, 3> union_circuit_counts{0, 0, 0};
  std::array<bool, 3> union_hamiltonian{false, false, false};

  bool all_ok() const {
    bool ok = matchings_disjoint && matchings_perfect && union_is_edge_set &&
              e1_in_all_unions && unions_cover;
    for (bool b : union_two_regular) ok = ok && b;
    return ok;
  }
};

namespace detail {

// circuits of a 2-regular edge set; each circuit is a vertex sequence
inline std::vector<std::vector<int>> circuits_of(int n,
                                                 const std::vector<Edge>& es) {
  std::vector<std::vector<int>> adj(n + 1);
  for (const Edge& f : es) {
    adj[f.u].push_back(f.v);
    adj[f.v].push_back(f.u);
  }
  std::vector<char> seen(n + 1, 0);
  std::vector<std::vector<int>> out;
  for (int v = 1; v <= n; ++v) {
    if (seen[v] || adj[v].empty()) continue;
    std::vector<int> circ;
    int prev = 0, cur = v;
    while (!seen[cur]) {
      seen[cur] = 1;
      circ.push_back(cur);
      int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
    }
    out.push_back(std::move(circ));
  }
  return out;
}

}  // namespace detail

inline CertificateReport validate_certificates(const CertificateBundle& certs,
                                               const Graph& regular) {
  CertificateReport rep;
  const int n = regular.vertex_count();
  const int mm = regular.edge_count();

  std::vector<int> cover(mm + 1, 0);
  rep.matchings_perfect = true;
  for (const auto& match : certs.matchings) {
    std::vector<char> at(n + 1, 0);
    for (const Edge& f : match) {
      cover[regular.edge_index(f)] += 1;
      at[f.u] += 1;
      at[f.v] += 1;
    }
    for (int v = 1; v <= n; ++v)
      if (at[v] != 1) rep.matchings_perfect = false;
  }
  rep.matchings_disjoint = true;
  rep.union_is_edge_set = true;
  for (int i = 1; i <= mm; ++i) {
    if (cover[i] > 1) rep.matchings_disjoint = false;
    if (cover[i] != 1) rep.union_is_edge_set = false;
  }

  const Edge& e1 = certs.special[0];
  rep.e1_in_all_unions = true;
  for (const auto& a : certs.circuit_unions) {
    bool found = false;
    for (const Edge& f : a)
      if (f == e1) found = true;
    rep.e1_in_all_unions = rep.e1_in_all_unions && found;
  }

  std::vector<char> in_union(mm + 1, 0);
  for (const auto& a : certs.circuit_unions)
    for (const Edge& f : a) in_union[regular.edge_index(f)] = 1;
  rep.unions_cover = true;
  int i2 = regular.edge_index(certs.special[1]);
  int i4 = regular.edge_index(certs.special[3]);
  for (int i = 1; i <= mm; ++i) {
    bool expect = (i != i2 && i != i4);
    if (bool(in_union[i]) != expect) rep.unions_cover = false;
  }

  for (int a = 0; a < 3; ++a) {
    const auto& es = certs.circuit_unions[a];
    std::vector<int> deg(n + 1, 0);
    for (const Edge& f : es) {
      deg[f.u] += 1;
      deg[f.v] += 1;
    }
    rep.union_two_regular[a] = true;
    for (int v = 1; v <= n; ++v)
      if (deg[v] != 2) rep.union_two_regular[a] = false;
    if (rep.union_two_regular[a]) {
      auto circ = detail::circuits_of(n, es);
      rep.union_circuit_counts[a] = int(circ.size());
      rep.union_hamiltonian[a] =
          circ.size() == 1 && int(circ[0].size()) == n;
    }
  }
  return rep;
}

// ---- certificate-driven coloring of T_m - h ----

struct CertificateColoring {
  EdgeColoring coloring;
  bool used_fallback = false;
};

// Proper 5-coloring of T_m - h. The circuit set containing both the
// subdivided edge and h is 2-colored as paths/even circuits, the three
// complementary perfect matchings take the remaining colors. Falls back
// to the search when no circuit set fits (not expected for valid
// bundles, but the construction does not promise it).
inline CertificateColoring certificate_coloring(const PlaneGraph& tm,
                                                const CertificateBundle& certs,
                                                const Edge& h) {
  const Graph& gsub = tm.graph();
  if (!gsub.has_edge(h.u, h.v))
    throw std::invalid_argument("certificate_coloring: no edge " + h.str());
  const int w = gsub.vertex_count();  // the subdivision vertex
  const Edge e1 = certs.special[0];
  const Edge e2 = certs.special[1];
  const Edge e4 = certs.special[3];

  // T-edge corresponding to h
  const bool h_is_sub_edge = (h.v == w);  // h.u < h.v and w is max id
  const Edge h_T = h_is_sub_edge ? e1 : h;

  // maps a T edge onto subdivided-graph edges
  auto map_edge = [&](const Edge& f, std::vector<Edge>& out) {
    if (f == e1) {
      out.emplace_back(e1.u, w);
      out.emplace_back(e1.v, w);
    } else {
      out.push_back(f);
    }
  };

  struct Candidate {
    std::vector<Edge> circuit_set;                 // in T
    std::array<const std::vector<Edge>*, 3> rest;  // perfect matchings in T
  };
  const auto& M = certs.matchings;
  std::vector<Edge> m1p, m2p;  // M1', M2': square classes swapped
  {
    const Edge e3 = certs.special[2];
    for (const Edge& f : M[0])
      if (!(f == e1) && !(f == e3)) m1p.push_back(f);
    m1p.push_back(e2);
    m1p.push_back(e4);
    for (const Edge& f : M[1])
      if (!(f == e2) && !(f == e4)) m2p.push_back(f);
    m2p.push_back(e1);
    m2p.push_back(certs.special[2]);
  }

  std::vector<Candidate> candidates;
  if (h_T == e2 || h_T == e4) {
    // the circuit edges themselves: components are the nested circuits
    std::vector<Edge> b = M[0];
    b.insert(b.end(), M[1].begin(), M[1].end());
    candidates.push_back({std::move(b), {&M[2], &M[3], &M[4]}});
  } else {
    auto contains = [](const std::vector<Edge>& es, const Edge& f) {
      for (const Edge& g : es)
        if (g == f) return true;
      return false;
    };
    if (contains(certs.circuit_unions[0], h_T))
      candidates.push_back({certs.circuit_unions[0], {&M[1], &M[3], &M[4]}});
    if (contains(certs.circuit_unions[1], h_T))
      candidates.push_back({certs.circuit_unions[1], {&m1p, &M[2], &M[4]}});
    if (contains(certs.circuit_unions[2], h_T))
      candidates.push_back({certs.circuit_unions[2], {&m1p, &M[2], &M[3]}});
  }

  for (const Candidate& cand : candidates) {
    // circuit set mapped into T_m, minus h
    std::vector<Edge> set_edges;
    for (const Edge& f : cand.circuit_set) map_edge(f, set_edges);
    std::vector<Edge> remaining;
    for (const Edge& f : set_edges)
      if (!(f == h)) remaining.push_back(f);

    // 2-color component by component; odd circuits sink the candidate
    std::vector<std::vector<std::pair<int, int>>> inc(w + 1);
    for (int i = 0; i < int(remaining.size()); ++i) {
      inc[remaining[i].u].emplace_back(remaining[i].v, i);
      inc[remaining[i].v].emplace_back(remaining[i].u, i);
    }
    EdgeColoring col;
    col.palette = 5;
    bool ok = true;
    std::vector<char> seen(remaining.size(), 0);
    for (int v = 1; v <= w && ok; ++v) {
      if (inc[v].size() == 1) {  // path endpoint
        int prev = v, color = 1;
        auto [nxt, ei] = inc[v][0];
        while (true) {
          if (seen[ei]) break;
          seen[ei] = 1;
          col.assignment[remaining[ei]] = color;
          color = 3 - color;
          int found_e = -1, found_v = -1;
          for (auto [cand_v, cand_e] : inc[nxt])
            if (!seen[cand_e]) { found_e = cand_e; found_v = cand_v; }
          if (found_e < 0) break;
          prev = nxt;
          ei = found_e;
          nxt = found_v;
        }
      }
    }
    for (int start = 0; start < int(remaining.size()) && ok; ++start) {
      if (seen[start]) continue;  // a circuit component
      std::vector<int> circ{start};
      seen[start] = 1;
      int cur = remaining[start].v;
      for (;;) {
        int ne = -1, nv = -1;
        for (auto [cv, ce] : inc[cur])
          if (!seen[ce]) { ne = ce; nv = cv; }
        if (ne < 0) break;
        seen[ne] = 1;
        circ.push_back(ne);
        cur = nv;
      }
      if (circ.size() % 2 != 0) {
        ok = false;  // odd circuit not through h; this set cannot work
        break;
      }
      for (int pos = 0; pos < int(circ.size()); ++pos)
        col.assignment[remaining[circ[pos]]] = pos % 2 == 0 ? 1 : 2;
    }
    if (!ok) continue;

    int next_color = 3;
    for (const std::vector<Edge>* match : cand.rest) {
      std::vector<Edge> mapped;
      for (const Edge& f : *match) map_edge(f, mapped);
      for (const Edge& f : mapped) col.assignment[f] = next_color;
      ++next_color;
    }

    Graph minus = gsub.without_edge(h);
    if (col.assignment.size() == std::size_t(minus.edge_count()) &&
        is_proper(minus, col))
      return {std::move(col), false};
  }

  // paper's construction did not apply cleanly; decide by search
  auto witness = k_colorable(gsub.without_edge(h), 5);
  if (!witness)
    throw std::logic_error(
        "certificate_coloring: fallback search found no 5-coloring");
  return {std::move(*witness), true};
}

// ---- certificate file format ----
// header "cert tm <m>"; then matchings, special edges and circuit
// unions as 1-based indices into the lexicographic edge order of the
// unsubdivided quintic graph:
//   M1 <count> <indices...>   (through M5)
//   E <e1> <e2> <e3> <e4>
//   A1 <count> <indices...>   (through A3)

inline void write_certificates(std::ostream& os, const CertificateBundle& certs,
                               const Graph& regular) {
  os << "cert tm " << certs.m << "\n";
  auto line = [&](const std::string& tag, const std::vector<Edge>& es) {
    os << tag << " " << es.size();
    for (const Edge& e : es) os << " " << regular.edge_index(e);
    os << "\n";
  };
  for (int i = 0; i < 5; ++i)
    line("M" + std::to_string(i + 1), certs.matchings[i]);
  os << "E";
  for (const Edge& e : certs.special) os << " " << regular.edge_index(e);
  os << "\n";
  for (int i = 0; i < 3; ++i)
    line("A" + std::to_string(i + 1), certs.circuit_unions[i]);
}

inline CertificateBundle read_certificates(std::istream& is) {
  std::string line;
  CertificateBundle certs;
  std::vector<Edge> edges;  // resolved from the regenerated graph
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    auto fail = [&](const std::string& why) {
      throw std::runtime_error("cert: " + why + " at line " +
                               std::to_string(lineno));
    };
    auto edge_at = [&](int idx) -> Edge {
      if (idx < 1 || idx > int(edges.size()))
        fail("edge index " + std::to_string(idx) + " out of range");
      return edges[idx - 1];
    };
    if (tag == "cert") {
      std::string kind;
      if (!(ls >> kind >> certs.m) || kind != "tm" || certs.m < 4)
        fail("bad header");
      edges = gen_quintic_T(certs.m).regular.graph().edges();
    } else if (tag[0] == 'M' || tag[0] == 'A') {
      if (edges.empty()) fail("entry before header");
      int slot = tag[1] - '1';
      int count = 0;
      if (tag.size() != 2 || !(ls >> count) || count < 0 ||
          (tag[0] == 'M' && (slot < 0 || slot > 4)) ||
          (tag[0] == 'A' && (slot < 0 || slot > 2)))
        fail("bad set line '" + tag + "'");
      auto& dst = tag[0] == 'M' ? certs.matchings[slot]
                                : certs.circuit_unions[slot];
      int idx = 0;
      while (ls >> idx) dst.push_back(edge_at(idx));
      if (int(dst.size()) != count) fail("count mismatch in " + tag);
    } else if (tag == "E") {
      if (edges.empty()) fail("entry before header");
      int idx = 0;
      while (ls >> idx) certs.special.push_back(edge_at(idx));
      if (certs.special.size() != 4) fail("expected 4 special edges");
    } else {
      fail("unknown tag '" + tag + "'");
    }
  }
  if (certs.m == 0) throw std::runtime_error("cert: missing header");
  return certs;
}

}  // namespace chromaface
