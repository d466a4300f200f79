#pragma once

// Exact chromatic-index machinery: a backtracking k-edge-colorability
// decision with counting prunes, the fan/alternating-path construction
// for Delta+1 colorings, class 1/2 decisions, criticality and
// overfullness, plus a deliberately plain exhaustive oracle for tiny
// graphs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromaface/graph.hpp"

namespace chromaface {

struct InconclusiveError : std::runtime_error {
  explicit InconclusiveError(unsigned long long budget)
      : std::runtime_error("edge-coloring search hit the node budget of " +
                           std::to_string(budget) +
                           " backtrack nodes; result is inconclusive"),
        nodes(budget) {}
  unsigned long long nodes;
};

inline constexpr unsigned long long kDefaultNodeBudget = 100000000ULL;

struct EdgeColoring {
  int palette = 0;                 // colors come from 1..palette
  std::map<Edge, int> assignment;  // possibly partial
};

// True iff no two edges sharing an endpoint carry the same color.
// Foreign edges or out-of-range colors are caller bugs and throw.
inline bool is_proper(const Graph& g, const EdgeColoring& c) {
  std::vector<std::vector<int>> seen(g.vertex_count() + 1);
  for (const auto& [e, col] : c.assignment) {
    if (!g.has_edge(e.u, e.v))
      throw std::invalid_argument("is_proper: coloring mentions non-edge " +
                                  e.str());
    if (col < 1 || col > c.palette)
      throw std::invalid_argument("is_proper: color " + std::to_string(col) +
                                  " outside palette 1.." +
                                  std::to_string(c.palette));
    for (int v : {e.u, e.v}) {
      for (int other : seen[v])
        if (other == col) return false;
      seen[v].push_back(col);
    }
  }
  return true;
}

namespace detail {

// Backtracking search for a proper total k-coloring. Branching picks an
// uncolored edge with the fewest admissible colors; ties fall back to
// the static order (decreasing endpoint-degree sum, then lexicographic
// endpoint ids), so runs are deterministic. Color symmetry is broken by
// allowing a new color only in first-use order. Two sound prunes:
//   - a vertex whose remaining uncolored edges outnumber its remaining
//     free colors can never finish;
//   - the uncolored edges of each color class form a matching among the
//     vertices still admitting that color, so sum over colors of
//     floor(|admitting vertices|/2) must cover the uncolored edges.
// The second prune is what recognizes overfull graphs at the root.
class ColorSearch {
 public:
  ColorSearch(const Graph& g, int k, unsigned long long node_budget)
      : g_(g), k_(k), budget_(node_budget) {
    if (k < 1 || k > 30)
      throw std::invalid_argument("k_colorable: palette size " +
                                  std::to_string(k) + " out of range 1..30");
    const int n = g.vertex_count();
    order_ = g.edges();
    std::stable_sort(order_.begin(), order_.end(),
                     [&](const Edge& a, const Edge& b) {
                       int da = g.degree(a.u) + g.degree(a.v);
                       int db = g.degree(b.u) + g.degree(b.v);
                       if (da != db) return da > db;
                       return a < b;
                     });
    used_.assign(n + 1, 0u);
    uncolored_deg_.assign(n + 1, 0);
    for (int v = 1; v <= n; ++v) uncolored_deg_[v] = g.degree(v);
    colors_.assign(order_.size(), 0);
  }

  std::optional<EdgeColoring> run() {
    nodes_ = 0;
    if (!counting_ok(order_.size())) return std::nullopt;
    if (!dfs(order_.size(), 0)) return std::nullopt;
    EdgeColoring out;
    out.palette = k_;
    for (std::size_t i = 0; i < order_.size(); ++i)
      out.assignment[order_[i]] = colors_[i];
    return out;
  }

 private:
  bool dfs(std::size_t remaining, int max_used) {
    if (remaining == 0) return true;
    const unsigned full = (1u << k_) - 1;
    // most-constrained uncolored edge; first static index on ties
    int pick = -1, best = k_ + 1;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (colors_[i] != 0) continue;
      int a = __builtin_popcount(~(used_[order_[i].u] | used_[order_[i].v]) &
                                 full);
      if (a < best) {
        best = a;
        pick = int(i);
        if (a == 0) return false;
      }
    }
    const Edge& e = order_[pick];
    unsigned avail = ~(used_[e.u] | used_[e.v]) & full;
    int cap = std::min(max_used + 1, k_);
    avail &= (1u << cap) - 1;
    while (avail) {
      int c = __builtin_ctz(avail);
      avail &= avail - 1;
      if (++nodes_ > budget_) throw InconclusiveError(budget_);
      used_[e.u] |= 1u << c;
      used_[e.v] |= 1u << c;
      --uncolored_deg_[e.u];
      --uncolored_deg_[e.v];
      colors_[pick] = c + 1;
      bool ok = vertex_ok(e.u) && vertex_ok(e.v) && counting_ok(remaining - 1) &&
                dfs(remaining - 1, std::max(max_used, c + 1));
      if (ok) return true;
      colors_[pick] = 0;
      used_[e.u] &= ~(1u << c);
      used_[e.v] &= ~(1u << c);
      ++uncolored_deg_[e.u];
      ++uncolored_deg_[e.v];
    }
    return false;
  }

  bool vertex_ok(int v) const {
    return uncolored_deg_[v] + __builtin_popcount(used_[v]) <= k_;
  }

  bool counting_ok(std::size_t remaining) const {
    if (remaining == 0) return true;
    int cnt[32] = {0};
    for (int v = 1; v <= g_.vertex_count(); ++v) {
      if (uncolored_deg_[v] == 0) continue;
      unsigned avail = ~used_[v] & ((1u << k_) - 1);
      while (avail) {
        ++cnt[__builtin_ctz(avail)];
        avail &= avail - 1;
      }
    }
    long long capacity = 0;
    for (int c = 0; c < k_; ++c) capacity += cnt[c] / 2;
    return capacity >= (long long)remaining;
  }

  const Graph& g_;
  int k_;
  unsigned long long budget_;
  unsigned long long nodes_ = 0;
  std::vector<Edge> order_;
  std::vector<unsigned> used_;
  std::vector<int> uncolored_deg_;
  std::vector<int> colors_;
};

}  // namespace detail

// Decides k-edge-colorability; the witness is a proper total coloring.
// Deterministic given the fixed edge order. Throws InconclusiveError if
// the node budget runs out before a decision.
inline std::optional<EdgeColoring> k_colorable(
    const Graph& g, int k, unsigned long long node_budget = kDefaultNodeBudget) {
  if (g.edge_count() == 0) return EdgeColoring{k, {}};
  return detail::ColorSearch(g, k, node_budget).run();
}

// ---- Delta+1 construction (fan rotation + alternating path) ----

namespace detail {

class FanColorer {
 public:
  explicit FanColorer(const Graph& g)
      : g_(g), kk_(g.max_degree() + 1), at_(g.vertex_count() + 1,
                                            std::vector<int>(kk_ + 1, 0)) {}

  EdgeColoring run() {
    for (const Edge& e : g_.edges()) color_edge(e.u, e.v);
    EdgeColoring out;
    out.palette = kk_;
    for (const Edge& e : g_.edges()) out.assignment[e] = color_.at(e);
    return out;
  }

 private:
  int free_color(int v) const {
    for (int c = 1; c <= kk_; ++c)
      if (at_[v][c] == 0) return c;
    throw std::logic_error("fan coloring: no free color at vertex " +
                           std::to_string(v));
  }
  bool is_free(int v, int c) const { return at_[v][c] == 0; }

  void set_color(int u, int v, int c) {
    color_[Edge(u, v)] = c;
    at_[u][c] = v;
    at_[v][c] = u;
  }
  void unset_color(int u, int v) {
    int c = color_.at(Edge(u, v));
    color_.erase(Edge(u, v));
    at_[u][c] = 0;
    at_[v][c] = 0;
  }

  void color_edge(int u, int v) {
    // maximal fan of u starting at v
    std::vector<int> fan{v};
    for (;;) {
      int last = fan.back();
      int next = 0;
      for (int c = 1; c <= kk_; ++c) {
        if (!is_free(last, c)) continue;
        int w = at_[u][c];
        if (w != 0 && std::find(fan.begin(), fan.end(), w) == fan.end()) {
          next = w;
          break;
        }
      }
      if (next == 0) break;
      fan.push_back(next);
    }

    int c = free_color(u);
    int d = free_color(fan.back());
    if (!is_free(u, d)) {
      invert_path(u, d, c);
      // the path started with a d-edge at u, so d is free at u now
    }

    // smallest prefix that is still a fan and ends where d is free
    std::size_t j = fan.size();
    for (std::size_t cand = 0; cand < fan.size(); ++cand) {
      if (!is_free(fan[cand], d)) continue;
      bool prefix_ok = true;
      for (std::size_t i = 1; i <= cand && prefix_ok; ++i)
        prefix_ok = is_free(fan[i - 1], color_.at(Edge(u, fan[i])));
      if (prefix_ok) {
        j = cand;
        break;
      }
    }
    if (j == fan.size())
      throw std::logic_error("fan coloring: no rotatable prefix found");

    for (std::size_t i = 0; i < j; ++i) {
      int shifted = color_.at(Edge(u, fan[i + 1]));
      unset_color(u, fan[i + 1]);
      set_color(u, fan[i], shifted);
    }
    set_color(u, fan[j], d);
  }

  // flips the maximal alternating path that starts at u with a d-edge;
  // all path edges are cleared before any is recolored, otherwise the
  // at_ table would be clobbered mid-walk
  void invert_path(int u, int d, int c) {
    std::vector<std::pair<int, int>> path;
    std::vector<int> old_colors;
    int prev = u, cur_color = d;
    while (at_[prev][cur_color] != 0) {
      int nxt = at_[prev][cur_color];
      path.emplace_back(prev, nxt);
      old_colors.push_back(cur_color);
      prev = nxt;
      cur_color = (cur_color == d ? c : d);
    }
    for (const auto& [a, b] : path) unset_color(a, b);
    for (std::size_t i = 0; i < path.size(); ++i)
      set_color(path[i].first, path[i].second,
                old_colors[i] == d ? c : d);
  }

  const Graph& g_;
  int kk_;
  std::vector<std::vector<int>> at_;  // at_[v][c] = neighbor whose edge has c
  std::map<Edge, int> color_;
};

}  // namespace detail

// Proper total coloring with Delta+1 colors.
inline EdgeColoring vizing_plus_one_coloring(const Graph& g) {
  if (g.edge_count() == 0) return EdgeColoring{1, {}};
  EdgeColoring c = detail::FanColorer(g).run();
  if (!is_proper(g, c) || c.assignment.size() != std::size_t(g.edge_count()))
    throw std::logic_error("vizing_plus_one_coloring: produced bad coloring");
  return c;
}

// ---- class decisions ----

enum class GraphClass { class1, class2 };

struct ClassDecision {
  int chromatic_index = 0;
  GraphClass class_label = GraphClass::class1;
  EdgeColoring witness;
};

inline ClassDecision chromatic_index(
    const Graph& g, unsigned long long node_budget = kDefaultNodeBudget) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("chromatic_index: graph has no edges");
  int delta = g.max_degree();
  if (auto w = k_colorable(g, delta, node_budget))
    return {delta, GraphClass::class1, std::move(*w)};
  ClassDecision d{delta + 1, GraphClass::class2, vizing_plus_one_coloring(g)};
  return d;
}

// |V| odd and |E| >= Delta*floor(|V|/2) + 1. Overfull implies class 2.
inline bool is_overfull(const Graph& g) {
  if (g.vertex_count() % 2 == 0) return false;
  long long bound =
      (long long)g.max_degree() * (g.vertex_count() / 2) + 1;
  return g.edge_count() >= bound;
}

struct CriticalityReport {
  bool critical = false;
  bool class2 = false;
  int deletions_colorable = 0;
  int deletions_total = 0;
  std::optional<Edge> failing_edge;  // first deletion that stays class 2
};

// Critical = class 2 and every single-edge deletion is Delta-colorable.
inline CriticalityReport criticality_report(
    const Graph& g, unsigned long long node_budget = kDefaultNodeBudget) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("is_critical: graph has no edges");
  CriticalityReport rep;
  rep.deletions_total = g.edge_count();
  int delta = g.max_degree();
  rep.class2 = !k_colorable(g, delta, node_budget).has_value();
  if (!rep.class2) return rep;
  for (const Edge& e : g.edges()) {
    if (!k_colorable(g.without_edge(e), delta, node_budget)) {
      rep.failing_edge = e;
      return rep;
    }
    ++rep.deletions_colorable;
  }
  rep.critical = true;
  return rep;
}

inline bool is_critical(const Graph& g,
                        unsigned long long node_budget = kDefaultNodeBudget) {
  return criticality_report(g, node_budget).critical;
}

// Exhaustive oracle for tiny graphs: edges in natural order, colors
// tried in canonical first-use order, no degree heuristics and no
// counting prunes. Kept deliberately independent of ColorSearch.
inline int brute_force_chromatic_index(const Graph& g) {
  if (g.edge_count() > 12)
    throw std::invalid_argument(
        "brute_force_chromatic_index: more than 12 edges");
  if (g.edge_count() == 0) return 0;
  const auto& edges = g.edges();
  std::vector<unsigned> used(g.vertex_count() + 1, 0u);
  for (int k = 1;; ++k) {
    std::function<bool(std::size_t, int)> rec = [&](std::size_t i,
                                                    int max_used) -> bool {
      if (i == edges.size()) return true;
      int cap = std::min(max_used + 1, k);
      for (int c = 0; c < cap; ++c) {
        unsigned bit = 1u << c;
        if ((used[edges[i].u] | used[edges[i].v]) & bit) continue;
        used[edges[i].u] |= bit;
        used[edges[i].v] |= bit;
        if (rec(i + 1, std::max(max_used, c + 1))) return true;
        used[edges[i].u] &= ~bit;
        used[edges[i].v] &= ~bit;
      }
      return false;
    };
    if (rec(0, 0)) return k;
  }
}

// ---- coloring file format ----
// header "col <m> <k>", then m lines "<u> <v> <color>".

inline void write_coloring(std::ostream& os, const EdgeColoring& c) {
  os << "col " << c.assignment.size() << " " << c.palette << "\n";
  for (const auto& [e, col] : c.assignment)
    os << e.u << " " << e.v << " " << col << "\n";
}

inline EdgeColoring read_coloring(std::istream& is) {
  std::string line;
  int m = -1, k = -1, lineno = 0;
  EdgeColoring out;
  while (std::getline(is, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (m < 0) {
      std::string tag;
      ls >> tag;
      if (tag != "col" || !(ls >> m >> k) || m < 0 || k < 0)
        throw std::runtime_error("coloring: bad header at line " +
                                 std::to_string(lineno));
      out.palette = k;
    } else {
      int u, v, c;
      if (!(ls >> u >> v >> c))
        throw std::runtime_error("coloring: bad entry at line " +
                                 std::to_string(lineno));
      out.assignment[Edge(u, v)] = c;
    }
  }
  if (m < 0) throw std::runtime_error("coloring: missing 'col' header");
  if (out.assignment.size() != std::size_t(m))
    throw std::runtime_error("coloring: header says " + std::to_string(m) +
                             " entries, found " +
                             std::to_string(out.assignment.size()));
  return out;
}

}  // namespace chromaface
