#pragma once

// Simple undirected graphs on dense 1-based vertex ids. Graphs are
// immutable after construction; editing operations return new graphs.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromaface {

using VertexId = int;

// Unordered pair of distinct vertices, stored with u < v.
struct Edge {
  VertexId u;
  VertexId v;

  Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b)
      throw std::invalid_argument("Edge: loop at vertex " + std::to_string(a));
  }
  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v;
  }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
  std::string str() const {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  }
};

class Graph {
 public:
  Graph() : n_(0) {}

  // Builds the graph on vertices 1..n with the de-duplicated edge list.
  // Rejects loops and out-of-range endpoints, naming the offending pair.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      if (a < 1 || a > n || b < 1 || b > n || a == b)
        throw std::invalid_argument("Graph: bad edge (" + std::to_string(a) +
                                    "," + std::to_string(b) + ") for n=" +
                                    std::to_string(n));
      edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return int(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(VertexId v) const { return int(neighbors(v).size()); }

  int max_degree() const {
    int d = 0;
    for (int v = 1; v <= n_; ++v) d = std::max(d, int(adj_[v].size()));
    return d;
  }

  bool has_edge(VertexId a, VertexId b) const {
    if (a < 1 || a > n_ || b < 1 || b > n_ || a == b) return false;
    const auto& na = adj_[a];
    return std::binary_search(na.begin(), na.end(), b);
  }

  // Index of an edge in the sorted edge list; certificate formats use
  // these 1-based positions.
  int edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e))
      throw std::invalid_argument("Graph: no edge " + e.str());
    return int(it - edges_.begin()) + 1;
  }

  Graph without_edge(const Edge& e) const {
    if (!has_edge(e.u, e.v))
      throw std::invalid_argument("Graph: no edge " + e.str());
    std::vector<Edge> rest;
    rest.reserve(edges_.size() - 1);
    for (const Edge& f : edges_)
      if (!(f == e)) rest.push_back(f);
    return Graph(n_, std::move(rest));
  }

  // Replaces e by a path of length 2 through the new vertex n+1.
  Graph subdivide(const Edge& e) const {
    if (!has_edge(e.u, e.v))
      throw std::invalid_argument("Graph: cannot subdivide missing edge " +
                                  e.str());
    std::vector<Edge> out;
    out.reserve(edges_.size() + 1);
    int w = n_ + 1;
    for (const Edge& f : edges_)
      if (!(f == e)) out.push_back(f);
    out.emplace_back(e.u, w);
    out.emplace_back(e.v, w);
    std::sort(out.begin(), out.end());
    return Graph(n_ + 1, std::move(out));
  }

  bool is_connected() const {
    if (n_ == 0) return true;
    return reachable_from(1, -1, -1) == n_;
  }

 private:
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    adj_.assign(n_ + 1, {});
    for (const Edge& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  void check_vertex(VertexId v) const {
    if (v < 1 || v > n_)
      throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n_));
  }

  // BFS size of the component of start, treating skip1/skip2 as deleted.
  int reachable_from(int start, int skip1, int skip2) const {
    std::vector<char> seen(n_ + 1, 0);
    if (skip1 > 0) seen[skip1] = 1;
    if (skip2 > 0) seen[skip2] = 1;
    while (start <= n_ && seen[start]) ++start;
    if (start > n_) return 0;
    std::vector<int> stack{start};
    seen[start] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj_[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
    }
    return count;
  }

  friend int connectivity_level(const Graph& g);

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// 0 if disconnected, else the largest c in {1,2,3} such that g is
// c-connected. Capped at 3: only 2- and 3-connectivity matter here
// (2-connectedness of critical graphs, 3-connectedness for embedding
// uniqueness).
inline int connectivity_level(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  if (!g.is_connected()) return 0;
  if (n < 3) return 1;
  for (int v = 1; v <= n; ++v)
    if (g.reachable_from(1 == v ? 2 : 1, v, -1) != n - 1) return 1;
  if (n < 4) return 2;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      int start = 1;
      while (start == a || start == b) ++start;
      if (g.reachable_from(start, a, b) != n - 2) return 2;
    }
  return 3;
}

// Union of open neighborhoods of the members of s. A member of s shows
// up only when adjacent to another member.
inline std::set<VertexId> neighborhood(const Graph& g,
                                       const std::set<VertexId>& s) {
  std::set<VertexId> out;
  for (VertexId v : s)
    for (int u : g.neighbors(v)) out.insert(u);
  return out;
}

// Number of common neighbors w of e's endpoints with w != y.
inline int triangles_through_edge_avoiding(const Graph& g, const Edge& e,
                                           VertexId y) {
  if (!g.has_edge(e.u, e.v))
    throw std::invalid_argument("triangles_through_edge_avoiding: no edge " +
                                e.str());
  if (y == e.u || y == e.v)
    throw std::invalid_argument(
        "triangles_through_edge_avoiding: vertex " + std::to_string(y) +
        " is an endpoint of " + e.str());
  int count = 0;
  for (int w : g.neighbors(e.u))
    if (w != y && g.has_edge(e.v, w)) ++count;
  return count;
}

// ---- edge-list text format ----
// line 1: "p <n> <m>", then m lines "e <u> <v>" (1-based ids).
// Blank lines and '#' comments are ignored.

inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) os << "e " << e.u << " " << e.v << "\n";
}

inline Graph read_edge_list(std::istream& is) {
  std::string line;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> pairs;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      if (n >= 0)
        throw std::runtime_error("edge list: duplicate header at line " +
                                 std::to_string(lineno));
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw std::runtime_error("edge list: bad header at line " +
                                 std::to_string(lineno));
    } else if (tag == "e") {
      int u, v;
      if (!(ls >> u >> v))
        throw std::runtime_error("edge list: bad edge at line " +
                                 std::to_string(lineno));
      pairs.emplace_back(u, v);
    } else {
      throw std::runtime_error("edge list: unknown tag '" + tag +
                               "' at line " + std::to_string(lineno));
    }
  }
  if (n < 0) throw std::runtime_error("edge list: missing 'p' header");
  if (int(pairs.size()) != m)
    throw std::runtime_error("edge list: header says " + std::to_string(m) +
                             " edges, found " + std::to_string(pairs.size()));
  return Graph::from_edges(n, pairs);
}

}  // namespace chromaface
