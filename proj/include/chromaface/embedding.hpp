#pragma once

// Rotation systems and combinatorial face tracing.
//
// Tracing convention: from dart (u,v) the next dart is (v,w) where w is
// the successor of u in the cyclic rotation at v. For a rotation that
// comes from a plane drawing this walks facial circuits; the genus falls
// out of Euler's formula.

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chromaface/graph.hpp"

namespace chromaface {

class RotationSystem {
 public:
  RotationSystem() = default;

  // orders[v] is the cyclic neighbor order at vertex v (index 0 unused).
  explicit RotationSystem(std::vector<std::vector<int>> orders)
      : orders_(std::move(orders)) {}

  int vertex_count() const { return int(orders_.size()) - 1; }

  const std::vector<int>& at(VertexId v) const {
    if (v < 1 || v >= int(orders_.size()))
      throw std::invalid_argument("RotationSystem: vertex " +
                                  std::to_string(v) + " out of range");
    return orders_[v];
  }

  // Each vertex's cycle must be a permutation of its adjacency set.
  void validate(const Graph& g) const {
    if (vertex_count() != g.vertex_count())
      throw std::invalid_argument(
          "RotationSystem: vertex count mismatch with graph");
    for (int v = 1; v <= g.vertex_count(); ++v) {
      std::vector<int> a = orders_[v];
      std::sort(a.begin(), a.end());
      if (a != g.neighbors(v))
        throw std::invalid_argument(
            "RotationSystem: rotation at vertex " + std::to_string(v) +
            " is not a permutation of its neighbors");
    }
  }

  RotationSystem reversed() const {
    std::vector<std::vector<int>> out = orders_;
    for (auto& cyc : out) std::reverse(cyc.begin(), cyc.end());
    return RotationSystem(std::move(out));
  }

  // Rotation for the subdivision of edge e: the new vertex n+1 carries
  // [e.u, e.v] and replaces the opposite endpoint in each of e's ends.
  RotationSystem subdivided(const Edge& e) const {
    std::vector<std::vector<int>> out = orders_;
    int w = vertex_count() + 1;
    bool found_u = false, found_v = false;
    for (int& x : out[e.u])
      if (x == e.v) { x = w; found_u = true; }
    for (int& x : out[e.v])
      if (x == e.u) { x = w; found_v = true; }
    if (!found_u || !found_v)
      throw std::invalid_argument("RotationSystem: no edge " + e.str());
    out.push_back({e.u, e.v});
    return RotationSystem(std::move(out));
  }

  friend bool operator==(const RotationSystem& a, const RotationSystem& b) {
    return a.orders_ == b.orders_;
  }

 private:
  std::vector<std::vector<int>> orders_;
};

struct Face {
  std::vector<std::pair<int, int>> darts;  // cyclic boundary walk
  int degree() const { return int(darts.size()); }
};

struct FaceTraceResult {
  std::vector<Face> faces;
  int genus;
};

inline FaceTraceResult trace_faces(const Graph& g, const RotationSystem& rot) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("trace_faces: graph has no edges");
  if (!g.is_connected())
    throw std::invalid_argument("trace_faces: graph is disconnected");
  rot.validate(g);

  const int n = g.vertex_count();
  // succ[v][u] = successor of u in the rotation at v
  std::vector<std::map<int, int>> succ(n + 1);
  for (int v = 1; v <= n; ++v) {
    const auto& cyc = rot.at(v);
    int d = int(cyc.size());
    for (int i = 0; i < d; ++i) succ[v][cyc[i]] = cyc[(i + 1) % d];
  }

  auto dart_key = [n](int u, int v) { return u * (n + 1) + v; };
  std::vector<char> visited((n + 1) * (n + 1), 0);

  FaceTraceResult result;
  for (const Edge& e : g.edges()) {
    for (auto [su, sv] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (visited[dart_key(su, sv)]) continue;
      Face f;
      int u = su, v = sv;
      do {
        visited[dart_key(u, v)] = 1;
        f.darts.emplace_back(u, v);
        int w = succ[v].at(u);
        u = v;
        v = w;
      } while (!(u == su && v == sv));
      result.faces.push_back(std::move(f));
    }
  }

  int euler = 2 - n + g.edge_count() - int(result.faces.size());
  if (euler < 0 || euler % 2 != 0)
    throw std::logic_error("trace_faces: impossible Euler characteristic");
  result.genus = euler / 2;
  return result;
}

// A graph together with a rotation system of verified genus 0.
class PlaneGraph {
 public:
  PlaneGraph(Graph g, RotationSystem rot)
      : graph_(std::move(g)), rotation_(std::move(rot)) {
    FaceTraceResult tr = trace_faces(graph_, rotation_);
    if (tr.genus != 0)
      throw std::invalid_argument("PlaneGraph: rotation has genus " +
                                  std::to_string(tr.genus) + ", not 0");
    faces_ = std::move(tr.faces);
    // index: the d(v) faces at v, one per outgoing dart
    const int n = graph_.vertex_count();
    std::map<std::pair<int, int>, int> face_of_dart;
    for (int fi = 0; fi < int(faces_.size()); ++fi)
      for (const auto& d : faces_[fi].darts) face_of_dart[d] = fi;
    incident_faces_.assign(n + 1, {});
    for (int v = 1; v <= n; ++v)
      for (int u : rotation_.at(v))
        incident_faces_[v].push_back(face_of_dart.at({v, u}));
  }

  const Graph& graph() const { return graph_; }
  const RotationSystem& rotation() const { return rotation_; }
  const std::vector<Face>& faces() const { return faces_; }
  int face_count() const { return int(faces_.size()); }
  int face_degree(int f) const { return faces_[f].degree(); }

  // Face ids at v, aligned with the rotation order at v. For 2-connected
  // graphs these are pairwise distinct.
  const std::vector<int>& incident_faces(VertexId v) const {
    if (v < 1 || v > graph_.vertex_count())
      throw std::invalid_argument("PlaneGraph: vertex " + std::to_string(v) +
                                  " out of range");
    return incident_faces_[v];
  }

  long face_degree_sum() const {
    long s = 0;
    for (const Face& f : faces_) s += f.degree();
    return s;
  }

  PlaneGraph subdivided(const Edge& e) const {
    return PlaneGraph(graph_.subdivide(e), rotation_.subdivided(e));
  }

 private:
  Graph graph_;
  RotationSystem rotation_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> incident_faces_;
};

// ---- plane-graph text format ----
// line 1: "pg <n> <m>", then n lines "r <v>: <u1> <u2> ... <ud>" giving
// the cyclic order at v. Blank lines and '#' comments are ignored.

inline void write_plane_graph(std::ostream& os, const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  os << "pg " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (int v = 1; v <= g.vertex_count(); ++v) {
    os << "r " << v << ":";
    for (int u : pg.rotation().at(v)) os << " " << u;
    os << "\n";
  }
}

// Reads the rotation lines and rebuilds the graph from them; symmetry of
// the implied adjacency is validated here, genus by the PlaneGraph
// constructor.
inline std::pair<Graph, RotationSystem> read_rotation_system(
    std::istream& is) {
  std::string line;
  int n = -1, m = -1, lineno = 0;
  std::vector<std::vector<int>> orders;
  while (std::getline(is, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "pg") {
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw std::runtime_error("plane graph: bad header at line " +
                                 std::to_string(lineno));
      orders.assign(n + 1, {});
    } else if (tag == "r") {
      if (n < 0)
        throw std::runtime_error("plane graph: rotation before header");
      std::string vtok;
      ls >> vtok;
      if (!vtok.empty() && vtok.back() == ':') vtok.pop_back();
      int v = std::stoi(vtok);
      if (v < 1 || v > n)
        throw std::runtime_error("plane graph: vertex " + std::to_string(v) +
                                 " out of range at line " +
                                 std::to_string(lineno));
      int u;
      while (ls >> u) orders[v].push_back(u);
    } else {
      throw std::runtime_error("plane graph: unknown tag '" + tag +
                               "' at line " + std::to_string(lineno));
    }
  }
  if (n < 0) throw std::runtime_error("plane graph: missing 'pg' header");

  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v <= n; ++v)
    for (int u : orders[v]) {
      if (u < 1 || u > n)
        throw std::runtime_error("plane graph: neighbor " + std::to_string(u) +
                                 " out of range at vertex " +
                                 std::to_string(v));
      if (v < u) pairs.emplace_back(v, u);
    }
  Graph g = Graph::from_edges(n, pairs);
  if (g.edge_count() != m)
    throw std::runtime_error("plane graph: header says " + std::to_string(m) +
                             " edges, rotations imply " +
                             std::to_string(g.edge_count()));
  RotationSystem rot((std::vector<std::vector<int>>(orders)));
  rot.validate(g);  // catches asymmetric adjacency and duplicates
  return {std::move(g), std::move(rot)};
}

inline PlaneGraph read_plane_graph(std::istream& is) {
  auto [g, rot] = read_rotation_system(is);
  return PlaneGraph(std::move(g), std::move(rot));
}

}  // namespace chromaface
