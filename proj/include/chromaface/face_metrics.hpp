#pragma once

// Face-degree parameters: the average face-degree (closed form via
// Euler's formula), per-vertex local averages and their minimum over a
// plane graph, and the maximum of that minimum over all planar
// embeddings, computed by rotation-system enumeration with a
// 3-connected shortcut.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chromaface/embedding.hpp"
#include "chromaface/graph.hpp"
#include "chromaface/rational.hpp"

namespace chromaface {

struct BudgetExceededError : std::runtime_error {
  BudgetExceededError(unsigned long long required_, bool saturated_,
                      unsigned long long budget_)
      : std::runtime_error("enumeration needs " +
                           std::string(saturated_ ? "more than " : "") +
                           std::to_string(required_) +
                           " rotation systems, budget is " +
                           std::to_string(budget_)),
        required(required_),
        saturated(saturated_) {}
  unsigned long long required;
  bool saturated;  // true when the true count overflowed 64 bits
};

// Default enumeration/search budget; CHROMAFACE_BUDGET overrides.
inline unsigned long long default_budget() {
  if (const char* s = std::getenv("CHROMAFACE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("CHROMAFACE_BUDGET: bad value '" +
                                std::string(s) + "'");
  }
  return 1000000ULL;
}

// F̄(G) = 2|E| / (|E| - |V| + 2). Equals the face-trace average for any
// genus-0 embedding of g.
inline Rational avg_face_degree(const Graph& g) {
  if (!g.is_connected())
    throw std::invalid_argument("avg_face_degree: graph is disconnected");
  long long denom = g.edge_count() - g.vertex_count() + 2;
  if (denom <= 0)
    throw std::invalid_argument(
        "avg_face_degree: |E|-|V|+2 = " + std::to_string(denom) +
        " is not positive (tree-like graph)");
  return Rational(2LL * g.edge_count(), denom);
}

namespace detail {

inline Rational local_avg_nocheck(const PlaneGraph& pg, VertexId v) {
  long long sum = 0;
  const auto& inc = pg.incident_faces(v);
  for (int f : inc) sum += pg.face_degree(f);
  return Rational(sum, std::int64_t(inc.size()));
}

}  // namespace detail

// Mean of the d(v) face degrees at v; needs 2-connectivity so the
// incident faces are pairwise distinct.
inline Rational local_face_average(const PlaneGraph& pg, VertexId v) {
  if (connectivity_level(pg.graph()) < 2)
    throw std::invalid_argument("local_face_average: graph not 2-connected");
  return detail::local_avg_nocheck(pg, v);
}

// F((G,Sigma)): minimum of the local averages over all vertices.
inline Rational local_min(const PlaneGraph& pg) {
  if (connectivity_level(pg.graph()) < 2)
    throw std::invalid_argument("local_min: graph not 2-connected");
  std::optional<Rational> best;
  for (int v = 1; v <= pg.graph().vertex_count(); ++v) {
    Rational a = detail::local_avg_nocheck(pg, v);
    if (!best || a < *best) best = a;
  }
  if (!best) throw std::invalid_argument("local_min: empty graph");
  return *best;
}

namespace detail {

// Odometer over all rotation systems of g: the first neighbor of each
// vertex is fixed, the tail runs through all (d-1)! permutations. The
// trace scratch is flat and reused; only the row of the vertex whose
// digit moved is rebuilt.
class RotationScanner {
 public:
  explicit RotationScanner(const Graph& g, bool quotient_reflection = false)
      : g_(g), n_(g.vertex_count()), m_(g.edge_count()) {
    int qv = 0;
    if (quotient_reflection)
      for (int v = 1; v <= n_; ++v)
        if (g.degree(v) >= 3) { qv = v; break; }
    tails_.resize(n_ + 1);
    for (int v = 1; v <= n_; ++v) {
      const auto& nb = g.neighbors(v);
      std::vector<int> tail(nb.size() > 1 ? nb.begin() + 1 : nb.end(),
                            nb.end());
      auto& list = tails_[v];
      if (tail.empty()) {
        list.push_back({});
      } else {
        do {
          if (v == qv) {
            // one representative per reflection pair
            std::vector<int> rev(tail.rbegin(), tail.rend());
            if (rev < tail) continue;
          }
          list.push_back(tail);
        } while (std::next_permutation(tail.begin(), tail.end()));
      }
    }
    constexpr auto kMax = std::numeric_limits<unsigned long long>::max();
    total_ = 1;
    saturated_ = false;
    for (int v = 1; v <= n_ && !saturated_; ++v) {
      unsigned long long s = tails_[v].size();
      if (total_ > kMax / s) {
        total_ = kMax;
        saturated_ = true;
      } else {
        total_ *= s;
      }
    }
    stride_ = n_ + 1;
    succ_.assign(stride_ * stride_, 0);
    stamp_.assign(stride_ * stride_, 0);
    fdeg_.assign(stride_ * stride_, 0);
    walk_.reserve(2 * m_);
    idx_.assign(n_ + 1, 0);
  }

  unsigned long long total_count() const { return total_; }
  bool count_saturated() const { return saturated_; }

  // Visits rotation systems in odometer order; fn(genus) returns false
  // to stop early. Returns the number of systems visited.
  template <class Fn>
  unsigned long long scan(Fn&& fn) {
    std::fill(idx_.begin(), idx_.end(), 0);
    for (int v = 1; v <= n_; ++v) rebuild_row(v);
    unsigned long long visited = 0;
    for (;;) {
      ++visited;
      if (!fn(trace())) break;
      int v = 1;
      while (v <= n_) {
        if (std::size_t(++idx_[v]) < tails_[v].size()) {
          rebuild_row(v);
          break;
        }
        idx_[v] = 0;
        rebuild_row(v);
        ++v;
      }
      if (v > n_) break;
    }
    return visited;
  }

  // Valid after a genus-0 trace: min over v of (sum of incident face
  // degrees)/d(v), as an unreduced fraction.
  std::pair<long long, long long> local_min_fraction() const {
    long long bn = -1, bd = 1;
    for (int v = 1; v <= n_; ++v) {
      const auto& nb = g_.neighbors(v);
      if (nb.empty()) continue;
      long long s = 0;
      for (int u : nb) s += fdeg_[v * stride_ + u];
      long long d = (long long)nb.size();
      if (bn < 0 || s * bd < bn * d) { bn = s; bd = d; }
    }
    return {bn, bd};
  }

  RotationSystem current_rotation() const {
    std::vector<std::vector<int>> orders(n_ + 1);
    for (int v = 1; v <= n_; ++v) {
      const auto& nb = g_.neighbors(v);
      if (nb.empty()) continue;
      orders[v].push_back(nb[0]);
      const auto& tail = tails_[v][idx_[v]];
      orders[v].insert(orders[v].end(), tail.begin(), tail.end());
    }
    return RotationSystem(std::move(orders));
  }

 private:
  void rebuild_row(int v) {
    const auto& nb = g_.neighbors(v);
    if (nb.empty()) return;
    const auto& tail = tails_[v][idx_[v]];
    int d = int(nb.size());
    // cyc = [nb[0], tail...]
    int prev = nb[0];
    for (int i = 1; i < d; ++i) {
      succ_[v * stride_ + prev] = tail[i - 1];
      prev = tail[i - 1];
    }
    succ_[v * stride_ + prev] = nb[0];
  }

  int trace() {
    ++gen_;
    int faces = 0;
    for (const Edge& e : g_.edges()) {
      for (auto [su, sv] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        if (stamp_[su * stride_ + sv] == gen_) continue;
        walk_.clear();
        int a = su, b = sv;
        do {
          int k = a * stride_ + b;
          stamp_[k] = gen_;
          walk_.push_back(k);
          int w = succ_[b * stride_ + a];
          a = b;
          b = w;
        } while (!(a == su && b == sv));
        int len = int(walk_.size());
        for (int k : walk_) fdeg_[k] = len;
        ++faces;
      }
    }
    return (2 - n_ + m_ - faces) / 2;
  }

  const Graph& g_;
  int n_, m_, stride_ = 0;
  std::vector<std::vector<std::vector<int>>> tails_;
  unsigned long long total_ = 0;
  bool saturated_ = false;
  std::vector<int> succ_;
  std::vector<std::uint32_t> stamp_;
  std::vector<int> fdeg_;
  std::vector<int> walk_;
  std::vector<int> idx_;
  std::uint32_t gen_ = 0;
};

}  // namespace detail

struct EnumerationResult {
  unsigned long long enumerated = 0;  // all rotation systems of g
  std::vector<RotationSystem> planar;  // the genus-0 ones, in scan order
};

// Yields exactly the genus-0 rotation systems of g. No reflection
// quotient: mirror images are reported separately.
inline EnumerationResult enumerate_planar_embeddings(
    const Graph& g, unsigned long long budget) {
  if (!g.is_connected() || g.edge_count() == 0)
    throw std::invalid_argument(
        "enumerate_planar_embeddings: graph must be connected");
  detail::RotationScanner sc(g);
  if (sc.count_saturated() || sc.total_count() > budget)
    throw BudgetExceededError(sc.total_count(), sc.count_saturated(), budget);
  EnumerationResult out;
  out.enumerated = sc.scan([&](int genus) {
    if (genus == 0) out.planar.push_back(sc.current_rotation());
    return true;
  });
  return out;
}

struct Spread {
  Rational min;
  Rational max;
};

// Range of F((G,Sigma)) over all genus-0 rotation systems, folded during
// the scan with a reflection quotient (mirrors carry equal values).
inline Spread embedding_spread(const Graph& g, unsigned long long budget) {
  if (connectivity_level(g) < 2)
    throw std::invalid_argument("embedding_spread: graph not 2-connected");
  detail::RotationScanner sc(g, /*quotient_reflection=*/true);
  if (sc.count_saturated() || sc.total_count() > budget)
    throw BudgetExceededError(sc.total_count(), sc.count_saturated(), budget);
  std::optional<Rational> lo, hi;
  sc.scan([&](int genus) {
    if (genus == 0) {
      auto [num, den] = sc.local_min_fraction();
      Rational f(num, den);
      if (!lo || f < *lo) lo = f;
      if (!hi || f > *hi) hi = f;
    }
    return true;
  });
  if (!lo)
    throw std::invalid_argument("embedding_spread: graph is not planar");
  return {*lo, *hi};
}

enum class FStarStatus { exact, lower_bound };

struct FStarResult {
  Rational value;
  FStarStatus status;
};

namespace detail {

// Suppresses degree-2 vertices; the result decides whether g is a
// subdivision of a 3-connected simple graph (whose embedding is unique
// up to reflection, so one embedding suffices for F*).
inline bool is_subdivision_of_3connected(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> branch;  // vertices of degree >= 3
  for (int v = 1; v <= n; ++v) {
    if (g.degree(v) <= 1) return false;
    if (g.degree(v) >= 3) branch.push_back(v);
  }
  if (branch.empty()) return false;  // a plain cycle
  std::vector<int> rank(n + 1, 0);
  for (std::size_t i = 0; i < branch.size(); ++i) rank[branch[i]] = int(i) + 1;

  std::vector<std::pair<int, int>> chains;
  for (int b : branch)
    for (int first : g.neighbors(b)) {
      // walk through degree-2 vertices until the next branch vertex
      int prev = b, cur = first;
      while (g.degree(cur) == 2) {
        int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                              : g.neighbors(cur)[0];
        prev = cur;
        cur = nxt;
      }
      if (cur == b) return false;  // suppression would create a loop
      if (rank[b] < rank[cur]) chains.emplace_back(rank[b], rank[cur]);
      else if (rank[b] > rank[cur]) chains.emplace_back(rank[cur], rank[b]);
      // rank equal only when cur == b, handled above
    }
  std::sort(chains.begin(), chains.end());
  // every chain was found from both ends: pairs must come in exact twos
  for (std::size_t i = 0; i + 1 < chains.size(); i += 2)
    if (chains[i] != chains[i + 1]) return false;
  std::vector<std::pair<int, int>> uniq;
  for (std::size_t i = 0; i < chains.size(); i += 2) {
    if (!uniq.empty() && uniq.back() == chains[i]) return false;  // parallel
    uniq.push_back(chains[i]);
  }
  Graph suppressed = Graph::from_edges(int(branch.size()), uniq);
  return connectivity_level(suppressed) == 3;
}

inline PlaneGraph first_planar_embedding(const Graph& g,
                                         unsigned long long budget) {
  detail::RotationScanner sc(g);
  std::optional<RotationSystem> found;
  unsigned long long seen = 0;
  sc.scan([&](int genus) {
    ++seen;
    if (genus == 0) {
      found = sc.current_rotation();
      return false;
    }
    return seen < budget;
  });
  if (found) return PlaneGraph(g, *found);
  if (sc.count_saturated() || sc.total_count() > budget)
    throw BudgetExceededError(sc.total_count(), sc.count_saturated(), budget);
  throw std::invalid_argument("graph is not planar");
}

}  // namespace detail

// F*(G) = max of F((G,Sigma)) over genus-0 embeddings.
//
// Strategy ladder:
//   1. 3-connected graphs and subdivisions of 3-connected graphs have a
//      unique embedding up to reflection: one embedding, status exact.
//   2. otherwise enumerate all rotation systems when that fits the
//      budget: exact maximum.
//   3. otherwise fall back to the supplied embedding: lower bound.
inline FStarResult max_local_face_average(
    const Graph& g, unsigned long long budget,
    const RotationSystem* hint = nullptr) {
  if (connectivity_level(g) < 2)
    throw std::invalid_argument(
        "max_local_face_average: graph not 2-connected");

  if (connectivity_level(g) == 3 || detail::is_subdivision_of_3connected(g)) {
    if (hint) {
      PlaneGraph pg(g, *hint);
      return {local_min(pg), FStarStatus::exact};
    }
    // no hint: search for the single embedding, capped by the budget
    PlaneGraph pg = detail::first_planar_embedding(g, budget);
    return {local_min(pg), FStarStatus::exact};
  }

  detail::RotationScanner sc(g, /*quotient_reflection=*/true);
  if (!sc.count_saturated() && sc.total_count() <= budget) {
    std::optional<Rational> best;
    sc.scan([&](int genus) {
      if (genus == 0) {
        auto [num, den] = sc.local_min_fraction();
        Rational f(num, den);
        if (!best || f > *best) best = f;
      }
      return true;
    });
    if (!best)
      throw std::invalid_argument(
          "max_local_face_average: graph is not planar");
    return {*best, FStarStatus::exact};
  }

  if (hint) {
    PlaneGraph pg(g, *hint);
    return {local_min(pg), FStarStatus::lower_bound};
  }
  throw BudgetExceededError(sc.total_count(), sc.count_saturated(), budget);
}

// |E| (F̄ - 2) == F̄ (|V| - 2), cross-multiplied so the check is exact
// even at F̄ = 2. Always true for connected graphs; exposed as a
// self-test.
inline bool size_identity_check(const Graph& g) {
  Rational fbar = avg_face_degree(g);
  return Rational(g.edge_count()) * (fbar - 2) ==
         fbar * Rational(g.vertex_count() - 2);
}

struct SpreadWitness {
  Graph graph;
  Spread spread;
};

// Searches labeled graphs on 4..max_vertices vertices, in deterministic
// order, for a 2-connected planar graph whose F((G,Sigma)) depends on
// the embedding. Dense graphs whose rotation count exceeds
// per_graph_budget are skipped.
inline std::optional<SpreadWitness> find_embedding_spread_witness(
    int max_vertices, unsigned long long per_graph_budget) {
  for (int n = 4; n <= max_vertices; ++n) {
    std::vector<std::pair<int, int>> all_edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) all_edges.emplace_back(u, v);
    const int ne = int(all_edges.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << ne); ++mask) {
      int m = __builtin_popcountll(mask);
      if (m < n || m > 3 * n - 6) continue;  // 2-connected planar range
      std::vector<std::pair<int, int>> chosen;
      chosen.reserve(m);
      for (int i = 0; i < ne; ++i)
        if (mask >> i & 1) chosen.push_back(all_edges[i]);
      Graph g = Graph::from_edges(n, chosen);
      bool deg_ok = true;
      unsigned long long count = 1;
      for (int v = 1; v <= n && deg_ok; ++v) {
        int d = g.degree(v);
        if (d < 2) deg_ok = false;
        for (int i = 2; i < d; ++i) count *= (unsigned long long)i;
        if (count > per_graph_budget) deg_ok = false;
      }
      if (!deg_ok) continue;
      if (connectivity_level(g) != 2) continue;  // 3-connected: no spread
      Spread s{Rational(0), Rational(0)};
      try {
        s = embedding_spread(g, per_graph_budget);
      } catch (const std::invalid_argument&) {
        continue;  // not planar
      }
      if (s.min < s.max) return SpreadWitness{std::move(g), s};
    }
  }
  return std::nullopt;
}

}  // namespace chromaface
