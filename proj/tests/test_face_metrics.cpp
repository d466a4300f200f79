#include <catch2/catch_amalgamated.hpp>

#include "chromaface/face_metrics.hpp"
#include "test_util.hpp"

using namespace chromaface;

TEST_CASE("average face degree closed form") {
  CHECK(avg_face_degree(testutil::cycle(5)) == Rational(5));
  // subdivided prism(3): 7 vertices, 10 edges -> 20/5 = 4 = 6 - 10/(3+2)
  Graph g3 = testutil::prism(3).subdivide(Edge(1, 2));
  CHECK(avg_face_degree(g3) == Rational(4));
  CHECK(avg_face_degree(g3) == Rational(6) - Rational(10, 3 + 2));
  // a tree has one face whose walk uses each edge twice
  CHECK(avg_face_degree(testutil::path(4)) == Rational(6));
  CHECK_THROWS_AS(avg_face_degree(Graph::from_edges(4, {{1, 2}, {3, 4}})),
                  std::invalid_argument);
}

TEST_CASE("closed form equals the trace average on every planar rotation") {
  for (const Graph& g :
       {testutil::complete(4), testutil::prism(3), testutil::cycle(6)}) {
    Rational fbar = avg_face_degree(g);
    auto res = enumerate_planar_embeddings(g, 100000);
    REQUIRE(!res.planar.empty());
    for (const RotationSystem& rot : res.planar) {
      PlaneGraph pg(g, rot);
      CHECK(Rational(pg.face_degree_sum(), pg.face_count()) == fbar);
    }
  }
}

TEST_CASE("local averages on the prism") {
  Graph g = testutil::prism(3);
  PlaneGraph pg(g, testutil::prism_rotation(3));
  for (int v = 1; v <= 6; ++v)
    CHECK(local_face_average(pg, v) == Rational(11, 3));
  CHECK(local_min(pg) == Rational(11, 3));
}

TEST_CASE("local averages on C7: both faces have degree 7") {
  Graph c7 = testutil::cycle(7);
  PlaneGraph pg(c7, testutil::cycle_rotation(7));
  for (int v = 1; v <= 7; ++v) CHECK(local_face_average(pg, v) == Rational(7));
}

TEST_CASE("local average rejects graphs that are not 2-connected") {
  // two triangles sharing vertex 3: connected but has a cut vertex
  Graph g =
      Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 3}});
  auto res = enumerate_planar_embeddings(g, 1000);
  REQUIRE(!res.planar.empty());
  PlaneGraph pg(g, res.planar.front());
  CHECK_THROWS_AS(local_face_average(pg, 1), std::invalid_argument);
  CHECK_THROWS_AS(local_min(pg), std::invalid_argument);
}

TEST_CASE("K4 enumeration: 16 rotation systems, 2 planar") {
  auto res = enumerate_planar_embeddings(testutil::complete(4), 100);
  CHECK(res.enumerated == 16);
  CHECK(res.planar.size() == 2);
}

TEST_CASE("C5 has exactly one rotation system and it is planar") {
  auto res = enumerate_planar_embeddings(testutil::cycle(5), 10);
  CHECK(res.enumerated == 1);
  CHECK(res.planar.size() == 1);
}

TEST_CASE("prism(3): 64 rotation systems, 2 planar") {
  auto res = enumerate_planar_embeddings(testutil::prism(3), 64);
  CHECK(res.enumerated == 64);
  CHECK(res.planar.size() == 2);
}

TEST_CASE("enumeration budget errors carry the required count") {
  try {
    enumerate_planar_embeddings(testutil::complete(4), 10);
    FAIL("expected BudgetExceededError");
  } catch (const BudgetExceededError& e) {
    CHECK(e.required == 16);
    CHECK_FALSE(e.saturated);
  }
}

TEST_CASE("F* of the prism via the 3-connected shortcut") {
  Graph g = testutil::prism(3);
  auto rot = testutil::prism_rotation(3);
  auto res = max_local_face_average(g, 1000000, &rot);
  CHECK(res.value == Rational(11, 3));
  CHECK(res.status == FStarStatus::exact);
  // without a hint the shortcut searches for its one embedding
  auto res2 = max_local_face_average(g, 1000000);
  CHECK(res2.value == Rational(11, 3));
  CHECK(res2.status == FStarStatus::exact);
}

TEST_CASE("F* of C9 is 9") {
  auto res = max_local_face_average(testutil::cycle(9), 10);
  CHECK(res.value == Rational(9));
  CHECK(res.status == FStarStatus::exact);
}

TEST_CASE("F* is invariant under relabeling and reflection") {
  Graph g = testutil::prism(4);
  auto rot = testutil::prism_rotation(4);
  auto base = max_local_face_average(g, 1000000, &rot);
  auto refl = rot.reversed();
  auto res = max_local_face_average(g, 1000000, &refl);
  CHECK(res.value == base.value);

  // relabel: swap ids v <-> n+1-v
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> relabeled;
  for (const Edge& e : g.edges())
    relabeled.emplace_back(n + 1 - e.u, n + 1 - e.v);
  Graph h = Graph::from_edges(n, relabeled);
  auto res3 = max_local_face_average(h, 1000000);
  CHECK(res3.value == base.value);
}

TEST_CASE("embedding spread is a point for unique embeddings") {
  auto s1 = embedding_spread(testutil::prism(3), 1000);
  CHECK(s1.min == Rational(11, 3));
  CHECK(s1.max == Rational(11, 3));
  auto s2 = embedding_spread(testutil::cycle(5), 10);
  CHECK(s2.min == Rational(5));
  CHECK(s2.max == Rational(5));
}

TEST_CASE("a 2-connected planar graph with embedding-dependent F exists") {
  // triangle u-w-a plus path u-b-c-w plus a 2-vertex adjacent to u,w;
  // placing that vertex inside the triangle, the quad, or outside moves
  // its local average between 7/2 and 9/2
  Graph g = Graph::from_edges(
      6, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {4, 5}, {5, 2}, {1, 6}, {2, 6}});
  CHECK(connectivity_level(g) == 2);
  auto s = embedding_spread(g, 100000);
  CHECK(s.min < s.max);
  CHECK(s.min == Rational(7, 2));
  CHECK(s.max == Rational(4));
}

TEST_CASE("witness search finds an embedding-dependent graph quickly") {
  auto w = find_embedding_spread_witness(6, 100000);
  REQUIRE(w.has_value());
  CHECK(w->spread.min < w->spread.max);
  CHECK(w->graph.vertex_count() <= 6);
  CHECK(connectivity_level(w->graph) == 2);
}

TEST_CASE("size identity holds across generated graphs") {
  CHECK(size_identity_check(testutil::cycle(5)));
  CHECK(size_identity_check(testutil::prism(3).subdivide(Edge(1, 2))));
  CHECK(size_identity_check(testutil::complete(4)));
}

TEST_CASE("local minimum is at least 3 on 2-connected plane graphs") {
  for (const Graph& g : {testutil::prism(3), testutil::prism(5),
                         testutil::complete(4), testutil::cycle(7)}) {
    for (const RotationSystem& rot :
         enumerate_planar_embeddings(g, 100000).planar)
      CHECK(local_min(PlaneGraph(g, rot)) >= Rational(3));
  }
}

TEST_CASE("CHROMAFACE_BUDGET overrides the default budget") {
  CHECK(default_budget() == 1000000ULL);
  setenv("CHROMAFACE_BUDGET", "42", 1);
  CHECK(default_budget() == 42ULL);
  setenv("CHROMAFACE_BUDGET", "nonsense", 1);
  CHECK_THROWS_AS(default_budget(), std::invalid_argument);
  unsetenv("CHROMAFACE_BUDGET");
  CHECK(default_budget() == 1000000ULL);
}
