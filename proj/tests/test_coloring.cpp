#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "chromaface/coloring.hpp"
#include "test_util.hpp"

using namespace chromaface;

namespace {

Graph random_graph(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("is_proper") {
  Graph c4 = testutil::cycle(4);
  EdgeColoring alt{2, {{Edge(1, 2), 1}, {Edge(2, 3), 2},
                       {Edge(3, 4), 1}, {Edge(1, 4), 2}}};
  CHECK(is_proper(c4, alt));

  Graph c3 = testutil::cycle(3);
  EdgeColoring bad{2, {{Edge(1, 2), 1}, {Edge(2, 3), 2}, {Edge(1, 3), 2}}};
  CHECK_FALSE(is_proper(c3, bad));

  EdgeColoring foreign{2, {{Edge(1, 4), 1}}};
  CHECK_THROWS_AS(is_proper(c3, foreign), std::invalid_argument);
  EdgeColoring out_of_range{1, {{Edge(1, 2), 2}}};
  CHECK_THROWS_AS(is_proper(c3, out_of_range), std::invalid_argument);
}

TEST_CASE("k_colorable on cycles") {
  CHECK_FALSE(k_colorable(testutil::cycle(5), 2).has_value());
  auto w = k_colorable(testutil::cycle(5), 3);
  REQUIRE(w.has_value());
  CHECK(is_proper(testutil::cycle(5), *w));
  CHECK(w->assignment.size() == 5);
  CHECK(k_colorable(testutil::cycle(4), 2).has_value());
}

TEST_CASE("chromatic index decisions") {
  auto prism = chromatic_index(testutil::prism(3));
  CHECK(prism.chromatic_index == 3);
  CHECK(prism.class_label == GraphClass::class1);
  CHECK(is_proper(testutil::prism(3), prism.witness));

  auto c9 = chromatic_index(testutil::cycle(9));
  CHECK(c9.chromatic_index == 3);
  CHECK(c9.class_label == GraphClass::class2);
  CHECK(is_proper(testutil::cycle(9), c9.witness));

  auto k4 = chromatic_index(testutil::complete(4));
  CHECK(k4.chromatic_index == 3);
  CHECK(k4.class_label == GraphClass::class1);

  auto pet = chromatic_index(testutil::petersen());
  CHECK(pet.chromatic_index == 4);  // the classic class 2 cubic graph
  CHECK(pet.class_label == GraphClass::class2);
}

TEST_CASE("fan construction gives a proper Delta+1 coloring") {
  for (const Graph& g :
       {testutil::cycle(5), testutil::complete(4), testutil::petersen(),
        testutil::prism(4), testutil::star(6)}) {
    EdgeColoring c = vizing_plus_one_coloring(g);
    CHECK(c.palette == g.max_degree() + 1);
    CHECK(is_proper(g, c));
    CHECK(c.assignment.size() == std::size_t(g.edge_count()));
  }
}

TEST_CASE("fan construction on random graphs (property)") {
  for (unsigned seed = 1; seed <= 60; ++seed) {
    int n = 4 + int(seed % 9);
    double p = 0.2 + 0.1 * (seed % 7);
    Graph g = random_graph(n, p, seed);
    if (g.edge_count() == 0) continue;
    EdgeColoring c = vizing_plus_one_coloring(g);
    CHECK(is_proper(g, c));
    CHECK(c.assignment.size() == std::size_t(g.edge_count()));
    int maxc = 0;
    for (auto& [e, col] : c.assignment) maxc = std::max(maxc, col);
    CHECK(maxc <= g.max_degree() + 1);
  }
}

TEST_CASE("overfull") {
  CHECK(is_overfull(testutil::cycle(5)));        // 5 >= 2*2+1
  CHECK_FALSE(is_overfull(testutil::complete(4)));  // even order
  CHECK_FALSE(is_overfull(testutil::prism(3)));
  CHECK(is_overfull(testutil::complete(5)));     // 10 >= 4*2+1
}

TEST_CASE("criticality") {
  CHECK(is_critical(testutil::cycle(5)));
  CHECK(is_critical(testutil::cycle(9)));
  CHECK_FALSE(is_critical(testutil::prism(3)));  // class 1
  auto rep = criticality_report(testutil::cycle(7));
  CHECK(rep.critical);
  CHECK(rep.deletions_colorable == 7);
  // Petersen is class 2 but not critical (delete one spoke: still class 2)
  auto pet = criticality_report(testutil::petersen());
  CHECK(pet.class2);
  CHECK_FALSE(pet.critical);
  CHECK(pet.failing_edge.has_value());
}

TEST_CASE("brute force oracle on named graphs") {
  CHECK(brute_force_chromatic_index(testutil::cycle(5)) == 3);
  CHECK(brute_force_chromatic_index(testutil::cycle(4)) == 2);
  CHECK(brute_force_chromatic_index(testutil::complete(4)) == 3);
  CHECK(brute_force_chromatic_index(testutil::star(5)) == 5);
  CHECK_THROWS_AS(brute_force_chromatic_index(testutil::petersen()),
                  std::invalid_argument);
}

TEST_CASE("oracle agreement on random small graphs") {
  int tested = 0;
  for (unsigned seed = 100; seed < 200; ++seed) {
    Graph g = random_graph(5 + seed % 3, 0.45, seed);
    if (g.edge_count() == 0 || g.edge_count() > 12) continue;
    ++tested;
    CHECK(chromatic_index(g).chromatic_index ==
          brute_force_chromatic_index(g));
  }
  CHECK(tested > 40);
}

TEST_CASE("chromatic index is Delta or Delta+1 and monotone under deletion") {
  for (unsigned seed = 300; seed < 330; ++seed) {
    Graph g = random_graph(6, 0.5, seed);
    if (g.edge_count() == 0) continue;
    auto d = chromatic_index(g);
    int delta = g.max_degree();
    CHECK((d.chromatic_index == delta || d.chromatic_index == delta + 1));
    for (const Edge& e : g.edges()) {
      Graph h = g.without_edge(e);
      if (h.edge_count() == 0) continue;
      CHECK(chromatic_index(h).chromatic_index <= d.chromatic_index);
    }
  }
}

TEST_CASE("node budget produces an explicit inconclusive error") {
  CHECK_THROWS_AS(k_colorable(testutil::petersen(), 3, 5), InconclusiveError);
}

TEST_CASE("the subdivided prism needs four colors") {
  Graph g3 = testutil::prism(3).subdivide(Edge(1, 2));
  CHECK_FALSE(k_colorable(g3, 3).has_value());  // overfull, so class 2
  auto w = k_colorable(g3, 4);
  REQUIRE(w.has_value());
  CHECK(is_proper(g3, *w));
  // overfull implies class 2
  CHECK(is_overfull(g3));
  CHECK(chromatic_index(g3).class_label == GraphClass::class2);
}

TEST_CASE("coloring format round trip") {
  Graph g = testutil::prism(3);
  EdgeColoring c = vizing_plus_one_coloring(g);
  std::ostringstream os;
  write_coloring(os, c);
  std::istringstream is(os.str());
  EdgeColoring back = read_coloring(is);
  CHECK(back.palette == c.palette);
  CHECK(back.assignment == c.assignment);
  CHECK(is_proper(g, back));
}
