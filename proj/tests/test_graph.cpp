#include <catch2/catch_amalgamated.hpp>
#include <set>
#include <sstream>

#include "chromaface/graph.hpp"
#include "test_util.hpp"

using namespace chromaface;

TEST_CASE("from_edges basics") {
  Graph c5 = testutil::cycle(5);
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edge_count() == 5);
  for (int v = 1; v <= 5; ++v) CHECK(c5.degree(v) == 2);

  Graph k4 = testutil::complete(4);
  CHECK(k4.edge_count() == 6);
  for (int v = 1; v <= 4; ++v) CHECK(k4.degree(v) == 3);

  // duplicates collapse regardless of orientation
  Graph g = Graph::from_edges(3, {{1, 2}, {2, 1}});
  CHECK(g.edge_count() == 1);

  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 4}}), std::invalid_argument);
}

TEST_CASE("handshake holds for assorted graphs") {
  for (const Graph& g : {testutil::cycle(7), testutil::complete(5),
                         testutil::prism(4), testutil::petersen()}) {
    long sum = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) sum += g.degree(v);
    CHECK(sum == 2L * g.edge_count());
  }
}

TEST_CASE("subdivide") {
  Graph c3 = testutil::cycle(3);
  Graph c4 = c3.subdivide(Edge(1, 2));
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.degree(4) == 2);
  CHECK(c4.has_edge(1, 4));
  CHECK(c4.has_edge(2, 4));
  CHECK_FALSE(c4.has_edge(1, 2));

  Graph pr = testutil::prism(3);
  Graph g3 = pr.subdivide(Edge(1, 2));
  CHECK(g3.vertex_count() == 7);
  CHECK(g3.edge_count() == 10);
  CHECK(g3.max_degree() == 3);
  // all degrees except the new vertex untouched
  for (int v = 1; v <= 6; ++v) CHECK(g3.degree(v) == 3);

  CHECK_THROWS_WITH(c3.subdivide(Edge(1, 3)).subdivide(Edge(1, 3)),
                    Catch::Matchers::ContainsSubstring("(1,3)"));
}

TEST_CASE("connectivity level") {
  CHECK(connectivity_level(testutil::cycle(5)) == 2);
  CHECK(connectivity_level(testutil::path(3)) == 1);
  CHECK(connectivity_level(testutil::complete(4)) == 3);
  CHECK(connectivity_level(testutil::prism(3)) == 3);
  CHECK(connectivity_level(testutil::petersen()) == 3);  // capped at 3
  CHECK(connectivity_level(Graph::from_edges(4, {{1, 2}, {3, 4}})) == 0);
  CHECK(connectivity_level(Graph::from_edges(2, {{1, 2}})) == 1);
}

TEST_CASE("connectivity is monotone under edge deletion") {
  Graph g = testutil::prism(4);
  int before = connectivity_level(g);
  for (const Edge& e : g.edges())
    CHECK(connectivity_level(g.without_edge(e)) <= before);
}

TEST_CASE("neighborhood") {
  Graph c5 = testutil::cycle(5);
  CHECK(neighborhood(c5, {1}) == std::set<VertexId>{2, 5});
  Graph k4 = testutil::complete(4);
  CHECK(neighborhood(k4, {1, 2}) == std::set<VertexId>{1, 2, 3, 4});
  Graph st = testutil::star(4);
  CHECK(neighborhood(st, {1}) == std::set<VertexId>{2, 3, 4, 5});
  // neighborhood of a single vertex is exactly its adjacency list
  for (int v = 1; v <= 5; ++v) {
    auto nb = neighborhood(c5, {v});
    std::set<VertexId> adj(c5.neighbors(v).begin(), c5.neighbors(v).end());
    CHECK(nb == adj);
  }
}

TEST_CASE("triangles through an edge avoiding a vertex") {
  Graph k4 = testutil::complete(4);
  CHECK(triangles_through_edge_avoiding(k4, Edge(1, 2), 3) == 1);
  Graph c5 = testutil::cycle(5);
  CHECK(triangles_through_edge_avoiding(c5, Edge(1, 2), 4) == 0);
  Graph k4me = k4.without_edge(Edge(3, 4));
  CHECK(triangles_through_edge_avoiding(k4me, Edge(1, 2), 3) == 1);
  CHECK_THROWS_AS(triangles_through_edge_avoiding(k4, Edge(1, 2), 1),
                  std::invalid_argument);
}

TEST_CASE("edge list format round trip") {
  Graph g = testutil::prism(4);
  std::ostringstream os;
  write_edge_list(os, g);
  std::istringstream is(os.str());
  Graph h = read_edge_list(is);
  CHECK(h.vertex_count() == g.vertex_count());
  CHECK(h.edges() == g.edges());
}

TEST_CASE("edge list format ignores comments and blanks") {
  std::istringstream is(
      "# a comment\n"
      "\n"
      "p 3 2\n"
      "e 1 2\n"
      "  # indented comment\n"
      "e 2 3\n");
  Graph g = read_edge_list(is);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("edge list format errors") {
  std::istringstream a("e 1 2\n");
  CHECK_THROWS_AS(read_edge_list(a), std::runtime_error);
  std::istringstream b("p 3 2\ne 1 2\n");
  CHECK_THROWS_AS(read_edge_list(b), std::runtime_error);
  std::istringstream c("p 3 1\nq 1 2\n");
  CHECK_THROWS_AS(read_edge_list(c), std::runtime_error);
}
