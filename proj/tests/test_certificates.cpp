#include <catch2/catch_amalgamated.hpp>

#include "chromaface/families.hpp"

using namespace chromaface;

TEST_CASE("matching decomposition for m = 4 and m = 5") {
  for (int m : {4, 5}) {
    QuinticFamily fam = gen_quintic_T(m);
    const Graph& T = fam.regular.graph();
    CertificateReport rep = validate_certificates(fam.certs, T);
    INFO("m = " << m);
    CHECK(rep.matchings_disjoint);
    CHECK(rep.matchings_perfect);
    CHECK(rep.union_is_edge_set);
    CHECK(rep.e1_in_all_unions);
    CHECK(rep.unions_cover);
    for (int a = 0; a < 3; ++a) {
      CHECK(rep.union_two_regular[a]);
      CHECK(rep.union_circuit_counts[a] >= 1);
    }
    CHECK(rep.all_ok());
    for (const auto& match : fam.certs.matchings)
      CHECK(match.size() == std::size_t(T.vertex_count() / 2));
  }
}

TEST_CASE("m=4 matchings have 12 edges each") {
  QuinticFamily fam = gen_quintic_T(4);
  std::set<Edge> all;
  for (const auto& match : fam.certs.matchings) {
    CHECK(match.size() == 12);
    all.insert(match.begin(), match.end());
  }
  CHECK(all.size() == 60);
}

TEST_CASE("special edges live on the outer circuit and e1 is subdivided") {
  QuinticFamily fam = gen_quintic_T(4);
  const auto& sp = fam.certs.special;
  REQUIRE(sp.size() == 4);
  // e1 is the edge whose subdivision produced T_m: both replacement
  // edges touch the new vertex
  int w = fam.subdivided.graph().vertex_count();
  CHECK(fam.subdivided.graph().has_edge(sp[0].u, w));
  CHECK(fam.subdivided.graph().has_edge(sp[0].v, w));
  CHECK_FALSE(fam.subdivided.graph().has_edge(sp[0].u, sp[0].v));
  // e2, e3, e4 are untouched
  for (int i = 1; i < 4; ++i)
    CHECK(fam.subdivided.graph().has_edge(sp[i].u, sp[i].v));
}

TEST_CASE("certificate coloring across every deletion of T_4") {
  QuinticFamily fam = gen_quintic_T(4);
  const Graph& sub = fam.subdivided.graph();
  int fallbacks = 0;
  for (const Edge& h : sub.edges()) {
    CertificateColoring cc = certificate_coloring(fam.subdivided, fam.certs, h);
    Graph minus = sub.without_edge(h);
    CHECK(is_proper(minus, cc.coloring));
    CHECK(cc.coloring.assignment.size() == std::size_t(minus.edge_count()));
    CHECK(cc.coloring.palette == 5);
    int maxc = 0;
    for (auto& [e, c] : cc.coloring.assignment) maxc = std::max(maxc, c);
    CHECK(maxc <= 5);
    if (cc.used_fallback) ++fallbacks;
  }
  INFO("fallbacks: " << fallbacks);
  CHECK(fallbacks <= 6);  // expected small; zero is not promised
}

TEST_CASE("certificate coloring handles the special-edge deletions") {
  QuinticFamily fam = gen_quintic_T(5);
  const Graph& sub = fam.subdivided.graph();
  // e2 and e4: the outer-circuit path case
  for (int i : {1, 3}) {
    Edge h = fam.certs.special[i];
    auto cc = certificate_coloring(fam.subdivided, fam.certs, h);
    CHECK(is_proper(sub.without_edge(h), cc.coloring));
  }
  // the two subdivision edges
  int w = sub.vertex_count();
  for (Edge h : {Edge(fam.certs.special[0].u, w), Edge(fam.certs.special[0].v, w)}) {
    auto cc = certificate_coloring(fam.subdivided, fam.certs, h);
    CHECK(is_proper(sub.without_edge(h), cc.coloring));
  }
  CHECK_THROWS_AS(
      certificate_coloring(fam.subdivided, fam.certs, Edge(1, 999)),
      std::invalid_argument);
}
