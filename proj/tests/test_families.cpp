#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "chromaface/face_metrics.hpp"
#include "chromaface/families.hpp"

using namespace chromaface;

namespace {

std::multiset<int> face_degrees(const PlaneGraph& pg) {
  std::multiset<int> out;
  for (const Face& f : pg.faces()) out.insert(f.degree());
  return out;
}

}  // namespace

TEST_CASE("odd cycles") {
  PlaneGraph c5 = gen_odd_cycle(5);
  CHECK(avg_face_degree(c5.graph()) == Rational(5));
  PlaneGraph c9 = gen_odd_cycle(9);
  CHECK(avg_face_degree(c9.graph()) == Rational(9));
  CHECK(avg_face_degree(c9.graph()) > Rational(8));
  CHECK_THROWS_AS(gen_odd_cycle(4), std::invalid_argument);
  CHECK_THROWS_AS(gen_odd_cycle(1), std::invalid_argument);
}

TEST_CASE("prism family closed forms") {
  for (int n = 3; n <= 8; ++n) {
    PrismFamily fam = gen_prism_G(n);
    const Graph& cg = fam.cubic.graph();
    CHECK(cg.vertex_count() == 2 * n);
    CHECK(cg.edge_count() == 3 * n);
    for (int v = 1; v <= 2 * n; ++v) CHECK(cg.degree(v) == 3);
    // every vertex sits on the n-face and two quads
    for (int v = 1; v <= 2 * n; ++v)
      CHECK(local_face_average(fam.cubic, v) == Rational(n + 8, 3));

    const Graph& sg = fam.subdivided.graph();
    CHECK(sg.vertex_count() == 2 * n + 1);
    CHECK(sg.edge_count() == 3 * n + 1);
    CHECK(sg.max_degree() == 3);
    CHECK(fam.subdivided.face_count() == n + 2);
    CHECK(fam.subdivided.face_degree_sum() == 6 * n + 2);
    CHECK(avg_face_degree(sg) == Rational(6) - Rational(10, n + 2));
    CHECK(size_identity_check(sg));
  }
  PrismFamily f3 = gen_prism_G(3);
  CHECK(face_degrees(f3.cubic) == std::multiset<int>{3, 3, 4, 4, 4});
  CHECK(avg_face_degree(f3.subdivided.graph()) == Rational(4));
  CHECK_THROWS_AS(gen_prism_G(2), std::invalid_argument);
}

TEST_CASE("prism family F* via the shortcut") {
  for (int n = 3; n <= 6; ++n) {
    PrismFamily fam = gen_prism_G(n);
    CHECK(connectivity_level(fam.cubic.graph()) == 3);
    auto rot = fam.cubic.rotation();
    auto fs = max_local_face_average(fam.cubic.graph(), 1 << 20, &rot);
    CHECK(fs.value == Rational(n + 8, 3));
    CHECK(fs.status == FStarStatus::exact);
  }
}

TEST_CASE("quartic family closed forms") {
  for (int n = 3; n <= 8; ++n) {
    QuarticFamily fam = gen_quartic_H(n);
    const Graph& qg = fam.quartic.graph();
    CHECK(qg.vertex_count() == 2 * n);
    CHECK(qg.edge_count() == 4 * n);
    for (int v = 1; v <= 2 * n; ++v) CHECK(qg.degree(v) == 4);
    CHECK(connectivity_level(qg) == 3);
    for (int v = 1; v <= 2 * n; ++v)
      CHECK(local_face_average(fam.quartic, v) == Rational(n + 9, 4));

    const Graph& sg = fam.subdivided.graph();
    CHECK(sg.vertex_count() == 2 * n + 1);
    CHECK(sg.edge_count() == 4 * n + 1);
    CHECK(sg.max_degree() == 4);
    CHECK(fam.subdivided.face_count() == 2 * n + 2);
    CHECK(fam.subdivided.face_degree_sum() == 8 * n + 2);
    CHECK(avg_face_degree(sg) == Rational(4) - Rational(3, n + 1));
    CHECK(size_identity_check(sg));
  }
  QuarticFamily f4 = gen_quartic_H(4);
  CHECK(avg_face_degree(f4.subdivided.graph()) == Rational(17, 5));
  auto rot = f4.quartic.rotation();
  auto fs = max_local_face_average(f4.quartic.graph(), 1 << 20, &rot);
  CHECK(fs.value == Rational(13, 4));
  CHECK(fs.status == FStarStatus::exact);
}

TEST_CASE("quintic family closed forms") {
  for (int m = 4; m <= 6; ++m) {
    QuinticFamily fam = gen_quintic_T(m);
    const Graph& rg = fam.regular.graph();
    CHECK(rg.vertex_count() == 8 * m - 8);
    CHECK(rg.edge_count() == 20 * m - 20);
    for (int v = 1; v <= rg.vertex_count(); ++v) CHECK(rg.degree(v) == 5);
    CHECK(connectivity_level(rg) == 3);

    const Graph& sg = fam.subdivided.graph();
    CHECK(sg.vertex_count() == 8 * m - 7);
    CHECK(sg.edge_count() == 20 * m - 19);
    CHECK(fam.subdivided.face_count() == 12 * m - 10);
    CHECK(fam.subdivided.face_degree_sum() == 40 * m - 38);
    CHECK(avg_face_degree(sg) == Rational(10, 3) - Rational(7, 18 * m - 15));
    CHECK(size_identity_check(sg));
    CHECK(local_min(fam.subdivided) == Rational(16, 5));
  }
  QuinticFamily f4 = gen_quintic_T(4);
  CHECK(avg_face_degree(f4.subdivided.graph()) == Rational(61, 19));
  CHECK_THROWS_AS(gen_quintic_T(3), std::invalid_argument);
}

TEST_CASE("families are overfull with equality") {
  for (int n = 3; n <= 8; ++n) {
    const Graph& g = gen_prism_G(n).subdivided.graph();
    CHECK(is_overfull(g));
    CHECK(g.edge_count() == g.max_degree() * (g.vertex_count() / 2) + 1);
    const Graph& h = gen_quartic_H(n).subdivided.graph();
    CHECK(is_overfull(h));
    CHECK(h.edge_count() == h.max_degree() * (h.vertex_count() / 2) + 1);
  }
  for (int m = 4; m <= 6; ++m) {
    const Graph& t = gen_quintic_T(m).subdivided.graph();
    CHECK(is_overfull(t));
    CHECK(t.edge_count() == t.max_degree() * (t.vertex_count() / 2) + 1);
  }
}

TEST_CASE("subdivided T_4 matches the hand counts") {
  QuinticFamily fam = gen_quintic_T(4);
  CHECK(fam.subdivided.graph().vertex_count() == 25);
  CHECK(fam.subdivided.graph().edge_count() == 61);
  CHECK(fam.subdivided.face_count() == 38);
  // 61 = 5*12 + 1: overfull equality
  CHECK(fam.subdivided.graph().edge_count() == 5 * 12 + 1);
}
