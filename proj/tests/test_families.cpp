#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>

#include "zk/error.hpp"
#include "zk/families.hpp"

using namespace zk;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("family specs") {
  CHECK(FamilySpec::parse("skeleton:1").kind == FamilySpec::Kind::Skeleton);
  CHECK(FamilySpec::parse("join:1,0").ks == std::vector<int>{1, 0});
  CHECK(FamilySpec::parse("vccube").kind == FamilySpec::Kind::VcCubeDual);
  CHECK_THROWS_AS(FamilySpec::parse("cube"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("skeleton:x"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("join:"), Error);
}

TEST_CASE("instances carry Σ_m") {
  const auto inst = instantiate(FamilySpec::skeleton(0), 3);
  CHECK(inst.complex == skeleton(3, 0));
  CHECK(inst.group.degree == 3);
  const auto j = instantiate(FamilySpec::join_skeletons({0, 0}), 2);
  CHECK(j.complex.vertex_count() == 4);
  CHECK(instantiate(FamilySpec::vc_cube_dual(), 2).complex == vc_cube_dual(2));
}

TEST_CASE("structural checks on the standard families") {
  const MRange r{1, 5};
  for (const auto& f : {FamilySpec::skeleton(0), FamilySpec::skeleton(1),
                        FamilySpec::join_skeletons({0, 0}), FamilySpec::vc_cube_dual()}) {
    CAPTURE(f.description);
    CHECK(check_consistent(f, r));
    CHECK(check_r_vertex_stable(f, 1, 2, {2, 5}));
    CHECK(check_r_face_stable(f, 1, 3, {3, 5}));
    CHECK(check_stabiliser_consistent_all(f, 2, r));
  }
  // {0_1, 0_2} is deleted from K_2 but is an edge of K_3.
  CHECK_FALSE(check_r_face_stable(FamilySpec::vc_cube_dual(), 1, 2, {2, 5}));
  CHECK(check_r_face_stable(FamilySpec::skeleton(0), 1, 2, {2, 5}));
  CHECK(check_stabiliser_consistent(FamilySpec::skeleton(0),
                                    {VertexLabel::indexed(1), VertexLabel::indexed(2)}, {2, 6}));
  CHECK_THROWS_AS(check_r_vertex_stable(FamilySpec::skeleton(0), 2, 3, {2, 5}), Error);
}

TEST_CASE("a family that is not vertex-stable") {
  // K_m: a single edge on the last two indices; not consistent and not stable.
  const auto f = FamilySpec::custom_rule("last edge", [](int m) {
    std::vector<VertexLabel> vs;
    for (int i = 1; i <= m; ++i) vs.push_back(VertexLabel::indexed(i));
    if (m < 2) return SimplicialComplex(vs, {{}});
    return SimplicialComplex(vs, {{vs[std::size_t(m - 2)], vs[std::size_t(m - 1)]}});
  });
  CHECK_FALSE(check_consistent(f, {2, 4}));
}

TEST_CASE("exact growth fits") {
  std::vector<std::pair<int, std::uint64_t>> tri;
  for (int m = 2; m <= 8; ++m) tri.push_back({m, std::uint64_t(m * (m - 1) / 2)});
  const auto g = betti_growth(tri);
  CHECK(g.polynomial);
  CHECK(g.degree == 2);
  CHECK(g.coefficients == std::vector<Rational>{Rational(0), Rational(-1, 2), Rational(1, 2)});
  std::vector<std::pair<int, std::uint64_t>> pow2;
  for (int m = 1; m <= 8; ++m) pow2.push_back({m, std::uint64_t{1} << m});
  CHECK_FALSE(betti_growth(pow2).polynomial);
  // Eventually constant after an irregular start.
  const auto e = betti_growth({{1, 7}, {2, 5}, {3, 5}, {4, 5}, {5, 5}});
  CHECK(e.polynomial);
  CHECK(e.degree == 0);
  CHECK(e.tail_start == 2);
}

TEST_CASE("multiplicity scans are thread-independent") {
  const auto f = FamilySpec::skeleton(0);
  const auto one = multiplicity_scan(f, SpherePair::moment_angle(), 4, {4, 8}, {}, 1);
  const auto many = multiplicity_scan(f, SpherePair::moment_angle(), 4, {4, 8}, {}, 4);
  REQUIRE(one.rows.size() == 5);
  for (std::size_t a = 0; a < one.rows.size(); ++a) {
    CHECK(one.rows[a].m == many.rows[a].m);
    CHECK(one.rows[a].table == many.rows[a].table);
    CHECK(one.rows[a].dimension == Integer(one.rows[a].betti));
  }
  CHECK(one.onset == many.onset);
  REQUIRE(one.onset.has_value());
  CHECK(one.onset == 5);
}

TEST_CASE("Betti sequences") {
  const auto seq = betti_sequence(FamilySpec::skeleton(0), SpherePair::moment_angle(), 3, {2, 6});
  REQUIRE(seq.size() == 5);
  CHECK(seq[0] == std::pair<int, std::uint64_t>{2, 1});
  CHECK(seq[4] == std::pair<int, std::uint64_t>{6, 15});
}

TEST_CASE("parallel_for runs everything and rethrows") {
  std::atomic<int> sum{0};
  parallel_for(100, 4, [&](int k) { sum += k; });
  CHECK(sum == 4950);
  CHECK_THROWS_AS(parallel_for(10, 3, [](int k) { require(k != 7, "seven"); }), Error);
}

TEST_CASE("degree-3 tables of m points") {
  const auto s = multiplicity_scan(FamilySpec::skeleton(0), SpherePair::moment_angle(), 3, {3, 7});
  CHECK(s.rows.back().table == Decomposition{{P({}), 1}, {P({1}), 1}, {P({2}), 1}});
}
