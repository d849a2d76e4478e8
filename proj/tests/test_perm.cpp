#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zk/error.hpp"
#include "zk/perm.hpp"

using namespace zk;

namespace {

SimplicialComplex square() { return join(skeleton(2, 0), skeleton(2, 0)); }

SimplicialComplex labelled_square() {
  std::vector<VertexLabel> vs;
  for (int i = 1; i <= 4; ++i) vs.push_back(VertexLabel::indexed(i));
  return SimplicialComplex(vs, {{vs[0], vs[1]}, {vs[1], vs[2]}, {vs[2], vs[3]}, {vs[3], vs[0]}});
}

}  // namespace

TEST_CASE("permutation arithmetic") {
  const auto c = Permutation::from_cycles(4, {{1, 2, 3, 4}});
  CHECK(c.images() == std::vector<int>{1, 2, 3, 0});
  CHECK(c.str() == "(1 2 3 4)");
  CHECK(c.sign() == -1);
  CHECK((c * c.inverse()).is_identity());
  CHECK((c * c).cycle_type() == std::vector<int>{2, 2});
  CHECK(Permutation::identity(3).str() == "(1)");
  const auto t = Permutation::from_cycles(4, {{1, 2}});
  CHECK((c * t)(0) == c(t(0)));
  CHECK(t.extended(6).degree() == 6);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), Error);
}

TEST_CASE("group enumeration and caps") {
  CHECK(enumerate_group(PermGroup::symmetric(4).generators, 4, 100).size() == 24);
  CHECK(enumerate_group({}, 3, 10).size() == 1);
  try {
    enumerate_group(PermGroup::symmetric(6).generators, 6, 100);
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("order sign of a subset image") {
  const auto k = labelled_square();
  const auto swap = vertex_map(Permutation::from_cycles(4, {{1, 3}}), k);
  CHECK(order_sign(swap, 0b0101) == -1);
  CHECK(order_sign(swap, 0b0010) == 1);
  const auto rot = vertex_map(Permutation::from_cycles(4, {{1, 2, 3, 4}}), k);
  CHECK(map_subset(rot, 0b1001) == 0b0011);
  CHECK(order_sign(rot, 0b1001) == -1);  // (1,4) -> (2,1)
}

TEST_CASE("square orbit table under C4") {
  const auto k = labelled_square();
  const PermGroup c4(4, {Permutation::from_cycles(4, {{1, 2, 3, 4}})});
  CHECK(is_g_complex(k, c4));
  const auto table = subset_orbit_reps(k, c4);
  std::vector<VertexSet> reps;
  for (const auto& o : table.orbits()) reps.push_back(o.representative);
  CHECK(reps == std::vector<VertexSet>{0, 0b0001, 0b0011, 0b0101, 0b0111, 0b1111});
  const auto& diag = table.orbits()[3];
  CHECK(diag.size == 2);
  CHECK(enumerate_group(diag.stabilizer_generators, 4, 100).size() == 2);
  for (VertexSet j = 0; j < 16; ++j) {
    const auto& o = table.orbits()[table.orbit_of(j)];
    CHECK(act_on_subset(table.transversal(j), o.representative, k) == j);
  }
  CHECK_FALSE(is_g_complex(k, PermGroup(4, {Permutation::from_cycles(4, {{1, 2}})})));
}

TEST_CASE("index action on tagged vertices") {
  const auto k = square();  // vertices 1, 2, 1.1, 2.1
  const auto map = vertex_map(Permutation::from_cycles(2, {{1, 2}}), k);
  for (int p = 0; p < 4; ++p) {
    CHECK(k.vertices()[std::size_t(map[std::size_t(p)])].tag == k.vertices()[std::size_t(p)].tag);
  }
}

TEST_CASE("support split") {
  const auto k = skeleton(5, 0);
  const auto split = support_split(0b00011, k, 5);
  CHECK(split.support == std::vector<int>{1, 2});
  CHECK(split.complement_rank == 3);
  CHECK(enumerate_group(split.finite_part, 5, 100).size() == 2);
  CHECK_THROWS_AS(support_split(0b11111, skeleton(5, 0), 5, 3), Error);
}
