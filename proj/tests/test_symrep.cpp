#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "zk/error.hpp"
#include "zk/symrep.hpp"

using namespace zk;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("partitions and their invariants") {
  const auto ps = partitions(4);
  REQUIRE(ps.size() == 5);
  CHECK(ps.front() == P({4}));
  CHECK(ps.back() == P({1, 1, 1, 1}));
  CHECK(partitions(10).size() == 42);
  CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
  CHECK(P({3, 1}).str() == "(3,1)");
  CHECK(Partition::from_unsorted({1, 3, 2}) == P({3, 2, 1}));
  CHECK(hook_dim(P({3, 1})) == 3);
  CHECK(hook_dim(P({2, 2})) == 2);
  CHECK(hook_dim(P({4, 3, 2})) == 168);
  CHECK(centralizer_order(P({2, 1, 1})) == 4);
  CHECK(class_size(P({2, 2})) == 3);
  CHECK(cycle_type_sign(P({2, 1})) == -1);
  CHECK(cycle_type_of(Permutation::from_cycles(5, {{1, 2}, {3, 4, 5}})) == P({3, 2}));
  CHECK_THROWS_AS(P({1, 2}), Error);
}

TEST_CASE("Murnaghan-Nakayama values") {
  CHECK(mn_character(P({2, 1}), P({1, 1, 1})) == 2);
  CHECK(mn_character(P({2, 1}), P({2, 1})) == 0);
  CHECK(mn_character(P({2, 1}), P({3})) == -1);
  CHECK(mn_character(P({3, 2}), P({5})) == 0);
  CHECK(mn_character(P({3, 1, 1}), P({2, 2, 1})) == -2);
  CHECK(mn_character(P({1, 1, 1, 1}), P({2, 1, 1})) == -1);
}

TEST_CASE("row orthogonality") {
  for (int n = 1; n <= 6; ++n) {
    const auto ps = partitions(n);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        CHECK(inner_product(irreducible_character(a), irreducible_character(b)) ==
              Rational(a == b ? 1 : 0));
      }
    }
  }
}

TEST_CASE("decompose inverts character_of and rejects non-characters") {
  const Decomposition d{{P({3, 1}), 2}, {P({2, 2}), 1}};
  CHECK(decompose(character_of(d, 4)) == d);
  CHECK(decomposition_dim(d) == 8);
  SymClassFunction half = irreducible_character(P({2}));
  for (auto& [mu, v] : half.values) v /= 2;
  try {
    decompose(half);
    FAIL("expected NotACharacter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotACharacter);
  }
}

TEST_CASE("induction from the trivial subgroup is regular") {
  const std::vector<Permutation> h{Permutation::identity(3)};
  const auto reg = induce_to_sym(h, {{h[0], Rational(1)}});
  const Decomposition d = decompose(reg);
  CHECK(d == Decomposition{{P({3}), 1}, {P({2, 1}), 2}, {P({1, 1, 1}), 1}});
}

TEST_CASE("induction from a non-subgroup is rejected") {
  const std::vector<Permutation> h{Permutation::identity(3), Permutation::from_cycles(3, {{1, 2, 3}})};
  CHECK_THROWS_AS(induce_to_sym(h, {{h[0], Rational(1)}, {h[1], Rational(1)}}), Error);
}

TEST_CASE("Pieri agrees with Young-subgroup induction") {
  for (int b = 0; b <= 3; ++b) {
    for (const auto& mu : partitions(b)) {
      for (int m = b; m <= b + 4; ++m) {
        Decomposition pieri;
        for (const auto& nu : pieri_induce(mu, m)) pieri[nu] += 1;
        CHECK(decompose(induce_young(irreducible_character(mu), m)) == pieri);
      }
    }
  }
  auto got = pieri_induce(P({1}), 3);
  CHECK(got == std::vector<Partition>{P({3}), P({2, 1})});
}

TEST_CASE("padding") {
  const auto p = pad(P({1, 1}), 5);
  CHECK(p.realized() == P({3, 1, 1}));
  CHECK(p.str() == "(3,1,1)");
  CHECK(unpad(P({3, 1, 1})) == P({1, 1}));
  CHECK_THROWS_AS(pad(P({3}), 5), Error);
  const Decomposition realized{{P({4, 1}), 1}, {P({3, 1, 1}), 1}};
  const Decomposition padded = to_padded(realized);
  CHECK(padded == Decomposition{{P({1}), 1}, {P({1, 1}), 1}});
  CHECK(weight(padded) == 2);
}
