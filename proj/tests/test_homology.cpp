#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zk/error.hpp"
#include "zk/homology.hpp"
#include "zk/linalg.hpp"

using namespace zk;
using namespace zk::linalg;

namespace {

std::vector<Eigen::Index> idx(std::initializer_list<Eigen::Index> xs) { return xs; }

}  // namespace

TEST_CASE("exact rank, kernel and left inverse") {
  SignMatrix a(3, 3);
  a << 1, 1, 0, 0, 1, 1, 1, 2, 1;
  CHECK(rank(a) == 2);
  const RationalMatrix q = a.cast<Rational>();
  const RationalMatrix ker = kernel_basis(q);
  REQUIRE(ker.cols() == 1);
  CHECK((q * ker).isZero());
  CHECK(independent_columns(q) == idx({0, 1}));
  RationalMatrix b(3, 2);
  b << 1, 0, 0, 2, 1, 1;
  const RationalMatrix li = left_inverse(b);
  CHECK(li * b == RationalMatrix::Identity(2, 2));
  CHECK(rank(SignMatrix(0, 4)) == 0);
}

TEST_CASE("reduced cohomology of small complexes") {
  CHECK(reduced_betti(skeleton(3, 1)) == idx({0, 0, 1}));  // circle
  CHECK(reduced_betti(skeleton(3, 0)) == idx({0, 2}));     // three points
  CHECK(reduced_betti(skeleton(2, -1)) == idx({1}));       // {∅}
  CHECK(reduced_betti(skeleton(4, 3)) == idx({0, 0, 0, 0, 0}));
  CHECK(reduced_betti(skeleton(4, 2)) == idx({0, 0, 0, 1}));
  const auto faces = skeleton(4, 0).faces();
  CHECK(reduced_betti(faces, 0) == idx({1}));
  CHECK(reduced_betti(faces, 0b0110) == idx({0, 1}));
}

TEST_CASE("projection rejects non-cocycles") {
  const FaceIndex f(skeleton(2, 0), 0b11);
  const CochainComplex c = f.cochains();
  CHECK(c.lowest_degree == -1);
  const DegreeCohomology h(c, 0);
  CHECK(h.dim() == 1);
  RationalVector ones = RationalVector::Ones(2);
  CHECK(h.project(ones).isZero());  // the augmentation coboundary
  RationalVector e = RationalVector::Zero(2);
  e(0) = 1;
  CHECK(h.project(e).size() == 1);
  const DegreeCohomology hm(c, -1);
  RationalVector x = RationalVector::Ones(1);
  try {
    hm.project(x);
    FAIL("expected a precondition error");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::Validation);
  }
}

TEST_CASE("swap acts by -1 on the reduced cohomology of two points") {
  const auto k = skeleton(2, 0);
  const auto swap = Permutation::from_cycles(2, {{1, 2}});
  const RationalMatrix m = induced_cohomology_map(swap, k, 0b11, 0);
  REQUIRE(m.rows() == 1);
  CHECK(m(0, 0) == -1);
  CHECK_THROWS_AS(induced_cohomology_map(swap, k, 0b01, 0), Error);
}

TEST_CASE("characters on the circle and on the 2-sphere") {
  const auto tri = skeleton(3, 1);
  const auto elems = std::vector<Permutation>{Permutation::identity(3),
                                              Permutation::from_cycles(3, {{1, 2}}),
                                              Permutation::from_cycles(3, {{1, 2, 3}})};
  const auto chi = character_on_cohomology(tri, 0b111, elems, 1);
  // Σ_3 acts on H̃^1 of the boundary triangle by the sign.
  CHECK(chi.at(elems[0]) == 1);
  CHECK(chi.at(elems[1]) == -1);
  CHECK(chi.at(elems[2]) == 1);
}

TEST_CASE("transport between subsets") {
  const auto k = skeleton(3, 0);
  const auto g = vertex_map(Permutation::from_cycles(3, {{1, 3}}), k);
  const SubcomplexCohomology a(k, 0b011, 0), b(k, 0b110, 0);
  const RationalMatrix t = a.transport(g, b);
  CHECK(t.rows() == 1);
  CHECK(t(0, 0) != 0);
  const SignedPermutation sp = a.cochain_action(g, b.faces());
  CHECK(sp.target.size() == 2);
}

TEST_CASE("cohomology basis") {
  const auto basis = reduced_cohomology(skeleton(4, 1));
  CHECK(basis.lowest_degree() == -1);
  CHECK(basis.dim(1) == 3);
  CHECK(basis.dim(0) == 0);
}

TEST_CASE("Hopf trace identity") {
  const auto k = join(skeleton(3, 0), skeleton(3, 1));
  const PermGroup g(3, {Permutation::from_cycles(3, {{1, 2}}), Permutation::from_cycles(3, {{1, 2, 3}})});
  for (const auto& e : enumerate_group(g.generators, 3, 10)) {
    const auto map = vertex_map(e, k);
    const VertexSet all = k.all_vertices();
    Rational chain = 0, homology = 0;
    for (int p = -1; p <= k.dim(); ++p) {
      const SubcomplexCohomology h(k, all, p);
      const Rational sign = (p + 1) % 2 ? -1 : 1;
      chain += sign * h.cochain_action(map, h.faces()).trace();
      homology += sign * h.trace(map);
    }
    CHECK(chain == homology);
  }
}
