#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "zk/perm.hpp"
#include "zk/scalar.hpp"
#include "zk/simplicial.hpp"

namespace zk {

/// A bounded cochain complex C^lo -> C^{lo+1} -> ... with integer sign
/// coboundaries. coboundary[k] maps degree lo+k to lo+k+1.
struct CochainComplex {
  int lowest_degree = 0;
  std::vector<Eigen::Index> dims;
  std::vector<SignMatrix> coboundary;

  int highest_degree() const { return lowest_degree + int(dims.size()) - 1; }
  Eigen::Index dim(int p) const;
  /// d: C^p -> C^{p+1}, possibly with zero rows or columns at the ends.
  SignMatrix d(int p) const;
  /// Cohomology dimensions by exact rank, indexed from lowest_degree.
  std::vector<Eigen::Index> betti() const;
};

/// Cohomology in a single degree with chosen representative cocycles and a
/// projection from cocycles to coordinates modulo coboundaries.
class DegreeCohomology {
 public:
  DegreeCohomology() = default;
  DegreeCohomology(const CochainComplex& c, int p);

  int degree() const { return degree_; }
  Eigen::Index dim() const { return representatives_.cols(); }
  Eigen::Index cochain_dim() const { return representatives_.rows(); }
  /// Columns are cocycles forming a basis modulo coboundaries.
  const RationalMatrix& representatives() const { return representatives_; }

  bool is_cocycle(const RationalVector& z) const;
  /// Coordinates of the class of `z`; throws if `z` is not a cocycle.
  RationalVector project(const RationalVector& z) const;
  /// Matrix of a cochain map on cohomology, given the map on C^p.
  RationalMatrix induced(const RationalMatrix& cochain_map) const;
  /// Same, into a different target cohomology.
  RationalMatrix induced(const RationalMatrix& cochain_map, const DegreeCohomology& target) const;

 private:
  int degree_ = 0;
  SignMatrix d_out_;                 // d: C^p -> C^{p+1}
  RationalMatrix representatives_;   // n_p x h
  RationalMatrix spanning_;          // [coboundary basis | representatives]
  RationalMatrix left_inverse_;      // left inverse of spanning_
};

/// Signed permutation of a basis: basis element b goes to
/// sign[b] * basis element target[b].
struct SignedPermutation {
  std::vector<Eigen::Index> target;
  std::vector<int> sign;

  RationalMatrix matrix() const;
  RationalMatrix matrix(Eigen::Index target_dim) const;
  Rational trace() const;
  RationalVector apply(const RationalVector& v, Eigen::Index target_dim) const;
};

/// Faces of a full subcomplex K_J as masks over K's vertex positions, grouped
/// by dimension (entry p + 1), with an index lookup.
class FaceIndex {
 public:
  FaceIndex(const SimplicialComplex& k, VertexSet j);
  FaceIndex(const std::vector<VertexSet>& all_faces_of_k, VertexSet j);

  VertexSet subset() const { return subset_; }
  bool is_void() const { return by_dim_.empty(); }
  /// Faces of dimension p; empty outside the range.
  const std::vector<VertexSet>& faces(int p) const;
  int top_dim() const { return int(by_dim_.size()) - 2; }
  Eigen::Index index_of(VertexSet face) const;

  /// Augmented simplicial cochain complex, lowest degree -1, oriented by the
  /// vertex order.
  CochainComplex cochains() const;

 private:
  VertexSet subset_;
  std::vector<std::vector<VertexSet>> by_dim_;
  std::unordered_map<VertexSet, Eigen::Index> index_;
};

/// Coboundary matrices d_p of the augmented complex, p = -1 .. dim - 1.
std::vector<RationalMatrix> coboundary_matrices(const SimplicialComplex& k);

/// Reduced cohomology dimensions of K, indexed by p + 1 (p = -1 .. dim).
std::vector<Eigen::Index> reduced_betti(const SimplicialComplex& k);
/// Reduced cohomology dimensions of K_J from a precomputed face list of K.
std::vector<Eigen::Index> reduced_betti(const std::vector<VertexSet>& faces_of_k, VertexSet j);

/// Reduced cohomology of a full subcomplex K_J in one degree, with the
/// action of vertex permutations on it.
class SubcomplexCohomology {
 public:
  SubcomplexCohomology(const SimplicialComplex& k, VertexSet j, int p);

  VertexSet subset() const { return faces_.subset(); }
  int degree() const { return p_; }
  Eigen::Index dim() const { return h_.dim(); }
  const FaceIndex& faces() const { return faces_; }
  const DegreeCohomology& cohomology() const { return h_; }

  /// σ* -> ε(g, σ) (g·σ)* on C^p(K_J) -> C^p(K_{g·J}).
  SignedPermutation cochain_action(const VertexMap& g, const FaceIndex& target) const;
  /// Matrix of g on H̃^p(K_J); g must stabilise J.
  RationalMatrix induced_map(const VertexMap& g) const;
  /// Matrix of g: H̃^p(K_J) -> H̃^p(K_{g·J}) in the two chosen bases.
  RationalMatrix transport(const VertexMap& g, const SubcomplexCohomology& target) const;
  Rational trace(const VertexMap& g) const;

 private:
  int p_;
  FaceIndex faces_;
  DegreeCohomology h_;
};

/// Full basis object: one DegreeCohomology per degree p = -1 .. dim.
class CohomologyBasis {
 public:
  explicit CohomologyBasis(const SimplicialComplex& k);
  int lowest_degree() const { return -1; }
  int highest_degree() const { return int(degrees_.size()) - 2; }
  Eigen::Index dim(int p) const;
  const DegreeCohomology& at(int p) const;

 private:
  std::vector<DegreeCohomology> degrees_;
};

CohomologyBasis reduced_cohomology(const SimplicialComplex& k);

/// Matrix of g* on H̃^p(K_J). Throws if g does not stabilise J.
RationalMatrix induced_cohomology_map(const Permutation& g, const SimplicialComplex& k,
                                      VertexSet j, int p);

/// Trace of each element on H̃^p(K_J). Throws if an element does not
/// stabilise J or the values are not constant on conjugacy classes of the
/// given set.
std::map<Permutation, Rational> character_on_cohomology(const SimplicialComplex& k, VertexSet j,
                                                        const std::vector<Permutation>& elements,
                                                        int p);

}  // namespace zk
