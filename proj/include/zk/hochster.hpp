#pragma once

// Equivariant Hochster decomposition of the cohomology of (Cone A, A)^K with
// A a rational d-sphere: d = 1 is the moment-angle complex, d = 0 the real
// moment-angle complex.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zk/homology.hpp"
#include "zk/perm.hpp"
#include "zk/symrep.hpp"

namespace zk {

struct SpherePair {
  int d = 1;

  static SpherePair moment_angle() { return {1}; }
  static SpherePair real_moment_angle() { return {0}; }
  std::string name() const;
  /// Ambient degree of H̃^p(K_J) inside the product.
  int ambient_degree(int p, int j_size) const { return p + d * j_size + 1; }
};

/// How a permutation acts on the smash factor of a summand.
enum class KoszulConvention {
  Topological,  // twisted by sign(g restricted to J)^d
  Simplicial,   // no twist: the bare action on H̃^*(K_J)
};

std::string to_string(KoszulConvention c);

struct HochsterOptions {
  std::size_t subset_cap = kDefaultSubsetCap;
  std::size_t group_cap = kDefaultGroupCap;
  int support_cap = kDefaultSupportCap;
  int brute_cap = kDefaultBruteCap;
  KoszulConvention convention = KoszulConvention::Topological;
};

using BettiTable = std::vector<std::uint64_t>;

/// b_i for i = 0 .. top, summed over all vertex subsets.
BettiTable betti(const SimplicialComplex& k, SpherePair pair,
                 const HochsterOptions& opt = {});
/// Same, summed over orbit representatives weighted by orbit size.
BettiTable betti(const SimplicialComplex& k, SpherePair pair, const PermGroup& g,
                 const HochsterOptions& opt = {});
/// A single degree, visiting only subsets that can contribute.
std::uint64_t betti_degree(const SimplicialComplex& k, SpherePair pair, int i,
                           const HochsterOptions& opt = {});

/// ±1: the factor multiplying the cohomology trace of g on the J summand.
int koszul_twist(const VertexMap& g, VertexSet j, SpherePair pair, KoszulConvention c);

/// Trace of g (stabilising J) on the J summand in simplicial degree p.
Rational summand_character(const SimplicialComplex& k, VertexSet j, int p, const Permutation& g,
                           SpherePair pair, KoszulConvention c);

struct CharacterValue {
  Permutation element;
  Rational trace;
};

struct MultidegreeComponent {
  VertexSet representative = 0;
  std::vector<VertexLabel> labels;
  std::size_t orbit_size = 0;
  int p = -1;
  int i = 0;
  Eigen::Index dim = 0;
  std::vector<Permutation> stabilizer_generators;
  std::size_t stabilizer_order = 0;  // 0 when over the group cap
  /// Identity first, then each stabiliser generator.
  std::vector<CharacterValue> character;
};

struct EquivariantReport {
  int degree = 0;
  std::uint64_t betti = 0;
  std::vector<MultidegreeComponent> components;
};

EquivariantReport equivariant_decomposition(const SimplicialComplex& k, const PermGroup& g,
                                            SpherePair pair, int i,
                                            const HochsterOptions& opt = {});

/// One orbit summand of the Σ_m decomposition, with both induction routes.
struct SummandDecomposition {
  VertexSet representative = 0;
  int p = -1;
  Eigen::Index dim = 0;
  std::vector<int> support;
  std::size_t finite_order = 0;
  /// Ind from the finite stabiliser part to Σ_b, decomposed.
  Decomposition local;
  /// Pieri rule applied to `local`, padded.
  Decomposition pieri;
  /// Class fusion through Σ_b × Σ_{m-b} at this m, decomposed and padded.
  Decomposition fusion;
};

struct SymDecomposition {
  int degree = 0;
  int m = 0;
  std::uint64_t betti = 0;
  std::vector<SummandDecomposition> summands;
  /// Sum of the Pieri-route tables, keyed by unpadded partitions.
  Decomposition total;
  Integer dimension() const;
};

/// Σ_m acting by index permutation. With `with_fusion` each summand is also
/// decomposed by explicit class fusion at this m.
SymDecomposition sym_decomposition(const SimplicialComplex& k, SpherePair pair, int i, int m,
                                   bool with_fusion, const HochsterOptions& opt = {});

/// Padded multiplicities of H^i as a Σ_m-representation.
Decomposition sym_irreducible_decomposition(const SimplicialComplex& k, SpherePair pair, int i,
                                            int m, const HochsterOptions& opt = {});

/// A cohomology class of a full subcomplex, in the basis of its
/// DegreeCohomology.
struct CohomologyClass {
  VertexSet subset = 0;
  int p = -1;
  RationalVector coords;
};

/// The product H̃^p(K_I) ⊗ H̃^q(K_J) -> H̃^{p+q+1}(K_{I∪J}); zero if I ∩ J ≠ ∅.
CohomologyClass cup_product(const SimplicialComplex& k, const CohomologyClass& a,
                            const CohomologyClass& b);

/// g·α in H̃^p(K_{g·I}), including the Koszul twist for the moment-angle pair.
CohomologyClass act_on_class(const SimplicialComplex& k, const Permutation& g,
                             const CohomologyClass& a, KoszulConvention c);

/// Basis classes of every nonzero H̃^p(K_J), J ⊆ V(K), |J| ≤ max_size.
std::vector<CohomologyClass> class_basis(const SimplicialComplex& k, int max_size = -1);

/// g(α β) = (gα)(gβ) for all basis pairs and generators.
bool g_algebra_equivariance_check(const SimplicialComplex& k, const PermGroup& g,
                                  KoszulConvention c = KoszulConvention::Topological);

}  // namespace zk
