#pragma once

// Brute-force ground truth: the cellular cochain complex of the moment-angle
// complex built from the cells κ(L, I) = Π_{l∈L} e¹ × Π_{i∈I} e² × Π e⁰,
// with L ∩ I = ∅ and I ∈ K.

#include <Eigen/SparseCore>

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "zk/hochster.hpp"

namespace zk {

struct Cell {
  VertexSet l = 0;  // coordinates carrying e¹
  VertexSet i = 0;  // coordinates carrying e²

  int degree() const { return set_size(l) + 2 * set_size(i); }
  VertexSet multidegree() const { return l | i; }
  bool operator==(const Cell&) const = default;
};

inline constexpr int kDefaultOracleCap = 7;

class MomentAngleCellComplex {
 public:
  MomentAngleCellComplex(const SimplicialComplex& k, int cap = kDefaultOracleCap);

  const SimplicialComplex& complex() const { return k_; }
  int top_degree() const { return int(cells_.size()) - 1; }
  const std::vector<Cell>& cells(int degree) const { return cells_.at(std::size_t(degree)); }
  std::size_t cell_count() const;
  /// δ: C^p -> C^{p+1} over the whole complex.
  const Eigen::SparseMatrix<int>& coboundary(int p) const { return delta_.at(std::size_t(p)); }

  bool coboundary_squares_to_zero() const;
  /// No nonzero entry of δ joins cells of different multidegree.
  bool respects_multidegree() const;

  /// The summand spanned by cells whose multidegree lies in `js`.
  CochainComplex block(const std::vector<VertexSet>& js) const;
  /// Cells of that block in degree p, in block order.
  std::vector<Cell> block_cells(const std::vector<VertexSet>& js, int p) const;

 private:
  SimplicialComplex k_;
  std::vector<std::vector<Cell>> cells_;
  std::vector<std::unordered_map<VertexSet, std::vector<Eigen::Index>>> by_multidegree_;
  std::vector<Eigen::SparseMatrix<int>> delta_;
  std::vector<std::unordered_map<std::uint64_t, Eigen::Index>> index_;

  Eigen::Index index_of(const Cell& c) const;
};

MomentAngleCellComplex build_cell_complex(const SimplicialComplex& k, int cap = kDefaultOracleCap);

/// Betti numbers b_0 .. b_{top} of the whole complex.
BettiTable betti_cellular(const MomentAngleCellComplex& z);
/// Betti numbers of each multidegree block, indexed by degree.
std::map<VertexSet, BettiTable> betti_cellular_split(const MomentAngleCellComplex& z);

/// Trace of g on degree-i cohomology of the block spanned by the multidegrees
/// in `orbit`, with κ(L, I)* -> sign(g|_L) κ(gL, gI)*. The set must be
/// g-invariant.
Rational cellular_action_trace(const MomentAngleCellComplex& z, const Permutation& g, int i,
                               const std::vector<VertexSet>& orbit);

struct DiffReport {
  std::size_t checks = 0;
  std::vector<std::string> mismatches;

  bool empty() const { return mismatches.empty(); }
};

/// Compares the Hochster side (in the convention of `opt`) with the cells in
/// each requested degree: block dimensions per subset and per orbit, traces of
/// stabiliser generators on each representative's block, traces of the group
/// generators on each orbit block, and total Betti numbers. An empty
/// `degrees` means all degrees.
DiffReport compare_with_hochster(const SimplicialComplex& k, const PermGroup& g,
                                 std::vector<int> degrees = {}, const HochsterOptions& opt = {},
                                 int cap = kDefaultOracleCap);

}  // namespace zk
