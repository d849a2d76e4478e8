#pragma once

// Consistent sequences of Σ_m-complexes, their structural checks, and scans
// over m of multiplicities and Betti numbers.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zk/hochster.hpp"

namespace zk {

struct FamilySpec {
  enum class Kind { Skeleton, JoinSkeletons, VcCubeDual, Custom };

  Kind kind = Kind::Skeleton;
  std::vector<int> ks;  // skeleton dimensions (one for Skeleton)
  std::string description;
  std::function<SimplicialComplex(int)> custom;

  static FamilySpec skeleton(int k);
  static FamilySpec join_skeletons(std::vector<int> ks);
  static FamilySpec vc_cube_dual();
  static FamilySpec custom_rule(std::string description, std::function<SimplicialComplex(int)> rule);
  /// "skeleton:k", "join:k1,k2,..", "vccube". Custom families come from files
  /// (see io.hpp).
  static FamilySpec parse(const std::string& text);
};

struct FamilyInstance {
  SimplicialComplex complex;
  PermGroup group;  // Σ_m by index permutation
};

FamilyInstance instantiate(const FamilySpec& f, int m);

struct MRange {
  int lo = 1;
  int hi = 1;
};

/// K_m ⊆ K_{m+1} as labelled complexes, every K_m a Σ_m-complex, and the
/// inclusion commutes with the generators of Σ_m (extended to fix m+1).
bool check_consistent(const FamilySpec& f, MRange range);

/// Every (r+1)-subset of V(K_m) lies in the Σ_m-orbit of one from V(K_d).
bool check_r_vertex_stable(const FamilySpec& f, int r, int d, MRange range);
/// Every r-face of K_m lies in the Σ_m-orbit of an r-face of K_d.
bool check_r_face_stable(const FamilySpec& f, int r, int d, MRange range);

/// For J (labels present in K_lo) and each m: |stab(J, m)| computed from the
/// orbit of J equals |finite part| (m - b(J))!, and Sym(complement) fixes J
/// pointwise.
bool check_stabiliser_consistent(const FamilySpec& f, const std::vector<VertexLabel>& j,
                                 MRange range, int support_cap = kDefaultSupportCap);
/// The same check for every J ⊆ V(K_m) with |J| ≤ max_size, at every m.
bool check_stabiliser_consistent_all(const FamilySpec& f, int max_size, MRange range,
                                     int support_cap = kDefaultSupportCap);

struct ScanRow {
  int m = 0;
  std::uint64_t betti = 0;
  Decomposition table;  // padded
  Integer dimension;    // Σ multiplicity × dim V(λ)_m
};

struct GrowthReport {
  bool polynomial = false;
  int degree = -1;
  int tail_start = 0;                  // first m of the fitted tail
  std::vector<Rational> coefficients;  // c_0 + c_1 m + ...
  std::vector<std::vector<Integer>> differences;
  std::string str() const;
};

struct StabilityScanReport {
  int degree = 0;
  std::vector<ScanRow> rows;
  /// Least m from which the tables are constant to the end of the window;
  /// unset if the last two rows differ.
  std::optional<int> onset;
  int weight = 0;  // max |λ| over all scanned tables
  GrowthReport growth;
};

/// sym_irreducible_decomposition for each m, in parallel over m when
/// threads > 1; rows are merged in order of m.
StabilityScanReport multiplicity_scan(const FamilySpec& f, SpherePair pair, int i, MRange range,
                                      const HochsterOptions& opt = {}, int threads = 1);

/// Betti numbers b_i(Z_{K_m}) for m in range.
std::vector<std::pair<int, std::uint64_t>> betti_sequence(const FamilySpec& f, SpherePair pair,
                                                          int i, MRange range,
                                                          const HochsterOptions& opt = {},
                                                          int threads = 1);

/// Exact finite differences; the least t such that the (t+1)-st difference
/// has a zero suffix of length ≥ 2, fitted exactly on that tail.
GrowthReport betti_growth(const std::vector<std::pair<int, std::uint64_t>>& values);
GrowthReport betti_growth(const FamilySpec& f, SpherePair pair, int i, MRange range,
                          const HochsterOptions& opt = {}, int threads = 1);

/// Runs work(k) for k in [0, n) on up to `threads` workers.
void parallel_for(int n, int threads, const std::function<void(int)>& work);

}  // namespace zk
