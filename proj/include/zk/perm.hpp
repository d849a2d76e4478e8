#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zk/simplicial.hpp"

namespace zk {

/// A bijection of {0, .., n-1} in one-line notation. Externally (labels,
/// files, printing) points are 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Cycles given 1-based, e.g. {{1,2,3,4}} for (1234).
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return int(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  /// Composition: (g * h)(i) = g(h(i)).
  Permutation operator*(const Permutation& h) const;
  Permutation inverse() const;
  /// Same permutation on a larger point set, fixing the new points.
  Permutation extended(int n) const;

  bool is_identity() const;
  int sign() const;
  /// Cycle lengths, weakly decreasing, including fixed points.
  std::vector<int> cycle_type() const;
  /// 1-based cycle notation, "(1)" for the identity.
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

/// A permutation group of degree m given by generators.
struct PermGroup {
  int degree = 0;
  std::vector<Permutation> generators;

  PermGroup() = default;
  PermGroup(int m, std::vector<Permutation> gens);

  static PermGroup trivial(int m) { return PermGroup(m, {}); }
  /// Σ_m generated by (1 2) and (1 2 .. m).
  static PermGroup symmetric(int m);
};

/// All elements of <gens> by breadth-first closure, starting from the
/// identity and applying generators in order. Throws CapExceeded past `cap`.
std::vector<Permutation> enumerate_group(const std::vector<Permutation>& gens, int degree,
                                         std::size_t cap);

/// Action of a permutation on vertex positions of a complex: entry p is the
/// position of g·(vertex p). The index coordinate is permuted; tags and
/// index-free vertices are fixed.
using VertexMap = std::vector<int>;

VertexMap vertex_map(const Permutation& g, const SimplicialComplex& k);
VertexSet map_subset(const VertexMap& map, VertexSet j);
/// Sign of the bijection J -> g·J read against the vertex order: the sign of
/// the permutation sorting (g·j_0, .., g·j_r) for j_0 < .. < j_r.
int order_sign(const VertexMap& map, VertexSet j);

VertexSet act_on_subset(const Permutation& g, VertexSet j, const SimplicialComplex& k);

/// True iff every generator maps every facet to a face.
bool is_g_complex(const SimplicialComplex& k, const PermGroup& g);

struct Orbit {
  VertexSet representative = 0;  // lexicographically least member
  std::size_t size = 0;
  std::vector<Permutation> stabilizer_generators;  // Schreier, identity removed
};

/// Orbits of vertex subsets. Representatives are the lexicographically least
/// member of each orbit, listed by (size, lex).
class OrbitTable {
 public:
  const std::vector<Orbit>& orbits() const { return orbits_; }
  std::size_t subset_count() const { return member_.size(); }
  /// Index into orbits() of the orbit containing `j`.
  std::size_t orbit_of(VertexSet j) const;
  /// An element t with t·representative = j.
  const Permutation& transversal(VertexSet j) const;
  /// Members of the orbit with index `o`, in discovery order.
  std::vector<VertexSet> members(std::size_t o) const;

 private:
  friend OrbitTable subset_orbit_reps(const SimplicialComplex&, const PermGroup&, int,
                                      std::size_t);
  struct Entry {
    std::size_t orbit;
    Permutation transversal;
  };
  std::vector<Orbit> orbits_;
  std::unordered_map<VertexSet, Entry> member_;
  std::vector<std::vector<VertexSet>> orbit_members_;
};

inline constexpr std::size_t kDefaultSubsetCap = std::size_t{1} << 22;
inline constexpr std::size_t kDefaultGroupCap = 40320;
inline constexpr int kDefaultSupportCap = 8;

/// Orbit table over all vertex subsets of size at most `max_size`
/// (negative: no bound).
OrbitTable subset_orbit_reps(const SimplicialComplex& k, const PermGroup& g, int max_size = -1,
                             std::size_t cap = kDefaultSubsetCap);

/// Splitting of stab(J, m) ≤ Σ_m into the part permuting the indices J
/// touches and the full symmetric group on the remaining indices.
struct SupportSplit {
  std::vector<int> support;               // 1-based indices appearing in J
  std::vector<Permutation> finite_part;   // degree m, moving only the support
  int complement_rank = 0;                // m - |support|
};

SupportSplit support_split(VertexSet j, const SimplicialComplex& k, int m,
                           int cap = kDefaultSupportCap);

}  // namespace zk
