#pragma once

#include <compare>
#include <numeric>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zk {

/// A vertex is identified by the coordinate it occupies in [m] (permuted by
/// the symmetric group) and a small tag separating vertices that share an
/// index. Vertices without an index are fixed by every index permutation.
struct VertexLabel {
  std::optional<int> index;  // 1-based
  int tag = 0;

  static VertexLabel indexed(int i, int t = 0) { return {i, t}; }
  static VertexLabel fixed(int t = 0) { return {std::nullopt, t}; }

  bool operator==(const VertexLabel&) const = default;
  /// Indexed vertices first, ordered by (index, tag); fixed vertices last.
  std::strong_ordering operator<=>(const VertexLabel& o) const;

  std::string str() const;
};

/// Subsets of a complex's vertex list, as bitmasks over vertex positions.
using VertexSet = std::uint64_t;

inline int set_size(VertexSet s) { return __builtin_popcountll(s); }
inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }
std::vector<int> set_elements(VertexSet s);

/// Order by cardinality, then lexicographically on the sorted positions.
bool lex_less(VertexSet a, VertexSet b);

/// Calls f on every subset of `n` positions with exactly `size` elements, in
/// lexicographic order of the sorted position lists.
template <typename F>
void for_each_combination(int n, int size, F&& f) {
  if (size < 0 || size > n) return;
  std::vector<int> c(size);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    VertexSet s = 0;
    for (int x : c) s |= VertexSet{1} << x;
    f(s);
    int i = size - 1;
    while (i >= 0 && c[i] == n - size + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
  }
}

/// A finite simplicial complex on a labelled vertex list, stored by facets.
///
/// The vertex list may contain ghost vertices that lie in no face: the
/// complex {∅} on one vertex is distinct from the void complex (no faces at
/// all) and from a point.
class SimplicialComplex {
 public:
  static constexpr int kMaxVertices = 64;

  /// The void complex: no vertices and no faces.
  SimplicialComplex() = default;

  /// Builds from any generating family of faces; non-maximal faces are
  /// discarded. Labels in `faces` must appear in `vertices`.
  SimplicialComplex(std::vector<VertexLabel> vertices,
                    const std::vector<std::vector<VertexLabel>>& faces);

  /// Same, with faces given as masks over the (already sorted, unique)
  /// vertex list.
  static SimplicialComplex from_masks(std::vector<VertexLabel> sorted_vertices,
                                      std::vector<VertexSet> faces);

  const std::vector<VertexLabel>& vertices() const { return vertices_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  VertexSet all_vertices() const;

  bool is_void() const { return facets_.empty(); }
  int dim() const;
  bool contains(VertexSet face) const;
  /// Vertices that belong to at least one face.
  VertexSet support() const;

  /// All faces including ∅, sorted with `lex_less`. Empty for the void complex.
  std::vector<VertexSet> faces() const;
  /// Faces of dimension p are in entry p + 1.
  std::vector<std::vector<VertexSet>> faces_by_dim() const;

  std::optional<int> position(const VertexLabel& v) const;
  VertexSet mask_of(const std::vector<VertexLabel>& labels) const;
  std::vector<VertexLabel> labels_of(VertexSet s) const;
  /// "{1,3}", "{1.0,1.1,*}", "{}".
  std::string format(VertexSet s) const;
  /// Largest vertex index present, 0 if none.
  int max_index() const;
  int max_tag() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<VertexLabel> vertices_;
  std::vector<VertexSet> facets_;
};

/// All subsets of [m] with at most k+1 elements; k = -1 gives {∅} on m ghost
/// vertices.
SimplicialComplex skeleton(int m, int k);

/// Faces are σ ⊔ τ. The tags of `b` are shifted past the largest tag of `a`.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// K_J = {σ ∩ J : σ ∈ K}. Vertices of J lying in no face of K are dropped.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSet j);

/// Boundary of the dual of the cube with one vertex cut off: the join of m
/// copies of S⁰ = {0_i, 1_i} with the face {0_1..0_m} replaced by a cone over
/// its boundary. The cone vertex carries no index.
SimplicialComplex vc_cube_dual(int m);

}  // namespace zk
