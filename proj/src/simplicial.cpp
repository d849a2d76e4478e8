#include "zk/simplicial.hpp"

#include <algorithm>
#include <unordered_set>

#include "zk/error.hpp"

namespace zk {

std::strong_ordering VertexLabel::operator<=>(const VertexLabel& o) const {
  if (index.has_value() != o.index.has_value()) {
    return index.has_value() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (index && *index != *o.index) return *index <=> *o.index;
  return tag <=> o.tag;
}

std::string VertexLabel::str() const {
  std::string s = index ? std::to_string(*index) : std::string("*");
  if (tag != 0) s += "." + std::to_string(tag);
  return s;
}

std::vector<int> set_elements(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  while (s) {
    out.push_back(__builtin_ctzll(s));
    s &= s - 1;
  }
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  const int sa = set_size(a), sb = set_size(b);
  if (sa != sb) return sa < sb;
  const VertexSet diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

namespace {

std::vector<VertexSet> maximal_faces(std::vector<VertexSet> faces) {
  std::sort(faces.begin(), faces.end(), [](VertexSet a, VertexSet b) {
    return set_size(a) > set_size(b);
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<VertexSet> kept;
  for (VertexSet f : faces) {
    bool covered = false;
    for (VertexSet g : kept) {
      if (is_subset(f, g)) {
        covered = true;
        break;
      }
    }
    if (!covered) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end(), lex_less);
  return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<VertexLabel> vertices,
                                     const std::vector<std::vector<VertexLabel>>& faces) {
  std::sort(vertices.begin(), vertices.end());
  require(std::adjacent_find(vertices.begin(), vertices.end()) == vertices.end(),
          "duplicate vertex label");
  require(vertices.size() <= kMaxVertices, "too many vertices (max 64)");
  vertices_ = std::move(vertices);
  std::vector<VertexSet> masks;
  masks.reserve(faces.size());
  for (const auto& f : faces) masks.push_back(mask_of(f));
  facets_ = maximal_faces(std::move(masks));
}

SimplicialComplex SimplicialComplex::from_masks(std::vector<VertexLabel> sorted_vertices,
                                                std::vector<VertexSet> faces) {
  require(sorted_vertices.size() <= kMaxVertices, "too many vertices (max 64)");
  require(std::is_sorted(sorted_vertices.begin(), sorted_vertices.end()) &&
              std::adjacent_find(sorted_vertices.begin(), sorted_vertices.end()) ==
                  sorted_vertices.end(),
          "vertex list must be sorted and unique");
  SimplicialComplex k;
  k.vertices_ = std::move(sorted_vertices);
  const VertexSet all = k.all_vertices();
  for (VertexSet f : faces) require(is_subset(f, all), "face outside vertex set");
  k.facets_ = maximal_faces(std::move(faces));
  return k;
}

VertexSet SimplicialComplex::all_vertices() const {
  return vertices_.size() == 64 ? ~VertexSet{0} : ((VertexSet{1} << vertices_.size()) - 1);
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (VertexSet f : facets_) d = std::max(d, set_size(f) - 1);
  return d;
}

bool SimplicialComplex::contains(VertexSet face) const {
  for (VertexSet f : facets_) {
    if (is_subset(face, f)) return true;
  }
  return false;
}

VertexSet SimplicialComplex::support() const {
  VertexSet s = 0;
  for (VertexSet f : facets_) s |= f;
  return s;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::unordered_set<VertexSet> seen;
  for (VertexSet f : facets_) {
    // Enumerate all submasks of f, including f and 0.
    VertexSet sub = f;
    while (true) {
      seen.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_dim() const {
  std::vector<std::vector<VertexSet>> out(dim() + 2);
  for (VertexSet f : faces()) out[set_size(f)].push_back(f);
  return out;
}

std::optional<int> SimplicialComplex::position(const VertexLabel& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || !(*it == v)) return std::nullopt;
  return int(it - vertices_.begin());
}

VertexSet SimplicialComplex::mask_of(const std::vector<VertexLabel>& labels) const {
  VertexSet s = 0;
  for (const auto& l : labels) {
    auto p = position(l);
    require(p.has_value(), "unknown vertex label " + l.str());
    s |= VertexSet{1} << *p;
  }
  return s;
}

std::vector<VertexLabel> SimplicialComplex::labels_of(VertexSet s) const {
  std::vector<VertexLabel> out;
  for (int p : set_elements(s)) out.push_back(vertices_.at(p));
  return out;
}

std::string SimplicialComplex::format(VertexSet s) const {
  std::string out = "{";
  for (const auto& v : labels_of(s)) out += (out.size() > 1 ? "," : "") + v.str();
  return out + "}";
}

int SimplicialComplex::max_index() const {
  int m = 0;
  for (const auto& v : vertices_) {
    if (v.index) m = std::max(m, *v.index);
  }
  return m;
}

int SimplicialComplex::max_tag() const {
  int t = 0;
  for (const auto& v : vertices_) t = std::max(t, v.tag);
  return t;
}

SimplicialComplex skeleton(int m, int k) {
  require(m >= 1, "skeleton: m must be at least 1");
  require(k >= -1, "skeleton: k must be at least -1");
  std::vector<VertexLabel> vs;
  for (int i = 1; i <= m; ++i) vs.push_back(VertexLabel::indexed(i));
  const int size = std::min(k + 1, m);
  std::vector<VertexSet> faces;
  if (size == 0) {
    faces.push_back(0);
  } else {
    // Gosper's hack over all size-element subsets of m positions.
    VertexSet s = (VertexSet{1} << size) - 1;
    const VertexSet limit = VertexSet{1} << m;
    while (s < limit) {
      faces.push_back(s);
      const VertexSet c = s & (~s + 1);
      const VertexSet r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return SimplicialComplex::from_masks(std::move(vs), std::move(faces));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.is_void() || b.is_void()) return {};
  const int shift = a.max_tag() + 1;
  std::vector<VertexLabel> vs = a.vertices();
  for (auto v : b.vertices()) {
    v.tag += shift;
    vs.push_back(v);
  }
  std::vector<std::vector<VertexLabel>> faces;
  for (VertexSet fa : a.facets()) {
    for (VertexSet fb : b.facets()) {
      auto f = a.labels_of(fa);
      for (auto v : b.labels_of(fb)) {
        v.tag += shift;
        f.push_back(v);
      }
      faces.push_back(std::move(f));
    }
  }
  return SimplicialComplex(std::move(vs), faces);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSet j) {
  require(is_subset(j, k.all_vertices()), "full_subcomplex: J is not a vertex subset");
  if (k.is_void()) return {};
  const VertexSet kept = j & k.support();
  std::vector<VertexSet> restricted;
  for (VertexSet f : k.facets()) restricted.push_back(f & kept);
  // Re-index onto the kept vertices.
  const auto positions = set_elements(kept);
  std::vector<VertexLabel> vs;
  for (int p : positions) vs.push_back(k.vertices()[p]);
  std::vector<VertexSet> faces;
  for (VertexSet f : restricted) {
    VertexSet g = 0;
    for (std::size_t q = 0; q < positions.size(); ++q) {
      if (f >> positions[q] & 1) g |= VertexSet{1} << q;
    }
    faces.push_back(g);
  }
  return SimplicialComplex::from_masks(std::move(vs), std::move(faces));
}

SimplicialComplex vc_cube_dual(int m) {
  require(m >= 1, "vc_cube_dual: m must be at least 1");
  require(2 * m + 1 <= SimplicialComplex::kMaxVertices, "vc_cube_dual: m too large");
  std::vector<VertexLabel> vs;
  for (int i = 1; i <= m; ++i) {
    vs.push_back(VertexLabel::indexed(i, 0));
    vs.push_back(VertexLabel::indexed(i, 1));
  }
  vs.push_back(VertexLabel::fixed());
  std::sort(vs.begin(), vs.end());
  // With the sorted order, 0_i sits at 2(i-1), 1_i at 2(i-1)+1, cone last.
  const VertexSet cone = VertexSet{1} << (2 * m);
  VertexSet zeros = 0;
  for (int i = 0; i < m; ++i) zeros |= VertexSet{1} << (2 * i);
  std::vector<VertexSet> faces;
  // Facets of the join of the S⁰'s: one pole per index.
  for (VertexSet choice = 0; choice < (VertexSet{1} << m); ++choice) {
    VertexSet f = 0;
    for (int i = 0; i < m; ++i) f |= VertexSet{1} << (2 * i + ((choice >> i) & 1));
    if (f != zeros) faces.push_back(f);
  }
  // Cone over the boundary of the deleted face.
  for (int i = 0; i < m; ++i) faces.push_back((zeros & ~(VertexSet{1} << (2 * i))) | cone);
  return SimplicialComplex::from_masks(std::move(vs), std::move(faces));
}

}  // namespace zk
