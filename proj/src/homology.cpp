#include "zk/homology.hpp"

#include <algorithm>

#include "zk/error.hpp"
#include "zk/linalg.hpp"

namespace zk {

Eigen::Index CochainComplex::dim(int p) const {
  const int k = p - lowest_degree;
  return (k < 0 || k >= int(dims.size())) ? 0 : dims[k];
}

SignMatrix CochainComplex::d(int p) const {
  const int k = p - lowest_degree;
  if (k >= 0 && k < int(coboundary.size())) return coboundary[k];
  return SignMatrix::Zero(dim(p + 1), dim(p));
}

std::vector<Eigen::Index> CochainComplex::betti() const {
  std::vector<Eigen::Index> ranks(dims.size() + 1, 0);  // ranks[k] = rank d(lo + k - 1)
  for (std::size_t k = 0; k < coboundary.size(); ++k) ranks[k + 1] = linalg::rank(coboundary[k]);
  std::vector<Eigen::Index> out(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) out[k] = dims[k] - ranks[k + 1] - ranks[k];
  return out;
}

DegreeCohomology::DegreeCohomology(const CochainComplex& c, int p) : degree_(p) {
  const Eigen::Index n = c.dim(p);
  d_out_ = c.d(p);
  const RationalMatrix z = linalg::kernel_basis<Rational>(d_out_.cast<Rational>());
  const RationalMatrix din = c.d(p - 1).cast<Rational>();
  const auto bcols = linalg::independent_columns(din);
  const Eigen::Index rb = Eigen::Index(bcols.size());

  RationalMatrix both(n, rb + z.cols());
  for (Eigen::Index k = 0; k < rb; ++k) both.col(k) = din.col(bcols[k]);
  both.rightCols(z.cols()) = z;
  const auto pivots = linalg::independent_columns(both);

  representatives_.resize(n, Eigen::Index(pivots.size()) - rb);
  Eigen::Index h = 0;
  for (auto c : pivots) {
    if (c >= rb) representatives_.col(h++) = both.col(c);
  }
  spanning_.resize(n, rb + h);
  for (Eigen::Index k = 0; k < rb; ++k) spanning_.col(k) = both.col(k);
  spanning_.rightCols(h) = representatives_;
  left_inverse_ = linalg::left_inverse(spanning_);
}

bool DegreeCohomology::is_cocycle(const RationalVector& z) const {
  if (z.size() != cochain_dim()) return false;
  if (d_out_.rows() == 0) return true;
  const RationalVector dz = d_out_.cast<Rational>() * z;
  return dz.isZero();
}

RationalVector DegreeCohomology::project(const RationalVector& z) const {
  require(is_cocycle(z), "projection of a cochain that is not a cocycle");
  if (cochain_dim() == 0) return RationalVector(0);
  const RationalVector coords = left_inverse_ * z;
  if (!(spanning_ * coords - z).isZero()) {
    fail(ErrorKind::OracleMismatch, "cocycle outside the span of the cohomology basis");
  }
  return coords.tail(dim());
}

RationalMatrix DegreeCohomology::induced(const RationalMatrix& cochain_map) const {
  return induced(cochain_map, *this);
}

RationalMatrix DegreeCohomology::induced(const RationalMatrix& cochain_map,
                                         const DegreeCohomology& target) const {
  RationalMatrix out(target.dim(), dim());
  for (Eigen::Index k = 0; k < dim(); ++k) {
    out.col(k) = target.project(cochain_map * representatives_.col(k));
  }
  return out;
}

RationalMatrix SignedPermutation::matrix() const { return matrix(Eigen::Index(target.size())); }

RationalMatrix SignedPermutation::matrix(Eigen::Index target_dim) const {
  RationalMatrix m = RationalMatrix::Zero(target_dim, Eigen::Index(target.size()));
  for (std::size_t b = 0; b < target.size(); ++b) m(target[b], Eigen::Index(b)) = sign[b];
  return m;
}

Rational SignedPermutation::trace() const {
  Rational t = 0;
  for (std::size_t b = 0; b < target.size(); ++b) {
    if (target[b] == Eigen::Index(b)) t += sign[b];
  }
  return t;
}

RationalVector SignedPermutation::apply(const RationalVector& v, Eigen::Index target_dim) const {
  RationalVector out = RationalVector::Zero(target_dim);
  for (std::size_t b = 0; b < target.size(); ++b) out(target[b]) += sign[b] * v(Eigen::Index(b));
  return out;
}

namespace {

const std::vector<VertexSet> kNoFaces;

}  // namespace

FaceIndex::FaceIndex(const SimplicialComplex& k, VertexSet j) : subset_(j) {
  require(is_subset(j, k.all_vertices()), "subset outside vertex set");
  if (k.is_void()) return;
  std::vector<VertexSet> generators;
  for (VertexSet f : k.facets()) generators.push_back(f & j);
  std::vector<VertexLabel> vs = k.vertices();
  const SimplicialComplex restricted = SimplicialComplex::from_masks(std::move(vs), generators);
  by_dim_ = restricted.faces_by_dim();
  for (const auto& layer : by_dim_) {
    for (std::size_t i = 0; i < layer.size(); ++i) index_.emplace(layer[i], Eigen::Index(i));
  }
}

FaceIndex::FaceIndex(const std::vector<VertexSet>& all_faces_of_k, VertexSet j) : subset_(j) {
  for (VertexSet f : all_faces_of_k) {
    if (!is_subset(f, j)) continue;
    const std::size_t layer = std::size_t(set_size(f));
    if (by_dim_.size() <= layer) by_dim_.resize(layer + 1);
    by_dim_[layer].push_back(f);
  }
  for (auto& layer : by_dim_) {
    std::sort(layer.begin(), layer.end(), lex_less);
    for (std::size_t i = 0; i < layer.size(); ++i) index_.emplace(layer[i], Eigen::Index(i));
  }
}

const std::vector<VertexSet>& FaceIndex::faces(int p) const {
  const int layer = p + 1;
  if (layer < 0 || layer >= int(by_dim_.size())) return kNoFaces;
  return by_dim_[layer];
}

Eigen::Index FaceIndex::index_of(VertexSet face) const {
  auto it = index_.find(face);
  require(it != index_.end(), "not a face of the subcomplex");
  return it->second;
}

CochainComplex FaceIndex::cochains() const {
  CochainComplex c;
  c.lowest_degree = -1;
  for (const auto& layer : by_dim_) c.dims.push_back(Eigen::Index(layer.size()));
  for (int p = -1; p < top_dim(); ++p) {
    const auto& lower = faces(p);
    const auto& upper = faces(p + 1);
    SignMatrix d = SignMatrix::Zero(Eigen::Index(upper.size()), Eigen::Index(lower.size()));
    for (std::size_t t = 0; t < upper.size(); ++t) {
      const auto elems = set_elements(upper[t]);
      for (std::size_t k = 0; k < elems.size(); ++k) {
        const VertexSet face = upper[t] & ~(VertexSet{1} << elems[k]);
        d(Eigen::Index(t), index_of(face)) = (k % 2 == 0) ? 1 : -1;
      }
    }
    c.coboundary.push_back(std::move(d));
  }
  return c;
}

std::vector<RationalMatrix> coboundary_matrices(const SimplicialComplex& k) {
  const auto c = FaceIndex(k, k.all_vertices()).cochains();
  std::vector<RationalMatrix> out;
  for (const auto& d : c.coboundary) out.push_back(d.cast<Rational>());
  return out;
}

std::vector<Eigen::Index> reduced_betti(const SimplicialComplex& k) {
  return FaceIndex(k, k.all_vertices()).cochains().betti();
}

std::vector<Eigen::Index> reduced_betti(const std::vector<VertexSet>& faces_of_k, VertexSet j) {
  return FaceIndex(faces_of_k, j).cochains().betti();
}

SubcomplexCohomology::SubcomplexCohomology(const SimplicialComplex& k, VertexSet j, int p)
    : p_(p), faces_(k, j), h_(faces_.cochains(), p) {}

SignedPermutation SubcomplexCohomology::cochain_action(const VertexMap& g,
                                                       const FaceIndex& target) const {
  SignedPermutation s;
  for (VertexSet f : faces_.faces(p_)) {
    s.target.push_back(target.index_of(map_subset(g, f)));
    s.sign.push_back(order_sign(g, f));
  }
  return s;
}

RationalMatrix SubcomplexCohomology::induced_map(const VertexMap& g) const {
  require(map_subset(g, subset()) == subset(), "element does not stabilise J");
  return h_.induced(cochain_action(g, faces_).matrix());
}

RationalMatrix SubcomplexCohomology::transport(const VertexMap& g,
                                               const SubcomplexCohomology& target) const {
  require(map_subset(g, subset()) == target.subset() && target.p_ == p_,
          "transport target is not g·J in the same degree");
  const auto action = cochain_action(g, target.faces_);
  return h_.induced(action.matrix(target.h_.cochain_dim()), target.h_);
}

Rational SubcomplexCohomology::trace(const VertexMap& g) const {
  if (dim() == 0) {
    require(map_subset(g, subset()) == subset(), "element does not stabilise J");
    return 0;
  }
  return induced_map(g).trace();
}

CohomologyBasis::CohomologyBasis(const SimplicialComplex& k) {
  const auto c = FaceIndex(k, k.all_vertices()).cochains();
  for (int p = -1; p <= c.highest_degree(); ++p) degrees_.emplace_back(c, p);
}

Eigen::Index CohomologyBasis::dim(int p) const {
  const int k = p + 1;
  return (k < 0 || k >= int(degrees_.size())) ? 0 : degrees_[k].dim();
}

const DegreeCohomology& CohomologyBasis::at(int p) const { return degrees_.at(std::size_t(p + 1)); }

CohomologyBasis reduced_cohomology(const SimplicialComplex& k) { return CohomologyBasis(k); }

RationalMatrix induced_cohomology_map(const Permutation& g, const SimplicialComplex& k,
                                      VertexSet j, int p) {
  return SubcomplexCohomology(k, j, p).induced_map(vertex_map(g, k));
}

std::map<Permutation, Rational> character_on_cohomology(const SimplicialComplex& k, VertexSet j,
                                                        const std::vector<Permutation>& elements,
                                                        int p) {
  const SubcomplexCohomology h(k, j, p);
  std::map<Permutation, Rational> out;
  for (const auto& g : elements) out.emplace(g, h.trace(vertex_map(g, k)));
  for (const auto& [x, vx] : out) {
    for (const auto& y : elements) {
      auto it = out.find(y * x * y.inverse());
      if (it != out.end() && it->second != vx) {
        fail(ErrorKind::OracleMismatch, "character is not a class function");
      }
    }
  }
  return out;
}

}  // namespace zk
