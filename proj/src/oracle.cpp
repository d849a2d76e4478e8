#include "zk/oracle.hpp"

#include <algorithm>

#include "zk/error.hpp"

namespace zk {

namespace {

std::uint64_t cell_key(const Cell& c) { return c.l | (c.i << 32); }

}  // namespace

MomentAngleCellComplex::MomentAngleCellComplex(const SimplicialComplex& k, int cap) : k_(k) {
  const int n = int(k.vertex_count());
  if (n > cap || n > 32) {
    fail(ErrorKind::CapExceeded, "cellular oracle limited to " + std::to_string(std::min(cap, 32)) +
                                     " vertices, complex has " + std::to_string(n));
  }
  cells_.resize(std::size_t(2 * n + 1));
  const VertexSet all = k.all_vertices();
  for (VertexSet i : k.faces()) {
    const VertexSet rest = all & ~i;
    VertexSet l = rest;
    while (true) {
      const Cell c{l, i};
      cells_[std::size_t(c.degree())].push_back(c);
      if (l == 0) break;
      l = (l - 1) & rest;
    }
  }
  index_.resize(cells_.size());
  by_multidegree_.resize(cells_.size());
  for (std::size_t p = 0; p < cells_.size(); ++p) {
    auto& layer = cells_[p];
    std::sort(layer.begin(), layer.end(), [](const Cell& a, const Cell& b) {
      if (a.multidegree() != b.multidegree()) return lex_less(a.multidegree(), b.multidegree());
      return lex_less(a.i, b.i);
    });
    for (std::size_t c = 0; c < layer.size(); ++c) {
      index_[p].emplace(cell_key(layer[c]), Eigen::Index(c));
      by_multidegree_[p][layer[c].multidegree()].push_back(Eigen::Index(c));
    }
  }
  // δκ(L,I)* = Σ_{l ∈ L, I∪l ∈ K} (-1)^{#{l' ∈ L : l' < l}} κ(L∖l, I∪l)*
  for (std::size_t p = 0; p + 1 < cells_.size(); ++p) {
    std::vector<Eigen::Triplet<int>> entries;
    for (std::size_t c = 0; c < cells_[p].size(); ++c) {
      const Cell& cell = cells_[p][c];
      for (int l : set_elements(cell.l)) {
        const VertexSet bit = VertexSet{1} << l;
        if (!k.contains(cell.i | bit)) continue;
        const Cell target{cell.l & ~bit, cell.i | bit};
        const int before = set_size(cell.l & (bit - 1));
        entries.emplace_back(index_[p + 1].at(cell_key(target)), Eigen::Index(c),
                             before % 2 ? -1 : 1);
      }
    }
    Eigen::SparseMatrix<int> d(Eigen::Index(cells_[p + 1].size()), Eigen::Index(cells_[p].size()));
    d.setFromTriplets(entries.begin(), entries.end());
    delta_.push_back(std::move(d));
  }
}

std::size_t MomentAngleCellComplex::cell_count() const {
  std::size_t total = 0;
  for (const auto& layer : cells_) total += layer.size();
  return total;
}

Eigen::Index MomentAngleCellComplex::index_of(const Cell& c) const {
  const auto& layer = index_.at(std::size_t(c.degree()));
  auto it = layer.find(cell_key(c));
  require(it != layer.end(), "not a cell of the moment-angle complex");
  return it->second;
}

bool MomentAngleCellComplex::coboundary_squares_to_zero() const {
  for (std::size_t p = 0; p + 1 < delta_.size(); ++p) {
    const Eigen::SparseMatrix<int> dd = delta_[p + 1] * delta_[p];
    for (int k = 0; k < dd.outerSize(); ++k) {
      for (Eigen::SparseMatrix<int>::InnerIterator it(dd, k); it; ++it) {
        if (it.value() != 0) return false;
      }
    }
  }
  return true;
}

bool MomentAngleCellComplex::respects_multidegree() const {
  for (std::size_t p = 0; p < delta_.size(); ++p) {
    for (int k = 0; k < delta_[p].outerSize(); ++k) {
      for (Eigen::SparseMatrix<int>::InnerIterator it(delta_[p], k); it; ++it) {
        if (it.value() != 0 &&
            cells_[p][std::size_t(it.col())].multidegree() !=
                cells_[p + 1][std::size_t(it.row())].multidegree()) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

std::vector<Eigen::Index> block_indices(
    const std::unordered_map<VertexSet, std::vector<Eigen::Index>>& layer,
    const std::vector<VertexSet>& js) {
  std::vector<Eigen::Index> out;
  for (VertexSet j : js) {
    auto it = layer.find(j);
    if (it != layer.end()) out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

}  // namespace

std::vector<Cell> MomentAngleCellComplex::block_cells(const std::vector<VertexSet>& js,
                                                      int p) const {
  std::vector<Cell> out;
  if (p < 0 || p > top_degree()) return out;
  for (Eigen::Index c : block_indices(by_multidegree_[std::size_t(p)], js)) {
    out.push_back(cells_[std::size_t(p)][std::size_t(c)]);
  }
  return out;
}

CochainComplex MomentAngleCellComplex::block(const std::vector<VertexSet>& js) const {
  CochainComplex cc;
  cc.lowest_degree = 0;
  std::vector<std::vector<Eigen::Index>> idx(cells_.size());
  for (std::size_t p = 0; p < cells_.size(); ++p) {
    idx[p] = block_indices(by_multidegree_[p], js);
    cc.dims.push_back(Eigen::Index(idx[p].size()));
  }
  for (std::size_t p = 0; p + 1 < cells_.size(); ++p) {
    std::unordered_map<Eigen::Index, Eigen::Index> row_of;
    for (std::size_t r = 0; r < idx[p + 1].size(); ++r) row_of.emplace(idx[p + 1][r], Eigen::Index(r));
    SignMatrix d = SignMatrix::Zero(Eigen::Index(idx[p + 1].size()), Eigen::Index(idx[p].size()));
    for (std::size_t c = 0; c < idx[p].size(); ++c) {
      for (Eigen::SparseMatrix<int>::InnerIterator it(delta_[p], idx[p][c]); it; ++it) {
        auto r = row_of.find(it.row());
        if (r != row_of.end()) d(r->second, Eigen::Index(c)) = it.value();
      }
    }
    cc.coboundary.push_back(std::move(d));
  }
  return cc;
}

MomentAngleCellComplex build_cell_complex(const SimplicialComplex& k, int cap) {
  return MomentAngleCellComplex(k, cap);
}

std::map<VertexSet, BettiTable> betti_cellular_split(const MomentAngleCellComplex& z) {
  std::map<VertexSet, BettiTable> out;
  const VertexSet limit = VertexSet{1} << z.complex().vertex_count();
  for (VertexSet j = 0; j < limit; ++j) {
    const auto b = z.block({j}).betti();
    BettiTable t(b.size());
    for (std::size_t p = 0; p < b.size(); ++p) t[p] = std::uint64_t(b[p]);
    out.emplace(j, std::move(t));
  }
  return out;
}

BettiTable betti_cellular(const MomentAngleCellComplex& z) {
  if (!z.respects_multidegree()) {
    fail(ErrorKind::OracleMismatch, "cellular coboundary mixes multidegrees");
  }
  BettiTable out(std::size_t(z.top_degree() + 1), 0);
  for (const auto& [j, t] : betti_cellular_split(z)) {
    for (std::size_t p = 0; p < t.size(); ++p) out[p] += t[p];
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

Rational cellular_action_trace(const MomentAngleCellComplex& z, const Permutation& g, int i,
                               const std::vector<VertexSet>& orbit) {
  const VertexMap map = vertex_map(g, z.complex());
  for (VertexSet j : orbit) {
    require(std::find(orbit.begin(), orbit.end(), map_subset(map, j)) != orbit.end(),
            "multidegree set is not invariant under " + g.str());
  }
  const DegreeCohomology h(z.block(orbit), i);
  if (h.dim() == 0) return 0;
  const auto cells = z.block_cells(orbit, i);
  std::unordered_map<std::uint64_t, Eigen::Index> local;
  for (std::size_t c = 0; c < cells.size(); ++c) local.emplace(cell_key(cells[c]), Eigen::Index(c));
  SignedPermutation action;
  for (const auto& c : cells) {
    const Cell image{map_subset(map, c.l), map_subset(map, c.i)};
    action.target.push_back(local.at(cell_key(image)));
    action.sign.push_back(order_sign(map, c.l));
  }
  return h.induced(action.matrix()).trace();
}

namespace {

std::string mismatch(int i, const std::string& what, const Rational& hochster,
                     const Rational& cellular) {
  return "degree " + std::to_string(i) + ", " + what + ": hochster " + to_string(hochster) +
         " vs cellular " + to_string(cellular);
}

}  // namespace

DiffReport compare_with_hochster(const SimplicialComplex& k, const PermGroup& g,
                                 std::vector<int> degrees, const HochsterOptions& opt, int cap) {
  require(is_g_complex(k, g), "complex is not a simplicial G-complex");
  const SpherePair pair = SpherePair::moment_angle();
  const MomentAngleCellComplex z(k, cap);
  DiffReport report;
  report.checks += 2;
  if (!z.coboundary_squares_to_zero()) report.mismatches.push_back("cellular δ∘δ is not zero");
  if (!z.respects_multidegree()) report.mismatches.push_back("cellular δ mixes multidegrees");
  if (degrees.empty()) {
    for (int i = 0; i <= z.top_degree(); ++i) degrees.push_back(i);
  }

  const auto table = subset_orbit_reps(k, g, -1, opt.subset_cap);
  const auto split = betti_cellular_split(z);
  const auto hochster_total = betti(k, pair, g, opt);
  auto cellular_dim = [&](VertexSet j, int i) -> std::uint64_t {
    const auto& t = split.at(j);
    return std::size_t(i) < t.size() ? t[std::size_t(i)] : 0;
  };

  for (int i : degrees) {
    std::uint64_t cellular_total = 0;
    for (const auto& [j, t] : split) cellular_total += std::size_t(i) < t.size() ? t[std::size_t(i)] : 0;
    const std::uint64_t expected =
        std::size_t(i) < hochster_total.size() ? hochster_total[std::size_t(i)] : 0;
    ++report.checks;
    if (cellular_total != expected) {
      report.mismatches.push_back(mismatch(i, "total Betti number", Rational(expected),
                                           Rational(cellular_total)));
    }

    for (std::size_t o = 0; o < table.orbits().size(); ++o) {
      const Orbit& orbit = table.orbits()[o];
      const VertexSet j = orbit.representative;
      const int p = i - set_size(j) - 1;
      const bool in_range = p >= -1 && p <= k.dim();
      const Eigen::Index hdim = in_range ? SubcomplexCohomology(k, j, p).dim() : 0;
      const auto members = table.members(o);
      bool any = hdim != 0;
      for (VertexSet member : members) {
        const std::uint64_t cd = cellular_dim(member, i);
        any = any || cd != 0;
        ++report.checks;
        if (cd != std::uint64_t(hdim)) {
          report.mismatches.push_back(mismatch(i, "dimension at " + k.format(member), Rational(hdim),
                                               Rational(cd)));
        }
      }
      if (!any || !in_range) continue;

      for (const auto& s : orbit.stabilizer_generators) {
        const Rational hs = summand_character(k, j, p, s, pair, opt.convention);
        const Rational cs = cellular_action_trace(z, s, i, {j});
        ++report.checks;
        if (hs != cs) {
          report.mismatches.push_back(
              mismatch(i, "trace of " + s.str() + " on " + k.format(j), hs, cs));
        }
      }
      for (const auto& gen : g.generators) {
        const VertexMap map = vertex_map(gen, k);
        Rational hs = 0;
        for (VertexSet member : members) {
          if (map_subset(map, member) != member) continue;
          const Permutation& t = table.transversal(member);
          hs += summand_character(k, j, p, t.inverse() * gen * t, pair, opt.convention);
        }
        const Rational cs = cellular_action_trace(z, gen, i, members);
        ++report.checks;
        if (hs != cs) {
          report.mismatches.push_back(
              mismatch(i, "trace of " + gen.str() + " on the orbit of " + k.format(j), hs, cs));
        }
      }
    }
  }
  return report;
}

}  // namespace zk
