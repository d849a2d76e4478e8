#include "zk/hochster.hpp"

#include <algorithm>

#include "zk/error.hpp"

namespace zk {

std::string SpherePair::name() const {
  if (d == 1) return "moment-angle";
  if (d == 0) return "real-moment-angle";
  return "sphere-" + std::to_string(d);
}

std::string to_string(KoszulConvention c) {
  return c == KoszulConvention::Topological ? "topological" : "simplicial";
}

namespace {

void check_subset_count(const SimplicialComplex& k, std::size_t cap) {
  const std::size_t n = k.vertex_count();
  if (n >= 63 || (std::size_t{1} << n) > cap) {
    fail(ErrorKind::CapExceeded, "enumerating all subsets of " + std::to_string(n) +
                                     " vertices exceeds cap of " + std::to_string(cap));
  }
}

void trim(BettiTable& b) {
  while (b.size() > 1 && b.back() == 0) b.pop_back();
}

void accumulate(BettiTable& out, const std::vector<Eigen::Index>& reduced, int j_size,
                SpherePair pair, std::uint64_t weight) {
  for (std::size_t idx = 0; idx < reduced.size(); ++idx) {
    if (reduced[idx] == 0) continue;
    const int i = pair.ambient_degree(int(idx) - 1, j_size);
    if (std::size_t(i) >= out.size()) out.resize(std::size_t(i) + 1, 0);
    out[std::size_t(i)] += std::uint64_t(reduced[idx]) * weight;
  }
}

/// Largest |J| that can reach ambient degree i, or -1 for no bound.
int max_subset_size(SpherePair pair, int i) { return pair.d >= 1 ? i / pair.d : -1; }

}  // namespace

BettiTable betti(const SimplicialComplex& k, SpherePair pair, const HochsterOptions& opt) {
  require(pair.d >= 0, "sphere dimension must be nonnegative");
  check_subset_count(k, opt.subset_cap);
  const auto faces = k.faces();
  BettiTable out(1, 0);
  const VertexSet limit = VertexSet{1} << k.vertex_count();
  for (VertexSet j = 0; j < limit; ++j) accumulate(out, reduced_betti(faces, j), set_size(j), pair, 1);
  trim(out);
  return out;
}

BettiTable betti(const SimplicialComplex& k, SpherePair pair, const PermGroup& g,
                 const HochsterOptions& opt) {
  require(pair.d >= 0, "sphere dimension must be nonnegative");
  require(is_g_complex(k, g), "complex is not a simplicial G-complex");
  const auto table = subset_orbit_reps(k, g, -1, opt.subset_cap);
  const auto faces = k.faces();
  BettiTable out(1, 0);
  for (const auto& o : table.orbits()) {
    accumulate(out, reduced_betti(faces, o.representative), set_size(o.representative), pair,
               o.size);
  }
  trim(out);
  return out;
}

std::uint64_t betti_degree(const SimplicialComplex& k, SpherePair pair, int i,
                           const HochsterOptions& opt) {
  require(pair.d >= 0, "sphere dimension must be nonnegative");
  const auto faces = k.faces();
  const int n = int(k.vertex_count());
  const int top = k.dim();
  std::uint64_t total = 0;
  std::size_t visited = 0;
  for (int s = 0; s <= n; ++s) {
    const int p = i - pair.d * s - 1;
    if (p < -1 || p > top) continue;
    for_each_combination(n, s, [&](VertexSet j) {
      if (++visited > opt.subset_cap) {
        fail(ErrorKind::CapExceeded, "subset enumeration exceeds cap of " +
                                         std::to_string(opt.subset_cap));
      }
      const auto reduced = reduced_betti(faces, j);
      if (std::size_t(p + 1) < reduced.size()) total += std::uint64_t(reduced[std::size_t(p + 1)]);
    });
  }
  return total;
}

int koszul_twist(const VertexMap& g, VertexSet j, SpherePair pair, KoszulConvention c) {
  if (c == KoszulConvention::Simplicial || pair.d % 2 == 0) return 1;
  return order_sign(g, j);
}

Rational summand_character(const SimplicialComplex& k, VertexSet j, int p, const Permutation& g,
                           SpherePair pair, KoszulConvention c) {
  const VertexMap map = vertex_map(g, k);
  const SubcomplexCohomology h(k, j, p);
  return h.trace(map) * koszul_twist(map, j, pair, c);
}

EquivariantReport equivariant_decomposition(const SimplicialComplex& k, const PermGroup& g,
                                            SpherePair pair, int i, const HochsterOptions& opt) {
  require(pair.d >= 0, "sphere dimension must be nonnegative");
  require(is_g_complex(k, g), "complex is not a simplicial G-complex");
  const auto table = subset_orbit_reps(k, g, max_subset_size(pair, i), opt.subset_cap);

  std::size_t group_order = 0;
  try {
    group_order = enumerate_group(g.generators, g.degree, opt.group_cap).size();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
  }

  EquivariantReport report;
  report.degree = i;
  for (const auto& o : table.orbits()) {
    const int s = set_size(o.representative);
    const int p = i - pair.d * s - 1;
    if (p < -1 || p > k.dim()) continue;
    const SubcomplexCohomology h(k, o.representative, p);
    if (h.dim() == 0) continue;

    MultidegreeComponent c;
    c.representative = o.representative;
    c.labels = k.labels_of(o.representative);
    c.orbit_size = o.size;
    c.p = p;
    c.i = i;
    c.dim = h.dim();
    c.stabilizer_generators = o.stabilizer_generators;
    if (group_order) {
      c.stabilizer_order = enumerate_group(o.stabilizer_generators, g.degree, opt.group_cap).size();
      if (c.stabilizer_order * o.size != group_order) {
        fail(ErrorKind::OracleMismatch, "orbit-stabiliser identity fails for a subset orbit");
      }
    }
    c.character.push_back({Permutation::identity(g.degree), Rational(h.dim())});
    for (const auto& s_gen : o.stabilizer_generators) {
      const VertexMap map = vertex_map(s_gen, k);
      c.character.push_back(
          {s_gen, h.trace(map) * koszul_twist(map, o.representative, pair, opt.convention)});
    }
    report.betti += std::uint64_t(c.dim) * c.orbit_size;
    report.components.push_back(std::move(c));
  }
  return report;
}

Integer SymDecomposition::dimension() const {
  Integer sum = 0;
  for (const auto& [lambda, c] : total) sum += hook_dim(pad(lambda, m).realized()) * c;
  return sum;
}

SymDecomposition sym_decomposition(const SimplicialComplex& k, SpherePair pair, int i, int m,
                                   bool with_fusion, const HochsterOptions& opt) {
  require(pair.d >= 1, "irreducible decompositions need a connected sphere pair (d >= 1)");
  require(m >= k.max_index(), "m is below the largest vertex index");
  const PermGroup g = PermGroup::symmetric(m);
  require(is_g_complex(k, g), "complex is not a simplicial Σ_m-complex");
  const auto table = subset_orbit_reps(k, g, max_subset_size(pair, i), opt.subset_cap);

  SymDecomposition out;
  out.degree = i;
  out.m = m;
  for (const auto& o : table.orbits()) {
    const VertexSet j = o.representative;
    const int p = i - pair.d * set_size(j) - 1;
    if (p < -1 || p > k.dim()) continue;
    const SubcomplexCohomology h(k, j, p);
    if (h.dim() == 0) continue;

    const SupportSplit split = support_split(j, k, m, opt.support_cap);
    const int b = int(split.support.size());
    if (factorial(m) != Integer(o.size) * Integer(split.finite_part.size()) * factorial(m - b)) {
      fail(ErrorKind::OracleMismatch,
           "stabiliser of a subset is not its finite part times the complement symmetric group");
    }
    // Restrict the finite part to the support, relabelled as 1..b.
    std::vector<int> slot(std::size_t(m) + 1, -1);
    for (int a = 0; a < b; ++a) slot[std::size_t(split.support[a])] = a;
    std::vector<Permutation> local_group;
    std::map<Permutation, Rational> chi;
    for (const auto& f : split.finite_part) {
      std::vector<int> im(static_cast<std::size_t>(b));
      for (int a = 0; a < b; ++a) im[std::size_t(a)] = slot[std::size_t(f(split.support[a] - 1) + 1)];
      Permutation local(std::move(im));
      const VertexMap map = vertex_map(f, k);
      chi.emplace(local, h.trace(map) * koszul_twist(map, j, pair, opt.convention));
      local_group.push_back(std::move(local));
    }
    const SymClassFunction induced = induce_to_sym(local_group, chi, opt.brute_cap);

    SummandDecomposition s;
    s.representative = j;
    s.p = p;
    s.dim = h.dim();
    s.support = split.support;
    s.finite_order = split.finite_part.size();
    s.local = decompose(induced);
    for (const auto& [mu, c] : s.local) {
      for (const auto& lambda : pieri_induce(mu, m)) s.pieri[unpad(lambda)] += c;
    }
    if (with_fusion) s.fusion = to_padded(decompose(induce_young(induced, m)));
    for (const auto& [lambda, c] : s.pieri) out.total[lambda] += c;
    out.betti += std::uint64_t(s.dim) * o.size;
    out.summands.push_back(std::move(s));
  }
  if (out.dimension() != Integer(out.betti)) {
    fail(ErrorKind::OracleMismatch, "irreducible dimensions do not add up to the Betti number");
  }
  return out;
}

Decomposition sym_irreducible_decomposition(const SimplicialComplex& k, SpherePair pair, int i,
                                            int m, const HochsterOptions& opt) {
  return sym_decomposition(k, pair, i, m, false, opt).total;
}

namespace {

/// (-1)^{Σ_{s ∈ σ} #{j ∈ J : j < s}}: the sign placing σ at the front of J.
int front_sign(VertexSet sigma, VertexSet j) {
  int parity = 0;
  for (int s : set_elements(sigma)) parity += set_size(j & ((VertexSet{1} << s) - 1));
  return parity % 2 ? -1 : 1;
}

/// Sign of merging the sorted list a followed by the sorted list b.
int shuffle_sign(VertexSet a, VertexSet b) {
  int parity = 0;
  for (int x : set_elements(a)) parity += set_size(b & ((VertexSet{1} << x) - 1));
  return parity % 2 ? -1 : 1;
}

}  // namespace

CohomologyClass cup_product(const SimplicialComplex& k, const CohomologyClass& a,
                            const CohomologyClass& b) {
  const VertexSet u = a.subset | b.subset;
  const int r = a.p + b.p + 1;
  const SubcomplexCohomology hu(k, u, r);
  CohomologyClass out{u, r, RationalVector::Zero(hu.dim())};
  const SubcomplexCohomology ha(k, a.subset, a.p), hb(k, b.subset, b.p);
  require(a.coords.size() == ha.dim(), "left class has the wrong number of coordinates");
  require(b.coords.size() == hb.dim(), "right class has the wrong number of coordinates");
  if (a.subset & b.subset) return out;
  if (hu.cohomology().cochain_dim() == 0) return out;

  const RationalVector alpha = ha.cohomology().representatives() * a.coords;
  const RationalVector beta = hb.cohomology().representatives() * b.coords;
  const auto& faces = hu.faces().faces(r);
  RationalVector z = RationalVector::Zero(Eigen::Index(faces.size()));
  for (std::size_t t = 0; t < faces.size(); ++t) {
    const VertexSet sigma = faces[t] & a.subset, tau = faces[t] & b.subset;
    if (set_size(sigma) != a.p + 1) continue;
    const Rational& x = alpha(ha.faces().index_of(sigma));
    const Rational& y = beta(hb.faces().index_of(tau));
    if (x == 0 || y == 0) continue;
    const int sign = front_sign(sigma, a.subset) * front_sign(tau, b.subset) *
                     front_sign(faces[t], u) *
                     shuffle_sign(a.subset & ~sigma, b.subset & ~tau);
    z(Eigen::Index(t)) = sign * x * y;
  }
  if (!hu.cohomology().is_cocycle(z)) {
    fail(ErrorKind::OracleMismatch, "product of cocycles is not a cocycle");
  }
  out.coords = hu.cohomology().project(z);
  return out;
}

CohomologyClass act_on_class(const SimplicialComplex& k, const Permutation& g,
                             const CohomologyClass& a, KoszulConvention c) {
  const VertexMap map = vertex_map(g, k);
  const VertexSet target = map_subset(map, a.subset);
  const SubcomplexCohomology src(k, a.subset, a.p), dst(k, target, a.p);
  require(a.coords.size() == src.dim(), "class has the wrong number of coordinates");
  const int twist = koszul_twist(map, a.subset, SpherePair::moment_angle(), c);
  return {target, a.p, src.transport(map, dst) * a.coords * Rational(twist)};
}

std::vector<CohomologyClass> class_basis(const SimplicialComplex& k, int max_size) {
  const int n = int(k.vertex_count());
  if (max_size < 0 || max_size > n) max_size = n;
  const auto faces = k.faces();
  std::vector<CohomologyClass> out;
  for (int s = 0; s <= max_size; ++s) {
    for_each_combination(n, s, [&](VertexSet j) {
      const auto reduced = reduced_betti(faces, j);
      for (std::size_t idx = 0; idx < reduced.size(); ++idx) {
        for (Eigen::Index e = 0; e < reduced[idx]; ++e) {
          RationalVector v = RationalVector::Zero(reduced[idx]);
          v(e) = 1;
          out.push_back({j, int(idx) - 1, std::move(v)});
        }
      }
    });
  }
  return out;
}

bool g_algebra_equivariance_check(const SimplicialComplex& k, const PermGroup& g,
                                  KoszulConvention c) {
  if (!is_g_complex(k, g)) return false;
  const auto basis = class_basis(k);
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      if (a.subset & b.subset) continue;
      const CohomologyClass ab = cup_product(k, a, b);
      for (const auto& gen : g.generators) {
        const CohomologyClass lhs = act_on_class(k, gen, ab, c);
        const CohomologyClass rhs =
            cup_product(k, act_on_class(k, gen, a, c), act_on_class(k, gen, b, c));
        if (lhs.subset != rhs.subset || lhs.p != rhs.p || lhs.coords != rhs.coords) return false;
      }
    }
  }
  return true;
}

}  // namespace zk
