#include "zk/families.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "zk/error.hpp"

namespace zk {

FamilySpec FamilySpec::skeleton(int k) {
  require(k >= -1, "skeleton family: k must be at least -1");
  return {Kind::Skeleton, {k}, "skeleton:" + std::to_string(k), {}};
}

FamilySpec FamilySpec::join_skeletons(std::vector<int> ks) {
  require(!ks.empty(), "join family needs at least one skeleton");
  std::string d = "join:";
  for (std::size_t a = 0; a < ks.size(); ++a) {
    require(ks[a] >= -1, "join family: k must be at least -1");
    d += (a ? "," : "") + std::to_string(ks[a]);
  }
  return {Kind::JoinSkeletons, std::move(ks), d, {}};
}

FamilySpec FamilySpec::vc_cube_dual() { return {Kind::VcCubeDual, {}, "vccube", {}}; }

FamilySpec FamilySpec::custom_rule(std::string description,
                                   std::function<SimplicialComplex(int)> rule) {
  return {Kind::Custom, {}, std::move(description), std::move(rule)};
}

namespace {

int parse_int(const std::string& s, const std::string& context) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == s.size() && !s.empty(), "expected an integer in " + context + ", got '" + s + "'");
  return v;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  if (text == "vccube") return vc_cube_dual();
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "skeleton" && colon != std::string::npos) return skeleton(parse_int(tail, text));
  if (head == "join" && colon != std::string::npos) {
    std::vector<int> ks;
    std::stringstream ss(tail);
    std::string item;
    while (std::getline(ss, item, ',')) ks.push_back(parse_int(item, text));
    return join_skeletons(std::move(ks));
  }
  fail(ErrorKind::Validation, "unknown family '" + text +
                                  "' (expected skeleton:k, join:k1,k2,.., vccube or custom:<file>)");
}

FamilyInstance instantiate(const FamilySpec& f, int m) {
  require(m >= 1, "family instance needs m >= 1");
  FamilyInstance out{{}, PermGroup::symmetric(m)};
  switch (f.kind) {
    case FamilySpec::Kind::Skeleton:
      out.complex = skeleton(m, f.ks.at(0));
      break;
    case FamilySpec::Kind::JoinSkeletons:
      out.complex = skeleton(m, f.ks.at(0));
      for (std::size_t a = 1; a < f.ks.size(); ++a) out.complex = join(out.complex, skeleton(m, f.ks[a]));
      break;
    case FamilySpec::Kind::VcCubeDual:
      out.complex = vc_cube_dual(m);
      break;
    case FamilySpec::Kind::Custom:
      require(bool(f.custom), "custom family without a rule");
      out.complex = f.custom(m);
      break;
  }
  require(out.complex.max_index() <= m, "family instance uses an index above m");
  return out;
}

bool check_consistent(const FamilySpec& f, MRange range) {
  for (int m = range.lo; m <= range.hi; ++m) {
    const auto cur = instantiate(f, m);
    if (!is_g_complex(cur.complex, cur.group)) return false;
    if (m == range.hi) break;
    const auto next = instantiate(f, m + 1);
    const auto& k = cur.complex;
    const auto& kn = next.complex;
    for (const auto& v : k.vertices()) {
      if (!kn.position(v)) return false;
    }
    for (VertexSet facet : k.facets()) {
      if (!kn.contains(kn.mask_of(k.labels_of(facet)))) return false;
    }
    for (const auto& g : cur.group.generators) {
      const VertexMap small = vertex_map(g, k);
      const VertexMap big = vertex_map(g.extended(m + 1), kn);
      for (VertexSet facet : k.facets()) {
        const VertexSet image_then_include = kn.mask_of(k.labels_of(map_subset(small, facet)));
        const VertexSet include_then_image = map_subset(big, kn.mask_of(k.labels_of(facet)));
        if (image_then_include != include_then_image) return false;
      }
    }
  }
  return true;
}

namespace {

/// A complete invariant of the Σ_m-orbit of a labelled vertex subset: the
/// multiset of tag sets per index, plus the tags of index-free vertices.
using Canonical = std::pair<std::vector<std::vector<int>>, std::vector<int>>;

Canonical canonical(const std::vector<VertexLabel>& labels) {
  std::map<int, std::vector<int>> per_index;
  Canonical c;
  for (const auto& v : labels) {
    if (v.index) {
      per_index[*v.index].push_back(v.tag);
    } else {
      c.second.push_back(v.tag);
    }
  }
  for (auto& [i, tags] : per_index) {
    std::sort(tags.begin(), tags.end());
    c.first.push_back(std::move(tags));
  }
  std::sort(c.first.begin(), c.first.end());
  std::sort(c.second.begin(), c.second.end());
  return c;
}

std::set<Canonical> vertex_subset_forms(const SimplicialComplex& k, int size) {
  std::set<Canonical> out;
  for_each_combination(int(k.vertex_count()), size,
                       [&](VertexSet s) { out.insert(canonical(k.labels_of(s))); });
  return out;
}

std::set<Canonical> face_forms(const SimplicialComplex& k, int r) {
  std::set<Canonical> out;
  for (VertexSet f : k.faces()) {
    if (set_size(f) == r + 1) out.insert(canonical(k.labels_of(f)));
  }
  return out;
}

bool stable(const FamilySpec& f, int d, MRange range,
            const std::function<std::set<Canonical>(const SimplicialComplex&)>& forms) {
  require(d <= range.lo, "stability degree must not exceed the start of the range");
  const auto base = forms(instantiate(f, d).complex);
  for (int m = range.lo; m <= range.hi; ++m) {
    for (const auto& c : forms(instantiate(f, m).complex)) {
      if (!base.count(c)) return false;
    }
  }
  return true;
}

/// Size of the Σ_m-orbit of a subset, by breadth-first search.
std::size_t orbit_size(const SimplicialComplex& k, const PermGroup& g, VertexSet j) {
  std::vector<VertexMap> maps;
  for (const auto& gen : g.generators) maps.push_back(vertex_map(gen, k));
  std::set<VertexSet> seen{j};
  std::vector<VertexSet> queue{j};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& map : maps) {
      const VertexSet next = map_subset(map, queue[head]);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen.size();
}

bool stabiliser_consistent_at(const SimplicialComplex& k, int m, VertexSet j, int support_cap) {
  const PermGroup g = PermGroup::symmetric(m);
  const SupportSplit split = support_split(j, k, m, support_cap);
  const int b = int(split.support.size());
  if (factorial(m) != Integer(orbit_size(k, g, j)) * Integer(split.finite_part.size()) *
                          factorial(m - b)) {
    return false;
  }
  std::vector<int> complement;
  for (int i = 1; i <= m; ++i) {
    if (!std::binary_search(split.support.begin(), split.support.end(), i)) complement.push_back(i);
  }
  for (std::size_t a = 0; a + 1 < complement.size(); ++a) {
    const auto t = Permutation::from_cycles(m, {{complement[a], complement[a + 1]}});
    const VertexMap map = vertex_map(t, k);
    for (int v : set_elements(j)) {
      if (map[std::size_t(v)] != v) return false;
    }
  }
  return true;
}

}  // namespace

bool check_r_vertex_stable(const FamilySpec& f, int r, int d, MRange range) {
  return stable(f, d, range,
                [r](const SimplicialComplex& k) { return vertex_subset_forms(k, r + 1); });
}

bool check_r_face_stable(const FamilySpec& f, int r, int d, MRange range) {
  return stable(f, d, range, [r](const SimplicialComplex& k) { return face_forms(k, r); });
}

bool check_stabiliser_consistent(const FamilySpec& f, const std::vector<VertexLabel>& j,
                                 MRange range, int support_cap) {
  for (int m = range.lo; m <= range.hi; ++m) {
    const auto k = instantiate(f, m).complex;
    if (!stabiliser_consistent_at(k, m, k.mask_of(j), support_cap)) return false;
  }
  return true;
}

bool check_stabiliser_consistent_all(const FamilySpec& f, int max_size, MRange range,
                                     int support_cap) {
  std::map<std::vector<VertexLabel>, int> first_seen;
  for (int m = range.lo; m <= range.hi; ++m) {
    const auto k = instantiate(f, m).complex;
    for (int s = 0; s <= max_size; ++s) {
      for_each_combination(int(k.vertex_count()), s,
                           [&](VertexSet j) { first_seen.emplace(k.labels_of(j), m); });
    }
  }
  for (const auto& [labels, m] : first_seen) {
    if (!check_stabiliser_consistent(f, labels, {m, range.hi}, support_cap)) return false;
  }
  return true;
}

void parallel_for(int n, int threads, const std::function<void(int)>& work) {
  if (threads <= 1 || n <= 1) {
    for (int k = 0; k < n; ++k) work(k);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min(threads, n); ++t) {
    pool.emplace_back([&] {
      for (int k = next++; k < n; k = next++) {
        try {
          work(k);
        } catch (...) {
          errors[std::size_t(k)] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

StabilityScanReport multiplicity_scan(const FamilySpec& f, SpherePair pair, int i, MRange range,
                                      const HochsterOptions& opt, int threads) {
  require(range.lo >= 1 && range.lo <= range.hi, "empty m range");
  StabilityScanReport report;
  report.degree = i;
  report.rows.resize(std::size_t(range.hi - range.lo + 1));
  parallel_for(int(report.rows.size()), threads, [&](int idx) {
    const int m = range.lo + idx;
    const auto inst = instantiate(f, m);
    const SymDecomposition d = sym_decomposition(inst.complex, pair, i, m, false, opt);
    report.rows[std::size_t(idx)] = ScanRow{m, d.betti, d.total, d.dimension()};
  });
  const auto& rows = report.rows;
  std::size_t start = rows.size() - 1;
  while (start > 0 && rows[start - 1].table == rows.back().table) --start;
  if (start + 1 < rows.size()) report.onset = rows[start].m;
  for (const auto& row : rows) report.weight = std::max(report.weight, weight(row.table));
  std::vector<std::pair<int, std::uint64_t>> values;
  for (const auto& row : rows) values.emplace_back(row.m, row.betti);
  report.growth = betti_growth(values);
  return report;
}

std::vector<std::pair<int, std::uint64_t>> betti_sequence(const FamilySpec& f, SpherePair pair,
                                                          int i, MRange range,
                                                          const HochsterOptions& opt,
                                                          int threads) {
  require(range.lo >= 1 && range.lo <= range.hi, "empty m range");
  std::vector<std::pair<int, std::uint64_t>> out(std::size_t(range.hi - range.lo + 1));
  parallel_for(int(out.size()), threads, [&](int idx) {
    const int m = range.lo + idx;
    out[std::size_t(idx)] = {m, betti_degree(instantiate(f, m).complex, pair, i, opt)};
  });
  return out;
}

namespace {

/// Coefficients of Π_{j<k} (x - a - j) / k! in the monomial basis.
std::vector<Rational> binomial_poly(int a, int k) {
  std::vector<Rational> poly{Rational(1)};
  for (int j = 0; j < k; ++j) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t e = 0; e < poly.size(); ++e) {
      next[e + 1] += poly[e];
      next[e] -= poly[e] * (a + j);
    }
    poly = std::move(next);
  }
  const Rational f(factorial(k));
  for (auto& c : poly) c /= f;
  return poly;
}

Rational evaluate(const std::vector<Rational>& poly, int x) {
  Rational v = 0;
  for (std::size_t e = poly.size(); e-- > 0;) v = v * x + poly[e];
  return v;
}

}  // namespace

GrowthReport betti_growth(const std::vector<std::pair<int, std::uint64_t>>& values) {
  GrowthReport report;
  if (values.empty()) return report;
  for (std::size_t a = 1; a < values.size(); ++a) {
    require(values[a].first == values[a - 1].first + 1, "betti_growth needs consecutive m");
  }
  std::vector<Integer> row;
  for (const auto& [m, b] : values) row.emplace_back(b);
  report.differences.push_back(row);
  while (row.size() > 1) {
    std::vector<Integer> next;
    for (std::size_t a = 0; a + 1 < row.size(); ++a) next.push_back(row[a + 1] - row[a]);
    report.differences.push_back(next);
    row = std::move(next);
  }
  const int n = int(values.size());
  for (int t = 0; t + 1 < int(report.differences.size()); ++t) {
    const auto& d = report.differences[std::size_t(t + 1)];
    std::size_t s = d.size();
    while (s > 0 && d[s - 1] == 0) --s;
    if (d.size() - s < 2) continue;
    // Values from index s on satisfy Δ^{t+1} = 0: fit the Newton form at s.
    const int m0 = values[s].first;
    std::vector<Rational> poly(std::size_t(t + 1), Rational(0));
    for (int k = 0; k <= t; ++k) {
      const Rational lead(report.differences[std::size_t(k)][s]);
      const auto basis = binomial_poly(m0, k);
      for (std::size_t e = 0; e < basis.size(); ++e) poly[e] += lead * basis[e];
    }
    bool exact = true;
    for (int a = int(s); a < n; ++a) {
      if (evaluate(poly, values[std::size_t(a)].first) != Rational(values[std::size_t(a)].second)) {
        exact = false;
      }
    }
    if (!exact) continue;
    report.polynomial = true;
    report.degree = t;
    report.tail_start = m0;
    report.coefficients = std::move(poly);
    return report;
  }
  return report;
}

GrowthReport betti_growth(const FamilySpec& f, SpherePair pair, int i, MRange range,
                          const HochsterOptions& opt, int threads) {
  return betti_growth(betti_sequence(f, pair, i, range, opt, threads));
}

std::string GrowthReport::str() const {
  if (!polynomial) return "not yet polynomial";
  std::string out;
  for (std::size_t e = coefficients.size(); e-- > 0;) {
    const Rational& c = coefficients[e];
    if (c == 0) continue;
    std::string term = to_string(abs(c));
    if (e > 0) {
      term = (abs(c) == 1 ? "" : term + " ") + "m" + (e > 1 ? "^" + std::to_string(e) : "");
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace zk
