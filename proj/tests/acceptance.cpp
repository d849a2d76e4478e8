// One PASS/FAIL line per acceptance criterion. Failing criteria are reported,
// not hidden: the exit status is nonzero only if a check crashes.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "zk/error.hpp"
#include "zk/io.hpp"

using namespace zk;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

int failures = 0;

void report(int n, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", n, detail.c_str());
  std::fflush(stdout);
}

void note(const std::string& text) {
  std::printf("     note: %s\n", text.c_str());
  std::fflush(stdout);
}

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::string table_str(const Decomposition& d) {
  std::string s;
  for (const auto& [lambda, c] : d) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c) + " ";
    s += "V" + symbolic(lambda);
  }
  return s.empty() ? "0" : s;
}

std::uint64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int a = 1; a <= k; ++a) r = r * std::uint64_t(n - k + a) / std::uint64_t(a);
  return r;
}

SimplicialComplex labelled_square() {
  std::vector<VertexLabel> vs;
  for (int i = 1; i <= 4; ++i) vs.push_back(VertexLabel::indexed(i));
  return SimplicialComplex(vs, {{vs[0], vs[1]}, {vs[1], vs[2]}, {vs[2], vs[3]}, {vs[3], vs[0]}});
}

PermGroup c4() { return PermGroup(4, {Permutation::from_cycles(4, {{1, 2, 3, 4}})}); }

HochsterOptions with(KoszulConvention c) {
  HochsterOptions o;
  o.convention = c;
  return o;
}

void criterion1() {
  const auto t = Clock::now();
  const auto k = labelled_square();
  const BettiTable b = betti(k, SpherePair::moment_angle(), c4());
  const auto table = subset_orbit_reps(k, c4());
  std::vector<VertexSet> reps;
  for (const auto& o : table.orbits()) reps.push_back(o.representative);
  const std::vector<VertexSet> expected{0, 0b0001, 0b0011, 0b0101, 0b0111, 0b1111};
  const auto& diag = table.orbits()[table.orbit_of(0b0101)];
  const std::size_t stab = enumerate_group(diag.stabilizer_generators, 4, 100).size();
  const double secs = seconds_since(t);
  std::string got;
  for (VertexSet r : reps) got += k.format(r);
  report(1, b == BettiTable{1, 0, 0, 2, 0, 0, 1} && reps == expected && stab == 2 && secs < 1.0,
         "betti " + betti_json(b).dump() + ", representatives " + got + ", |stab{1,3}| = " +
             std::to_string(stab) + ", " + std::to_string(secs) + " s");
}

void criterion2() {
  const auto t = Clock::now();
  bool ok = true;
  std::string bad;
  for (int kk = 0; kk <= 1; ++kk) {
    for (int m = 1; m <= 7; ++m) {
      const BettiTable b = betti(skeleton(m, kk), SpherePair::moment_angle());
      for (std::size_t i = 1; i < b.size(); ++i) {
        const int j = int(i) - kk - 1;
        const std::uint64_t c = binom(m, j) * binom(j - 1, kk + 1);
        if (b[i] != c) {
          ok = false;
          bad += " (k=" + std::to_string(kk) + ",m=" + std::to_string(m) + ",i=" +
                 std::to_string(i) + ")";
        }
      }
      if (b.empty() || b[0] != 1) ok = false;
    }
  }
  const double secs = seconds_since(t);
  report(2, ok && secs < 10.0,
         "b_i = C(m,j) C(j-1,k+1) for k in {0,1}, m <= 7" + (ok ? std::string() : ", off at" + bad) +
             ", " + std::to_string(secs) + " s");
}

struct ExpectedTable {
  int degree;
  int lo, hi;
  Decomposition table;
};

std::vector<ExpectedTable> expected_tables() {
  return {
      {3, 3, 8, {{P({1}), 1}, {P({1, 1}), 1}}},
      {4, 5, 9, {{P({1}), 1}, {P({2}), 1}, {P({1, 1}), 1}, {P({2, 1}), 1}}},
      {5, 7, 10,
       {{P({1}), 1}, {P({2}), 1}, {P({1, 1}), 1}, {P({3}), 1}, {P({2, 1}), 1}, {P({3, 1}), 1}}},
      {6, 9, 11,
       {{P({1}), 1},
        {P({2}), 1},
        {P({1, 1}), 1},
        {P({3}), 1},
        {P({2, 1}), 1},
        {P({4}), 1},
        {P({3, 1}), 1},
        {P({4, 1}), 1}}},
  };
}

/// Compares every (i, m) of the expected tables; returns the first mismatch.
std::string compare_tables(KoszulConvention c, bool& ok, bool& routes_agree, int& summands) {
  ok = true;
  routes_agree = true;
  summands = 0;
  std::string first;
  for (const auto& t : expected_tables()) {
    for (int m = t.lo; m <= t.hi; ++m) {
      const auto d = sym_decomposition(skeleton(m, 0), SpherePair::moment_angle(), t.degree, m,
                                       true, with(c));
      for (const auto& s : d.summands) {
        ++summands;
        if (s.fusion != s.pieri) routes_agree = false;
      }
      if (d.total != t.table && ok) {
        ok = false;
        first = "H^" + std::to_string(t.degree) + " at m=" + std::to_string(m) + ": got " +
                table_str(d.total) + ", expected " + table_str(t.table);
      }
    }
  }
  return first;
}

void criterion3() {
  bool ok = false, routes = false;
  int summands = 0;
  const std::string first = compare_tables(KoszulConvention::Topological, ok, routes, summands);
  report(3, ok,
         ok ? "H^3..H^6 tables reproduced" : "tables differ from the expected ones; first: " + first);
  bool ok_s = false;
  const std::string first_s = compare_tables(KoszulConvention::Simplicial, ok_s, routes, summands);
  note(std::string("without the Koszul twist (--flip-koszul) the expected tables ") +
       (ok_s ? "are reproduced exactly" : "still differ: " + first_s));
  if (!ok) {
    note("the twisted action is the one the cellular oracle confirms (criteria 5 and 11)");
  }
}

void criterion6() {
  bool ok = false, routes = false, routes_s = false;
  int summands = 0, summands_s = 0;
  compare_tables(KoszulConvention::Topological, ok, routes, summands);
  compare_tables(KoszulConvention::Simplicial, ok, routes_s, summands_s);
  report(6, routes && routes_s,
         "class fusion = Pieri on " + std::to_string(summands + summands_s) +
             " orbit summands (both conventions)");
}

void criterion4() {
  const auto a = sym_decomposition(skeleton(5, 0), SpherePair::moment_angle(), 4, 5, false);
  const auto b = sym_decomposition(skeleton(7, 0), SpherePair::moment_angle(), 5, 7, false);
  const Integer da = decomposition_dim([&] {
    Decomposition r;
    for (const auto& [l, c] : a.total) r[pad(l, 5).realized()] = c;
    return r;
  }());
  const Integer db = decomposition_dim([&] {
    Decomposition r;
    for (const auto& [l, c] : b.total) r[pad(l, 7).realized()] = c;
    return r;
  }());
  report(4, da == 20 && db == 105 && da == 2 * binom(5, 3) && db == 3 * binom(7, 4),
         "sum of hook dimensions: (4,5) -> " + da.str() + ", (5,7) -> " + db.str());
}

/// The subgroup of Σ_5 preserving k, generated by all found symmetries.
PermGroup automorphisms(const SimplicialComplex& k) {
  std::vector<Permutation> gens;
  std::vector<int> p{0, 1, 2, 3, 4};
  do {
    const Permutation g(p);
    if (g.is_identity()) continue;
    if (is_g_complex(k, PermGroup(5, {g}))) gens.push_back(g);
  } while (std::next_permutation(p.begin(), p.end()));
  return PermGroup(5, std::move(gens));
}

SimplicialComplex random_complex(std::mt19937& rng) {
  std::vector<VertexLabel> vs;
  for (int i = 1; i <= 5; ++i) vs.push_back(VertexLabel::indexed(i));
  std::uniform_int_distribution<int> count(2, 6);
  std::uniform_int_distribution<VertexSet> mask(1, 31);
  std::vector<VertexSet> faces;
  const int n = count(rng);
  for (int a = 0; a < n; ++a) {
    VertexSet f = mask(rng);
    while (set_size(f) > 3) f &= f - 1;
    faces.push_back(f);
  }
  return SimplicialComplex::from_masks(vs, faces);
}

void criterion5() {
  const auto t = Clock::now();
  std::vector<std::pair<std::string, std::pair<SimplicialComplex, PermGroup>>> cases;
  cases.push_back({"square+C4", {labelled_square(), c4()}});
  for (int m = 1; m <= 5; ++m) {
    cases.push_back({"skeleton(" + std::to_string(m) + ",0)",
                     {skeleton(m, 0), PermGroup::symmetric(m)}});
  }
  cases.push_back({"skeleton(4,1)", {skeleton(4, 1), PermGroup::symmetric(4)}});
  cases.push_back({"vc_cube_dual(2)+S2", {vc_cube_dual(2), PermGroup::symmetric(2)}});
  std::mt19937 rng(20240531);
  std::string orders;
  for (int r = 0; r < 10; ++r) {
    const auto k = random_complex(rng);
    const PermGroup g = automorphisms(k);
    orders += (orders.empty() ? "" : " ") + std::to_string(enumerate_group(g.generators, 5, 120).size());
    cases.push_back({"random complex " + std::to_string(r), {k, g}});
  }
  std::size_t checks = 0, mismatches = 0;
  std::string first;
  for (const auto& [name, kg] : cases) {
    const DiffReport d = compare_with_hochster(kg.first, kg.second);
    checks += d.checks;
    mismatches += d.mismatches.size();
    if (!d.empty() && first.empty()) first = name + ": " + d.mismatches.front();
  }
  const double secs = seconds_since(t);
  report(5, mismatches == 0 && secs < 120.0,
         std::to_string(cases.size()) + " complexes, " + std::to_string(checks) + " checks, " +
             std::to_string(mismatches) + " mismatches" + (first.empty() ? "" : " (" + first + ")") +
             ", " + std::to_string(secs) + " s");
  note("automorphism group orders of the random complexes: " + orders);
}

void criterion7() {
  const auto f = FamilySpec::skeleton(0);
  const auto s4 = multiplicity_scan(f, SpherePair::moment_angle(), 4, {4, 9});
  const auto s3 = multiplicity_scan(f, SpherePair::moment_angle(), 3, {3, 9});
  auto onset = [](const StabilityScanReport& s) {
    return s.onset ? std::to_string(*s.onset) : std::string("none");
  };
  const bool ok = s4.onset == 5 && s3.onset == 3 && s4.weight <= 2 && s3.weight <= 1;
  report(7, ok,
         "i=4: onset " + onset(s4) + ", weight " + std::to_string(s4.weight) + " (bound 2); i=3: onset " +
             onset(s3) + ", weight " + std::to_string(s3.weight) + " (bound 1)");
  const auto u4 = multiplicity_scan(f, SpherePair::moment_angle(), 4, {4, 9},
                                    with(KoszulConvention::Simplicial));
  const auto u3 = multiplicity_scan(f, SpherePair::moment_angle(), 3, {3, 9},
                                    with(KoszulConvention::Simplicial));
  note("without the Koszul twist: i=4 onset " + onset(u4) + ", weight " + std::to_string(u4.weight) +
       "; i=3 onset " + onset(u3) + ", weight " + std::to_string(u3.weight));
  note("H^3 = " + table_str(s3.rows.back().table) + " (twisted), " +
       table_str(u3.rows.back().table) + " (untwisted)");
}

void criterion8() {
  const auto f = FamilySpec::skeleton(0);
  const auto g3 = betti_growth(f, SpherePair::moment_angle(), 3, {2, 10});
  const auto g4 = betti_growth(f, SpherePair::moment_angle(), 4, {3, 10});
  const std::vector<Rational> c3{Rational(0), Rational(-1, 2), Rational(1, 2)};
  const std::vector<Rational> c4v{Rational(0), Rational(2, 3), Rational(-1), Rational(1, 3)};
  report(8, g3.polynomial && g4.polynomial && g3.coefficients == c3 && g4.coefficients == c4v,
         "b_3 = " + g3.str() + ", b_4 = " + g4.str());
}

void criterion9() {
  const auto t = Clock::now();
  std::vector<FamilySpec> families{FamilySpec::skeleton(0),           FamilySpec::skeleton(1),
                                   FamilySpec::skeleton(2),           FamilySpec::join_skeletons({0, 0}),
                                   FamilySpec::join_skeletons({1, 0}), FamilySpec::vc_cube_dual()};
  bool ok = true;
  std::string bad;
  for (const auto& f : families) {
    bool fine = check_consistent(f, {1, 6});
    for (int r = 0; r <= 2; ++r) fine = fine && check_r_vertex_stable(f, r, r + 1, {r + 1, 6});
    fine = fine && check_stabiliser_consistent_all(f, 3, {1, 6});
    if (!fine) {
      ok = false;
      bad += " " + f.description;
    }
  }
  report(9, ok,
         std::to_string(families.size()) + " families over m <= 6" +
             (ok ? "" : ", failing:" + bad) + ", " + std::to_string(seconds_since(t)) + " s");
}

void criterion10() {
  bool agree = true, dual = true;
  std::string b3;
  for (int m = 2; m <= 4; ++m) {
    const auto k = vc_cube_dual(m);
    const BettiTable h = betti(k, SpherePair::moment_angle(), PermGroup::symmetric(m));
    const BettiTable c = betti_cellular(build_cell_complex(k, 2 * m + 1));
    const int top = 3 * m + 1;
    auto at = [](const BettiTable& b, int i) { return i < int(b.size()) ? b[std::size_t(i)] : 0; };
    for (int i = 0; i <= top + 2; ++i) {
      if (at(h, i) != at(c, i)) agree = false;
      if (i <= top && at(h, i) != at(h, top - i)) dual = false;
    }
    if (int(h.size()) > top + 1 && std::any_of(h.begin() + top + 1, h.end(), [](auto x) { return x != 0; })) {
      dual = false;
    }
    b3 += (b3.empty() ? "" : ", ") + std::string("m=") + std::to_string(m) + ": " +
          std::to_string(at(h, 3));
  }
  report(10, agree && dual,
         std::string("Hochster and cellular Betti ") + (agree ? "agree" : "differ") +
             ", Poincaré duality " + (dual ? "holds" : "fails") + " for m = 2..4");
  note("b_3 of Z_{K_m}: " + b3 + " (expected value: m)");
}

void criterion11() {
  const auto d = compare_with_hochster(labelled_square(), c4(), {},
                                       with(KoszulConvention::Simplicial));
  report(11, !d.empty(),
         "--flip-koszul on the square: " + std::to_string(d.mismatches.size()) + " mismatches" +
             (d.empty() ? "" : " (first: " + d.mismatches.front() + ")"));
}

}  // namespace

int main() {
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
  } catch (const std::exception& e) {
    std::printf("ERROR: %s\n", e.what());
    return 1;
  }
  std::printf("%d of 11 criteria failed\n", failures);
  return 0;
}
