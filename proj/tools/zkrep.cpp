// zkrep: Betti numbers, equivariant decompositions and stability scans of
// moment-angle complexes.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zk/error.hpp"
#include "zk/io.hpp"

namespace {

using nlohmann::ordered_json;
using namespace zk;

enum Exit { kOk = 0, kValidation = 1, kCap = 2, kMismatch = 3 };

struct Common {
  std::string input;
  std::string family;
  std::string m;
  int d = 1;
  int threads = 1;
  bool deterministic = false;
  bool flip_koszul = false;
  std::size_t cap_subsets = kDefaultSubsetCap;
  std::size_t cap_group = kDefaultGroupCap;
  int cap_support = kDefaultSupportCap;
  int cap_brute = kDefaultBruteCap;
  int cap_oracle = kDefaultOracleCap;
  std::string output;

  HochsterOptions options() const {
    HochsterOptions o;
    o.subset_cap = cap_subsets;
    o.group_cap = cap_group;
    o.support_cap = cap_support;
    o.brute_cap = cap_brute;
    o.convention = flip_koszul ? KoszulConvention::Simplicial : KoszulConvention::Topological;
    return o;
  }
  SpherePair pair() const { return SpherePair{d}; }
};

void add_common(CLI::App* app, Common& c, bool source = true) {
  if (source) {
    app->add_option("-i,--input", c.input, "ComplexDocument JSON file");
    app->add_option("--family", c.family,
                    "skeleton:k | join:k1,k2,.. | vccube | custom:<file>");
  }
  app->add_option("--m", c.m, "number of indices, N or LO..HI");
  app->add_option("--d", c.d, "sphere dimension: 1 moment-angle, 0 real")
      ->check(CLI::IsMember({0, 1}));
  app->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
  app->add_flag("--deterministic", c.deterministic,
                "omit timing and thread count so reports are byte-identical");
  app->add_flag("--flip-koszul", c.flip_koszul,
                "drop the Koszul sign twist from the action (negative control)");
  app->add_option("--cap-subsets", c.cap_subsets, "max vertex subsets enumerated");
  app->add_option("--cap-group", c.cap_group, "max group order enumerated");
  app->add_option("--cap-support", c.cap_support, "max support size of a multidegree");
  app->add_option("--cap-brute", c.cap_brute, "max degree for explicit induction");
  app->add_option("--cap-oracle", c.cap_oracle, "max vertices for the cellular oracle");
  app->add_option("-o,--output", c.output, "write the report here instead of stdout");
}

MRange parse_m(const std::string& text) {
  require(!text.empty(), "--m is required");
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const int m = std::stoi(text);
      return {m, m};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    fail(ErrorKind::Validation, "--m: expected N or LO..HI, got '" + text + "'");
  }
}

MRange checked_range(const std::string& text) {
  const MRange r = parse_m(text);
  require(r.lo >= 1 && r.lo <= r.hi, "--m: need 1 <= LO <= HI");
  return r;
}

struct Source {
  SimplicialComplex complex;
  std::optional<PermGroup> group;
  std::map<std::string, int> ids;  // vertex id -> position
  std::string description;
  std::optional<int> m;            // set for families
};

Source load_source(const Common& c) {
  require(c.input.empty() != c.family.empty(), "give exactly one of --input and --family");
  Source s;
  if (!c.input.empty()) {
    const ComplexDocument doc = load_document(c.input);
    LoadedComplex lc = to_complex(doc);
    s.complex = std::move(lc.complex);
    s.group = std::move(lc.group);
    for (const auto& v : doc.vertices) {
      s.ids[v.id] = *s.complex.position(VertexLabel{v.index, v.tag});
    }
    s.description = c.input;
    return s;
  }
  const FamilySpec f = family_from_string(c.family);
  const MRange r = checked_range(c.m);
  require(r.lo == r.hi, "--m: this command takes a single value");
  FamilyInstance inst = instantiate(f, r.lo);
  s.complex = std::move(inst.complex);
  s.group = std::move(inst.group);
  for (std::size_t a = 0; a < s.complex.vertex_count(); ++a) {
    s.ids[s.complex.vertices()[a].str()] = int(a);
  }
  s.description = f.description + " at m=" + std::to_string(r.lo);
  s.m = r.lo;
  return s;
}

ordered_json envelope(const std::string& command, const Common& c, const std::string& source) {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["source"] = source;
  j["pair"] = c.pair().name();
  j["conventions"] = {
      {"orbit_representative", "least subset by (size, lexicographic vertex order)"},
      {"koszul", to_string(c.options().convention)},
      {"orientation", "cochains on simplices with increasing vertex order"},
      {"padding", "lambda[m] = (m-|lambda|, lambda)"},
      {"ambient_degree", "i = p + d|J| + 1"}};
  j["caps"] = {{"subsets", c.cap_subsets},
               {"group", c.cap_group},
               {"support", c.cap_support},
               {"brute", c.cap_brute},
               {"oracle", c.cap_oracle}};
  return j;
}

using Clock = std::chrono::steady_clock;

void emit(ordered_json report, const Common& c, Clock::time_point start) {
  if (!c.deterministic) {
    report["threads"] = c.threads;
    report["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  }
  const std::string text = report.dump(2) + "\n";
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.output, std::ios::binary);
    require(bool(out), "cannot write '" + c.output + "'");
    out << text;
  }
}

int cmd_betti(const Common& c, bool split) {
  const auto start = Clock::now();
  const Source s = load_source(c);
  const HochsterOptions opt = c.options();
  const BettiTable b = s.group ? betti(s.complex, c.pair(), *s.group, opt)
                               : betti(s.complex, c.pair(), opt);
  ordered_json r = envelope("betti", c, s.description);
  r["result"]["betti"] = betti_json(b);
  r["result"]["table"] = b;
  if (split) {
    const int n = int(s.complex.vertex_count());
    if (n < 63 && (std::size_t{1} << n) > opt.subset_cap) {
      fail(ErrorKind::CapExceeded, "--split: 2^" + std::to_string(n) + " subsets exceed --cap-subsets");
    }
    ordered_json rows = ordered_json::array();
    const auto faces = s.complex.faces();
    for (int size = 0; size <= n; ++size) {
      for_each_combination(n, size, [&](VertexSet j) {
        const auto reduced = reduced_betti(faces, j);
        for (std::size_t idx = 0; idx < reduced.size(); ++idx) {
          if (reduced[idx] == 0) continue;
          const int p = int(idx) - 1;
          rows.push_back({{"subset", labels_json(s.complex, j)},
                          {"p", p},
                          {"degree", c.pair().ambient_degree(p, size)},
                          {"dimension", reduced[idx]}});
        }
      });
    }
    r["result"]["multidegrees"] = std::move(rows);
  }
  emit(std::move(r), c, start);
  return kOk;
}

std::string irreducible_sum(const Decomposition& padded, int m) {
  if (padded.empty()) return "0";
  std::string out;
  for (const auto& [lambda, mult] : padded) {
    if (!out.empty()) out += " + ";
    if (mult != 1) out += std::to_string(mult) + " ";
    out += "V" + PaddedPartition{lambda, m}.str();
  }
  return out;
}

int cmd_decompose(const Common& c, int degree, bool irreducibles, bool fusion) {
  const auto start = Clock::now();
  const Source s = load_source(c);
  const HochsterOptions opt = c.options();
  ordered_json r = envelope("decompose", c, s.description);
  if (irreducibles) {
    int m = s.m ? *s.m : s.group ? s.group->degree : s.complex.max_index();
    if (!s.m && !c.m.empty()) m = parse_m(c.m).lo;
    const SymDecomposition d = sym_decomposition(s.complex, c.pair(), degree, m, fusion, opt);
    r["result"] = report_json(s.complex, d);
    r["result"]["sum"] = irreducible_sum(d.total, m);
  } else {
    const PermGroup g = s.group ? *s.group : PermGroup::trivial(s.complex.max_index());
    r["result"] = report_json(s.complex, equivariant_decomposition(s.complex, g, c.pair(), degree, opt));
  }
  emit(std::move(r), c, start);
  return kOk;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void write_csv(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(bool(out), "cannot write '" + path + "'");
  out << text;
}

int cmd_scan(const Common& c, int degree, bool betti_only, const std::string& csv) {
  const auto start = Clock::now();
  require(!c.family.empty() && c.input.empty(), "scan needs --family");
  const FamilySpec f = family_from_string(c.family);
  const MRange range = checked_range(c.m);
  const HochsterOptions opt = c.options();
  ordered_json r = envelope("scan", c, f.description + " for m=" + c.m);
  std::ostringstream table;
  if (betti_only) {
    const auto seq = betti_sequence(f, c.pair(), degree, range, opt, c.threads);
    r["result"]["degree"] = degree;
    r["result"]["rows"] = ordered_json::array();
    table << "m,betti\n";
    for (const auto& [m, b] : seq) {
      r["result"]["rows"].push_back({{"m", m}, {"betti", b}});
      table << m << "," << b << "\n";
    }
    r["result"]["growth"] = report_json(betti_growth(seq));
  } else {
    const StabilityScanReport scan = multiplicity_scan(f, c.pair(), degree, range, opt, c.threads);
    r["result"] = report_json(scan);
    table << "m,betti,dimension,irreducibles\n";
    for (const auto& row : scan.rows) {
      table << row.m << "," << row.betti << "," << row.dimension << ","
            << csv_quote(irreducible_sum(row.table, row.m)) << "\n";
    }
  }
  if (!csv.empty()) write_csv(csv, table.str());
  emit(std::move(r), c, start);
  return kOk;
}

int cmd_check_family(const Common& c, int max_r, int max_size, bool faces) {
  const auto start = Clock::now();
  require(!c.family.empty() && c.input.empty(), "check-family needs --family");
  const FamilySpec f = family_from_string(c.family);
  const MRange range = checked_range(c.m.empty() ? std::string("1..6") : c.m);
  ordered_json r = envelope("check-family", c, f.description + " for m=" +
                                                   std::to_string(range.lo) + ".." +
                                                   std::to_string(range.hi));
  ordered_json checks = ordered_json::array();
  bool all = true;
  auto record = [&](const std::string& name, MRange rr, bool pass) {
    checks.push_back({{"check", name}, {"m", std::to_string(rr.lo) + ".." + std::to_string(rr.hi)},
                      {"pass", pass}});
    all = all && pass;
  };
  record("consistent", range, check_consistent(f, range));
  for (int rr = 0; rr <= max_r; ++rr) {
    const MRange sub{std::max(range.lo, rr + 1), range.hi};
    if (sub.lo > sub.hi) continue;
    const std::string d = std::to_string(rr + 1);
    record(std::to_string(rr) + "-vertex-stable from " + d, sub,
           check_r_vertex_stable(f, rr, rr + 1, sub));
    if (faces) {
      record(std::to_string(rr) + "-face-stable from " + d, sub,
             check_r_face_stable(f, rr, rr + 1, sub));
    }
  }
  record("stabiliser-consistent |J|<=" + std::to_string(max_size), range,
         check_stabiliser_consistent_all(f, max_size, range, c.cap_support));
  r["result"]["checks"] = std::move(checks);
  r["result"]["pass"] = all;
  emit(std::move(r), c, start);
  return all ? kOk : kValidation;
}

int cmd_oracle(const Common& c, const std::vector<int>& degrees) {
  const auto start = Clock::now();
  const Source s = load_source(c);
  require(c.d == 1, "the cellular oracle models the moment-angle pair (--d 1)");
  const PermGroup g = s.group ? *s.group : PermGroup::trivial(s.complex.max_index());
  const DiffReport diff = compare_with_hochster(s.complex, g, degrees, c.options(), c.cap_oracle);
  ordered_json r = envelope("oracle", c, s.description);
  r["result"] = report_json(diff);
  r["result"]["verdict"] = diff.empty() ? "no discrepancies"
                                        : std::to_string(diff.mismatches.size()) + " discrepancies";
  emit(std::move(r), c, start);
  return diff.empty() ? kOk : kMismatch;
}

VertexSet resolve_ids(const Source& s, const std::string& list, const char* flag) {
  VertexSet out = 0;
  std::stringstream ss(list);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (id.empty()) continue;
    auto it = s.ids.find(id);
    require(it != s.ids.end(), std::string(flag) + ": unknown vertex id '" + id + "'");
    out |= VertexSet{1} << it->second;
  }
  return out;
}

ordered_json coords_json(const RationalVector& v) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index a = 0; a < v.size(); ++a) out.push_back(to_string(v(a)));
  return out;
}

int cmd_product(const Common& c, const std::string& left, const std::string& right,
                bool equivariance) {
  const auto start = Clock::now();
  const Source s = load_source(c);
  const VertexSet i = resolve_ids(s, left, "--left");
  const VertexSet j = resolve_ids(s, right, "--right");
  require((i & j) == 0, "--left and --right must be disjoint");
  const auto faces = s.complex.faces();
  const auto bi = reduced_betti(faces, i);
  const auto bj = reduced_betti(faces, j);
  ordered_json products = ordered_json::array();
  for (std::size_t pi = 0; pi < bi.size(); ++pi) {
    for (std::size_t qi = 0; qi < bj.size(); ++qi) {
      for (Eigen::Index a = 0; a < bi[pi]; ++a) {
        for (Eigen::Index b = 0; b < bj[qi]; ++b) {
          CohomologyClass x{i, int(pi) - 1, RationalVector::Zero(bi[pi])};
          CohomologyClass y{j, int(qi) - 1, RationalVector::Zero(bj[qi])};
          x.coords(a) = 1;
          y.coords(b) = 1;
          const CohomologyClass xy = cup_product(s.complex, x, y);
          products.push_back(
              {{"p", x.p},
               {"q", y.p},
               {"left_basis", a},
               {"right_basis", b},
               {"degrees", {c.pair().ambient_degree(x.p, set_size(i)),
                            c.pair().ambient_degree(y.p, set_size(j)),
                            c.pair().ambient_degree(xy.p, set_size(i | j))}},
               {"product_p", xy.p},
               {"coords", coords_json(xy.coords)}});
        }
      }
    }
  }
  ordered_json r = envelope("product", c, s.description);
  r["result"]["left"] = labels_json(s.complex, i);
  r["result"]["right"] = labels_json(s.complex, j);
  r["result"]["union"] = labels_json(s.complex, i | j);
  r["result"]["products"] = std::move(products);
  int code = kOk;
  if (equivariance) {
    require(s.group.has_value(), "--equivariance needs a group");
    const bool ok = g_algebra_equivariance_check(s.complex, *s.group, c.options().convention);
    r["result"]["equivariant"] = ok;
    if (!ok) code = kMismatch;
  }
  emit(std::move(r), c, start);
  return code;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Validation:
      return kValidation;
    case ErrorKind::CapExceeded:
      return kCap;
    case ErrorKind::NotACharacter:
    case ErrorKind::OracleMismatch:
      return kMismatch;
  }
  return kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant cohomology of moment-angle complexes"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  Common c;
  bool split = false, irreducibles = false, fusion = false, betti_only = false, equivariance = false,
       faces = false;
  int degree = 0, max_r = 2, max_size = 3;
  std::vector<int> degrees;
  std::string csv, left, right;

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers per degree");
  add_common(betti_cmd, c);
  betti_cmd->add_flag("--split", split, "also list every nonzero multidegree");

  auto* decompose_cmd = app.add_subcommand("decompose", "orbit summands and characters of H^i");
  add_common(decompose_cmd, c);
  decompose_cmd->add_option("--degree", degree, "cohomological degree i")->required();
  decompose_cmd->add_flag("--irreducibles", irreducibles,
                          "decompose into Σ_m-irreducibles (index permutations)");
  decompose_cmd->add_flag("--fusion", fusion, "also decompose each summand by class fusion");

  auto* scan_cmd = app.add_subcommand("scan", "multiplicities or Betti numbers over a range of m");
  add_common(scan_cmd, c);
  scan_cmd->add_option("--degree", degree, "cohomological degree i")->required();
  scan_cmd->add_flag("--betti-only", betti_only, "Betti numbers and growth only");
  scan_cmd->add_option("--csv", csv, "also write the table as CSV");

  auto* check_cmd = app.add_subcommand("check-family", "consistency and stability checks");
  add_common(check_cmd, c);
  check_cmd->add_option("--r", max_r, "check r-vertex/face stability for r <= R");
  check_cmd->add_option("--max-size", max_size, "stabiliser checks for |J| <= N");
  check_cmd->add_flag("--face-stable", faces, "also require r-face stability");

  auto* oracle_cmd = app.add_subcommand("oracle", "compare with the cellular cochain complex");
  add_common(oracle_cmd, c);
  oracle_cmd->add_option("--degree", degrees, "restrict to these degrees (repeatable)");

  auto* product_cmd = app.add_subcommand("product", "cup products of basis classes");
  add_common(product_cmd, c);
  product_cmd->add_option("--left", left, "comma-separated vertex ids of I")->required();
  product_cmd->add_option("--right", right, "comma-separated vertex ids of J")->required();
  product_cmd->add_flag("--equivariance", equivariance,
                        "also check g(ab) = (ga)(gb) over the whole algebra");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*betti_cmd) return cmd_betti(c, split);
    if (*decompose_cmd) return cmd_decompose(c, degree, irreducibles, fusion);
    if (*scan_cmd) return cmd_scan(c, degree, betti_only, csv);
    if (*check_cmd) return cmd_check_family(c, max_r, max_size, faces);
    if (*oracle_cmd) return cmd_oracle(c, degrees);
    if (*product_cmd) return cmd_product(c, left, right, equivariance);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory; lower the problem size or the caps\n";
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kOk;
}
