#include "zk/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "zk/error.hpp"

namespace zk {

using nlohmann::json;
using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(bool(in), "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t b = 0; b + 1 < e.byte && b < text.size(); ++b) {
      if (text[b] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (const auto colon = what.find(": ", what.find("column")); colon != std::string::npos) {
      what = what.substr(colon + 2);
    }
    fail(ErrorKind::Validation, "JSON parse error at line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + what);
  }
}

const json& field(const json& obj, const char* key, const std::string& path) {
  require(obj.is_object(), path + ": expected an object");
  auto it = obj.find(key);
  require(it != obj.end(), path + ": missing field '" + key + "'");
  return *it;
}

int as_int(const json& v, const std::string& path) {
  require(v.is_number_integer(), path + ": expected an integer");
  return v.get<int>();
}

const json& as_array(const json& v, const std::string& path) {
  require(v.is_array(), path + ": expected an array");
  return v;
}

}  // namespace

ComplexDocument parse_document(const std::string& text) {
  const json j = parse_json(text);
  ComplexDocument doc;
  std::set<std::string> ids;
  std::set<VertexLabel> labels;
  const json& vs = as_array(field(j, "vertices", "$"), "$.vertices");
  for (std::size_t a = 0; a < vs.size(); ++a) {
    const std::string path = "$.vertices[" + std::to_string(a) + "]";
    VertexEntry v;
    const json& id = field(vs[a], "id", path);
    require(id.is_string(), path + ".id: expected a string");
    v.id = id.get<std::string>();
    require(ids.insert(v.id).second, path + ".id: duplicate id '" + v.id + "'");
    if (auto it = vs[a].find("index"); it != vs[a].end() && !it->is_null()) {
      v.index = as_int(*it, path + ".index");
      require(*v.index >= 1, path + ".index: indices start at 1");
    }
    if (auto it = vs[a].find("tag"); it != vs[a].end()) v.tag = as_int(*it, path + ".tag");
    require(v.tag >= 0, path + ".tag: must be nonnegative");
    require(labels.insert(VertexLabel{v.index, v.tag}).second,
            path + ": (index, tag) pair repeats another vertex");
    doc.vertices.push_back(std::move(v));
  }
  const json& fs = as_array(field(j, "facets", "$"), "$.facets");
  for (std::size_t a = 0; a < fs.size(); ++a) {
    const std::string path = "$.facets[" + std::to_string(a) + "]";
    std::vector<std::string> facet;
    const json& f = as_array(fs[a], path);
    for (std::size_t b = 0; b < f.size(); ++b) {
      const std::string p = path + "[" + std::to_string(b) + "]";
      require(f[b].is_string(), p + ": expected a vertex id");
      require(ids.count(f[b].get<std::string>()), p + ": unknown vertex id '" +
                                                     f[b].get<std::string>() + "'");
      facet.push_back(f[b].get<std::string>());
    }
    doc.facets.push_back(std::move(facet));
  }
  if (auto it = j.find("group"); it != j.end() && !it->is_null()) {
    GroupEntry g;
    g.degree = as_int(field(*it, "degree", "$.group"), "$.group.degree");
    require(g.degree >= 0, "$.group.degree: must be nonnegative");
    const json& gens = as_array(field(*it, "generators", "$.group"), "$.group.generators");
    for (std::size_t a = 0; a < gens.size(); ++a) {
      const std::string path = "$.group.generators[" + std::to_string(a) + "]";
      const json& arr = as_array(gens[a], path);
      require(int(arr.size()) == g.degree, path + ": length differs from the group degree");
      std::vector<int> images;
      std::vector<bool> hit(std::size_t(g.degree) + 1, false);
      for (std::size_t b = 0; b < arr.size(); ++b) {
        const int x = as_int(arr[b], path + "[" + std::to_string(b) + "]");
        require(x >= 1 && x <= g.degree && !hit[std::size_t(x)], path + ": not a bijection of 1.." +
                                                                    std::to_string(g.degree));
        hit[std::size_t(x)] = true;
        images.push_back(x);
      }
      g.generators.push_back(std::move(images));
    }
    for (const auto& v : doc.vertices) {
      require(!v.index || *v.index <= g.degree,
              "$.group.degree: vertex '" + v.id + "' has an index above the group degree");
    }
    doc.group = std::move(g);
  }
  return doc;
}

ComplexDocument load_document(const std::string& path) { return parse_document(read_file(path)); }

ordered_json to_json(const ComplexDocument& doc) {
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (const auto& v : doc.vertices) {
    ordered_json e;
    e["id"] = v.id;
    if (v.index) e["index"] = *v.index;
    e["tag"] = v.tag;
    j["vertices"].push_back(std::move(e));
  }
  j["facets"] = ordered_json::array();
  for (const auto& f : doc.facets) j["facets"].push_back(f);
  if (doc.group) {
    j["group"]["degree"] = doc.group->degree;
    j["group"]["generators"] = doc.group->generators;
  }
  return j;
}

std::string serialize(const ComplexDocument& doc) { return to_json(doc).dump(2) + "\n"; }

LoadedComplex to_complex(const ComplexDocument& doc) {
  std::map<std::string, VertexLabel> by_id;
  std::vector<VertexLabel> vs;
  for (const auto& v : doc.vertices) {
    VertexLabel l{v.index, v.tag};
    by_id.emplace(v.id, l);
    vs.push_back(l);
  }
  std::vector<std::vector<VertexLabel>> faces;
  for (const auto& f : doc.facets) {
    std::vector<VertexLabel> face;
    for (const auto& id : f) face.push_back(by_id.at(id));
    faces.push_back(std::move(face));
  }
  LoadedComplex out{SimplicialComplex(std::move(vs), faces), std::nullopt};
  if (doc.group) {
    std::vector<Permutation> gens;
    for (const auto& images : doc.group->generators) {
      std::vector<int> im;
      for (int x : images) im.push_back(x - 1);
      gens.emplace_back(std::move(im));
    }
    out.group = PermGroup(doc.group->degree, std::move(gens));
  }
  return out;
}

ComplexDocument from_complex(const SimplicialComplex& k, const std::optional<PermGroup>& g) {
  ComplexDocument doc;
  for (const auto& v : k.vertices()) doc.vertices.push_back({v.str(), v.index, v.tag});
  for (VertexSet f : k.facets()) {
    std::vector<std::string> ids;
    for (const auto& v : k.labels_of(f)) ids.push_back(v.str());
    doc.facets.push_back(std::move(ids));
  }
  if (g) {
    GroupEntry e{g->degree, {}};
    for (const auto& gen : g->generators) {
      std::vector<int> images;
      for (int x : gen.images()) images.push_back(x + 1);
      e.generators.push_back(std::move(images));
    }
    doc.group = std::move(e);
  }
  return doc;
}

namespace {

struct Seed {
  std::vector<VertexLabel> face;
  bool symmetric = true;
};

/// All injective relabellings of the indices in `face` into 1..m.
void seed_orbit(const std::vector<VertexLabel>& face, int m,
                std::vector<std::vector<VertexLabel>>& out) {
  std::vector<int> support;
  for (const auto& v : face) {
    if (v.index) support.push_back(*v.index);
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::vector<int> image(support.size());
  std::vector<bool> used(std::size_t(m) + 1, false);
  std::function<void(std::size_t)> rec = [&](std::size_t a) {
    if (a == support.size()) {
      std::vector<VertexLabel> f;
      for (auto v : face) {
        if (v.index) {
          const auto pos = std::lower_bound(support.begin(), support.end(), *v.index) - support.begin();
          v.index = image[std::size_t(pos)];
        }
        f.push_back(v);
      }
      out.push_back(std::move(f));
      return;
    }
    for (int i = 1; i <= m; ++i) {
      if (used[std::size_t(i)]) continue;
      used[std::size_t(i)] = true;
      image[a] = i;
      rec(a + 1);
      used[std::size_t(i)] = false;
    }
  };
  rec(0);
}

}  // namespace

FamilySpec parse_custom_family(const std::string& text, const std::string& name) {
  const json j = parse_json(text);
  std::vector<int> tags;
  std::vector<int> fixed;
  std::vector<Seed> seeds;
  std::string description = "custom:" + name;
  if (auto it = j.find("description"); it != j.end() && it->is_string()) {
    description += " (" + it->get<std::string>() + ")";
  }
  if (auto it = j.find("tags"); it != j.end()) {
    for (std::size_t a = 0; a < as_array(*it, "$.tags").size(); ++a) {
      tags.push_back(as_int((*it)[a], "$.tags[" + std::to_string(a) + "]"));
    }
  }
  if (auto it = j.find("fixed"); it != j.end()) {
    for (std::size_t a = 0; a < as_array(*it, "$.fixed").size(); ++a) {
      fixed.push_back(as_int((*it)[a], "$.fixed[" + std::to_string(a) + "]"));
    }
  }
  const json& ss = as_array(field(j, "seeds", "$"), "$.seeds");
  for (std::size_t a = 0; a < ss.size(); ++a) {
    const std::string path = "$.seeds[" + std::to_string(a) + "]";
    Seed seed;
    const json& face = as_array(field(ss[a], "face", path), path + ".face");
    for (std::size_t b = 0; b < face.size(); ++b) {
      const std::string p = path + ".face[" + std::to_string(b) + "]";
      const json& pair = as_array(face[b], p);
      require(pair.size() == 2, p + ": expected [index, tag]");
      VertexLabel v;
      if (!pair[0].is_null()) {
        v.index = as_int(pair[0], p + "[0]");
        require(*v.index >= 1, p + ": indices start at 1");
      }
      v.tag = as_int(pair[1], p + "[1]");
      seed.face.push_back(v);
    }
    if (auto it = ss[a].find("symmetric"); it != ss[a].end()) {
      require(it->is_boolean(), path + ".symmetric: expected a boolean");
      seed.symmetric = it->get<bool>();
    }
    seeds.push_back(std::move(seed));
  }
  auto rule = [tags, fixed, seeds](int m) {
    std::set<VertexLabel> vertices;
    for (int i = 1; i <= m; ++i) {
      for (int t : tags) vertices.insert(VertexLabel::indexed(i, t));
    }
    for (int t : fixed) vertices.insert(VertexLabel::fixed(t));
    std::vector<std::vector<VertexLabel>> faces;
    for (const auto& seed : seeds) {
      const bool fits = std::all_of(seed.face.begin(), seed.face.end(),
                                    [m](const VertexLabel& v) { return !v.index || *v.index <= m; });
      if (!fits) continue;
      if (seed.symmetric) {
        seed_orbit(seed.face, m, faces);
      } else {
        faces.push_back(seed.face);
      }
    }
    for (const auto& f : faces) vertices.insert(f.begin(), f.end());
    return SimplicialComplex(std::vector<VertexLabel>(vertices.begin(), vertices.end()), faces);
  };
  return FamilySpec::custom_rule(description, rule);
}

FamilySpec load_custom_family(const std::string& path) {
  return parse_custom_family(read_file(path), path);
}

FamilySpec family_from_string(const std::string& text) {
  if (text.rfind("custom:", 0) == 0) return load_custom_family(text.substr(7));
  return FamilySpec::parse(text);
}

namespace {

ordered_json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return ordered_json(static_cast<std::int64_t>(x));
  }
  return ordered_json(x.str());
}

ordered_json partition_list(const Decomposition& d) {
  ordered_json out = ordered_json::array();
  for (const auto& [lambda, c] : d) {
    out.push_back({{"partition", lambda.str()}, {"multiplicity", c}});
  }
  return out;
}

}  // namespace

ordered_json labels_json(const SimplicialComplex& k, VertexSet s) {
  ordered_json out = ordered_json::array();
  for (const auto& v : k.labels_of(s)) out.push_back(v.str());
  return out;
}

ordered_json betti_json(const BettiTable& b) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] != 0) out[std::to_string(i)] = b[i];
  }
  return out;
}

std::string symbolic(const Partition& lambda) {
  std::string s = "(m";
  if (lambda.size() > 0) s += "-" + std::to_string(lambda.size());
  for (int x : lambda.parts()) s += "," + std::to_string(x);
  return s + ")";
}

ordered_json decomposition_json(const Decomposition& padded, int m) {
  ordered_json out = ordered_json::array();
  for (const auto& [lambda, c] : padded) {
    const PaddedPartition p{lambda, m};
    out.push_back({{"lambda", lambda.str()},
                   {"symbolic", symbolic(lambda)},
                   {"padded", p.str()},
                   {"multiplicity", c},
                   {"dimension", integer_json(hook_dim(p.realized()))}});
  }
  return out;
}

ordered_json report_json(const SimplicialComplex& k, const EquivariantReport& r) {
  ordered_json out;
  out["degree"] = r.degree;
  out["betti"] = r.betti;
  out["components"] = ordered_json::array();
  for (const auto& c : r.components) {
    ordered_json e;
    e["representative"] = labels_json(k, c.representative);
    e["orbit_size"] = c.orbit_size;
    e["p"] = c.p;
    e["dimension"] = c.dim;
    e["stabilizer_order"] = c.stabilizer_order ? ordered_json(c.stabilizer_order) : ordered_json();
    e["stabilizer_generators"] = ordered_json::array();
    for (const auto& g : c.stabilizer_generators) e["stabilizer_generators"].push_back(g.str());
    e["character"] = ordered_json::array();
    for (const auto& v : c.character) {
      e["character"].push_back({{"element", v.element.str()}, {"trace", to_string(v.trace)}});
    }
    out["components"].push_back(std::move(e));
  }
  return out;
}

ordered_json report_json(const SimplicialComplex& k, const SymDecomposition& d) {
  ordered_json out;
  out["degree"] = d.degree;
  out["m"] = d.m;
  out["betti"] = d.betti;
  out["dimension"] = integer_json(d.dimension());
  out["weight"] = weight(d.total);
  out["irreducibles"] = decomposition_json(d.total, d.m);
  out["summands"] = ordered_json::array();
  for (const auto& s : d.summands) {
    ordered_json e;
    e["representative"] = labels_json(k, s.representative);
    e["p"] = s.p;
    e["dimension"] = s.dim;
    e["support"] = s.support;
    e["finite_part_order"] = s.finite_order;
    e["local"] = partition_list(s.local);
    e["pieri"] = decomposition_json(s.pieri, d.m);
    if (!s.fusion.empty()) e["fusion"] = decomposition_json(s.fusion, d.m);
    out["summands"].push_back(std::move(e));
  }
  return out;
}

ordered_json report_json(const GrowthReport& g) {
  ordered_json out;
  out["polynomial"] = g.polynomial;
  if (g.polynomial) {
    out["degree"] = g.degree;
    out["tail_start"] = g.tail_start;
    out["formula"] = g.str();
    out["coefficients"] = ordered_json::array();
    for (const auto& c : g.coefficients) out["coefficients"].push_back(to_string(c));
  }
  out["differences"] = ordered_json::array();
  for (const auto& row : g.differences) {
    ordered_json r = ordered_json::array();
    for (const auto& x : row) r.push_back(integer_json(x));
    out["differences"].push_back(std::move(r));
  }
  return out;
}

ordered_json report_json(const StabilityScanReport& s) {
  ordered_json out;
  out["degree"] = s.degree;
  out["rows"] = ordered_json::array();
  for (const auto& row : s.rows) {
    out["rows"].push_back({{"m", row.m},
                           {"betti", row.betti},
                           {"dimension", integer_json(row.dimension)},
                           {"irreducibles", decomposition_json(row.table, row.m)}});
  }
  out["onset"] = s.onset ? ordered_json(*s.onset) : ordered_json();
  out["weight"] = s.weight;
  out["growth"] = report_json(s.growth);
  return out;
}

ordered_json report_json(const DiffReport& d) {
  ordered_json out;
  out["checks"] = d.checks;
  out["empty"] = d.empty();
  out["mismatches"] = d.mismatches;
  return out;
}

}  // namespace zk
