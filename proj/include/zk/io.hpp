#pragma once

// JSON input documents and report serialisation.

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zk/families.hpp"
#include "zk/oracle.hpp"

namespace zk {

inline constexpr const char* kToolName = "zkrep";
inline constexpr const char* kToolVersion = "0.1.0";

struct VertexEntry {
  std::string id;
  std::optional<int> index;
  int tag = 0;

  bool operator==(const VertexEntry&) const = default;
};

struct GroupEntry {
  int degree = 0;
  std::vector<std::vector<int>> generators;  // one-line, 1-based

  bool operator==(const GroupEntry&) const = default;
};

/// A complex with optional group. `facets: [[]]` is {∅}; `facets: []` is void.
struct ComplexDocument {
  std::vector<VertexEntry> vertices;
  std::vector<std::vector<std::string>> facets;
  std::optional<GroupEntry> group;

  bool operator==(const ComplexDocument&) const = default;
};

/// Parses and validates; errors carry line:column or the offending JSON path.
ComplexDocument parse_document(const std::string& text);
ComplexDocument load_document(const std::string& path);
nlohmann::ordered_json to_json(const ComplexDocument& doc);
std::string serialize(const ComplexDocument& doc);

struct LoadedComplex {
  SimplicialComplex complex;
  std::optional<PermGroup> group;
};

LoadedComplex to_complex(const ComplexDocument& doc);
/// Vertex ids are the label strings ("3", "2.1", "*").
ComplexDocument from_complex(const SimplicialComplex& k, const std::optional<PermGroup>& g = {});

/// A family from a rule file:
///   {"description": .., "tags": [0, ..], "fixed": [tag, ..],
///    "seeds": [{"face": [[index, tag] or [null, tag], ..], "symmetric": bool}]}
/// K_m has vertices (i, t) for i ≤ m and t in tags, the fixed vertices, and
/// every seed face whose indices are ≤ m; symmetric seeds contribute their
/// whole Σ_m-orbit.
FamilySpec parse_custom_family(const std::string& text, const std::string& name);
FamilySpec load_custom_family(const std::string& path);
/// Named families plus "custom:<file>".
FamilySpec family_from_string(const std::string& text);

std::string read_file(const std::string& path);

// Report fragments.
nlohmann::ordered_json labels_json(const SimplicialComplex& k, VertexSet s);
nlohmann::ordered_json betti_json(const BettiTable& b);
/// "(m-2,1,1)" for λ = (1,1).
std::string symbolic(const Partition& lambda);
nlohmann::ordered_json decomposition_json(const Decomposition& padded, int m);
nlohmann::ordered_json report_json(const SimplicialComplex& k, const EquivariantReport& r);
nlohmann::ordered_json report_json(const SimplicialComplex& k, const SymDecomposition& d);
nlohmann::ordered_json report_json(const StabilityScanReport& s);
nlohmann::ordered_json report_json(const GrowthReport& g);
nlohmann::ordered_json report_json(const DiffReport& d);

}  // namespace zk
