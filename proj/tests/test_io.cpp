#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zk/error.hpp"
#include "zk/io.hpp"

using namespace zk;

namespace {

std::string fixture(const std::string& name) { return std::string(ZK_FIXTURES) + "/" + name; }

std::string validation_message(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Validation);
    return e.what();
  }
  FAIL("expected a validation error");
  return {};
}

bool contains(const std::string& s, const std::string& needle) {
  return s.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("square fixture") {
  const auto doc = load_document(fixture("square.json"));
  CHECK(doc.vertices.size() == 4);
  CHECK(doc.facets.size() == 4);
  REQUIRE(doc.group.has_value());
  CHECK(doc.group->generators == std::vector<std::vector<int>>{{2, 3, 4, 1}});
  const auto lc = to_complex(doc);
  CHECK(lc.complex.facets().size() == 4);
  REQUIRE(lc.group.has_value());
  CHECK(lc.group->generators[0] == Permutation::from_cycles(4, {{1, 2, 3, 4}}));
  CHECK(betti(lc.complex, SpherePair::moment_angle(), *lc.group) ==
        BettiTable{1, 0, 0, 2, 0, 0, 1});
}

TEST_CASE("round trip") {
  for (const char* name : {"square.json", "empty_face.json", "pentagon.json"}) {
    const auto doc = load_document(fixture(name));
    CHECK(parse_document(serialize(doc)) == doc);
    CHECK(serialize(parse_document(serialize(doc))) == serialize(doc));
  }
  const auto k = vc_cube_dual(3);
  const auto doc = from_complex(k, PermGroup::symmetric(3));
  const auto back = to_complex(parse_document(serialize(doc)));
  CHECK(back.complex == k);
  CHECK(back.group->generators == PermGroup::symmetric(3).generators);
}

TEST_CASE("{∅} and void documents differ") {
  const auto e = to_complex(load_document(fixture("empty_face.json"))).complex;
  CHECK(betti(e, SpherePair::moment_angle()) == BettiTable{1, 1});
  const auto v = to_complex(parse_document(R"({"vertices": [], "facets": []})")).complex;
  CHECK(v.is_void());
}

TEST_CASE("syntax errors report line and column") {
  const auto msg = validation_message(read_file(fixture("bad_syntax.json")));
  CHECK(contains(msg, "line 4"));
  CHECK(contains(msg, "column"));
}

TEST_CASE("validation errors report the JSON path") {
  CHECK(contains(validation_message(R"({"vertices": [{"id": "a"}, {"id": "a", "index": 1}], "facets": []})"),
                 "$.vertices[1].id"));
  CHECK(contains(validation_message(R"({"vertices": [{"id": "a"}], "facets": [["a", "b"]]})"),
                 "$.facets[0][1]"));
  CHECK(contains(validation_message(R"({"vertices": [{"id": "a", "index": 1}, {"id": "b", "index": 1}], "facets": []})"),
                 "$.vertices[1]"));
  CHECK(contains(validation_message(R"({"vertices": [], "facets": [], "group": {"degree": 2, "generators": [[1, 1]]}})"),
                 "bijection"));
  CHECK(contains(validation_message(R"({"vertices": [{"id": "a", "index": 3}], "facets": [], "group": {"degree": 2, "generators": []}})"),
                 "group degree"));
  CHECK(contains(validation_message(R"({"facets": []})"), "vertices"));
  CHECK(contains(validation_message(R"({"vertices": [{"id": 1}], "facets": []})"), "$.vertices[0].id"));
}

TEST_CASE("custom families") {
  const auto f = load_custom_family(fixture("points_family.json"));
  for (int m = 1; m <= 5; ++m) CHECK(instantiate(f, m).complex == skeleton(m, 0));
  CHECK(check_consistent(f, {1, 5}));
  const auto edge = parse_custom_family(
      R"({"tags": [0], "fixed": [0], "seeds": [{"face": [[1, 0], [null, 0]]}]})", "cone");
  const auto k = instantiate(edge, 3).complex;
  CHECK(k.vertex_count() == 4);
  CHECK(k.facets().size() == 3);
  CHECK(family_from_string("skeleton:1").kind == FamilySpec::Kind::Skeleton);
  CHECK(family_from_string("custom:" + fixture("points_family.json")).kind ==
        FamilySpec::Kind::Custom);
  CHECK_THROWS_AS(family_from_string("custom:/nonexistent.json"), Error);
}

TEST_CASE("report fragments") {
  CHECK(symbolic(Partition({1, 1})) == "(m-2,1,1)");
  CHECK(symbolic(Partition()) == "(m)");
  const auto d = decomposition_json({{Partition({1}), 2}}, 5);
  CHECK(d[0]["padded"] == "(4,1)");
  CHECK(d[0]["multiplicity"] == 2);
  CHECK(d[0]["dimension"] == 4);
  CHECK(betti_json({1, 0, 2}).dump() == R"({"0":1,"2":2})");
}
