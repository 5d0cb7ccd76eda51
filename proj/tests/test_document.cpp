#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace test;

namespace {

std::string lie_text(const std::string& entries, const std::string& version = "1", const std::string& kind = "lie") {
  return "{\"format\": \"rbl2-structure\", \"version\": " + version + ", \"kind\": \"" + kind +
         "\", \"dims\": {\"g\": 2}, \"tensors\": {\"bracket\": [" + entries + "]}}";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("loading the aff1 catalog text") {
  const Document d = parse_document(lie_text(R"([2, 1, 2, "1"], [2, 2, 1, "-1"])"));
  const LieAlgebra g = std::get<LieAlgebra>(from_document(d));
  CHECK(g == catalog::aff1());
  CHECK(g.dim() == 2);
  CHECK(g.bracket.on_basis(0, 1) == vec({0, 1}));
  CHECK(verify_lie(g).ok());
}

TEST_CASE("integer shorthand and explicit zeros") {
  const Document d = parse_document(lie_text(R"([2, 1, 2, "1"], [2, 2, 1, "-1"], [1, 1, 2, "0"], [1, 2, 1, "0"])"));
  CHECK(d.tensors.at("bracket").entries.size() == 2);
  CHECK(from_document(d) == AnyStructure(catalog::aff1()));
  CHECK_THROWS_AS(parse_document(lie_text(R"([2, 1, 2, "2/2"])")), BadRational);
}

TEST_CASE("load errors") {
  SUBCASE("non-canonical rational") { CHECK_THROWS_AS(parse_document(lie_text(R"([2, 1, 2, "1/-2"])")), BadRational); }
  SUBCASE("numeric value") { CHECK_THROWS_AS(parse_document(lie_text(R"([2, 1, 2, 1])")), BadRational); }
  SUBCASE("duplicate tuple") {
    CHECK_THROWS_AS(parse_document(lie_text(R"([2, 1, 2, "1"], [2, 1, 2, "1"])")), DuplicateEntry);
  }
  SUBCASE("unknown kind") { CHECK_THROWS_AS(parse_document(lie_text("", "1", "jordan")), UnknownKind); }
  SUBCASE("version") { CHECK_THROWS_AS(parse_document(lie_text("", "2")), VersionMismatch); }
  SUBCASE("index out of range") { CHECK_THROWS_AS(parse_document(lie_text(R"([3, 1, 2, "1"])")), ShapeMismatch); }
  SUBCASE("zero index") { CHECK_THROWS_AS(parse_document(lie_text(R"([0, 1, 2, "1"])")), ShapeMismatch); }
  SUBCASE("wrong arity") { CHECK_THROWS_AS(parse_document(lie_text(R"([1, 2, "1"])")), ParseError); }
  SUBCASE("unknown key") {
    CHECK_THROWS_AS(parse_document(R"({"format": "rbl2-structure", "version": 1, "kind": "lie", "dims": {"g": 1},
                                       "tensors": {}, "extra": 1})"),
                    ParseError);
  }
  SUBCASE("label count") {
    CHECK_THROWS_AS(parse_document(R"({"format": "rbl2-structure", "version": 1, "kind": "lie", "dims": {"g": 2},
                                       "labels": {"g": ["a"]}, "tensors": {}})"),
                    ShapeMismatch);
  }
}

TEST_CASE("syntax errors carry line and column") {
  const std::string text = "{\n  \"format\": \"rbl2-structure\",\n  \"version\": 1,,\n}";
  try {
    parse_document(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 16);
  }
}

TEST_CASE("missing tensors are zero") {
  const Document d = parse_document(
      R"({"format": "rbl2-structure", "version": 1, "kind": "rb-lie", "dims": {"g": 3}, "tensors": {}})");
  const auto r = std::get<RotaBaxterLieAlgebra>(from_document(d));
  CHECK(r.base.bracket.is_zero());
  CHECK(r.R.is_zero());
}

TEST_CASE("document conversion is lossless on the catalog") {
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.name);
    const Document d = to_document(e.value);
    CHECK(d.kind == kind_of(e.value));
    CHECK(from_document(d) == e.value);
    const std::string text = write_document(d);
    CHECK(write_document(parse_document(text)) == text);
    CHECK(from_document(parse_document(text)) == e.value);
  }
}

TEST_CASE("every kind has a catalog entry") {
  std::set<std::string> seen;
  for (const auto& e : catalog::entries()) seen.insert(kind_of(e.value));
  for (const auto& k : known_kinds()) CHECK(seen.count(k) == 1);
}

TEST_CASE("committed catalog files match the generator and verify") {
  const std::filesystem::path dir = std::filesystem::path(RBL2_SOURCE_DIR) / "catalog";
  std::set<std::string> on_disk;
  for (const auto& f : std::filesystem::directory_iterator(dir))
    if (f.path().extension() == ".json") on_disk.insert(f.path().stem().string());
  std::set<std::string> generated;
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.name);
    generated.insert(e.name);
    const std::filesystem::path p = dir / (e.name + ".json");
    REQUIRE(std::filesystem::exists(p));
    const std::string text = slurp(p);
    CHECK(text == write_document(to_document(e.value)));
    // load then save is byte-identical.
    CHECK(write_document(load_document(p.string())) == text);
    CHECK(verify_any(load(p.string())).ok());
  }
  CHECK(on_disk == generated);
}

TEST_CASE("save then load through a file") {
  const auto path = std::filesystem::temp_directory_path() / "rbl2_doc_test.json";
  const RBLInfinityHom f = catalog::homs().back();
  save(AnyStructure(f), path.string());
  CHECK(std::get<RBLInfinityHom>(load(path.string())) == f);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load(path.string()), ParseError);
}

TEST_CASE("tensor symmetry flags") {
  CHECK(tensor_symmetry("lie", "bracket") == "skew");
  CHECK(tensor_symmetry("2term", "l3") == "alt");
  CHECK(tensor_symmetry("rb-2term", "R2") == "skew");
  CHECK(tensor_symmetry("rb-hom", "phi3").empty());
  CHECK_THROWS_AS(tensor_symmetry("lie", "R"), BadSite);
}
