#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rbl2/cli.hpp"
#include "support.hpp"

using namespace test;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string cat(const std::string& name) {
  return (fs::path(RBL2_SOURCE_DIR) / "catalog" / (name + ".json")).string();
}

std::string golden(const std::string& name) {
  return (fs::path(RBL2_SOURCE_DIR) / "tests" / "golden" / name).string();
}

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("rbl2_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::size_t count_lines(const std::string& s, const std::string& prefix) {
  std::size_t n = 0;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0;
  return n;
}

}  // namespace

TEST_CASE("verify exit codes") {
  const Run ok = run({"verify", cat("aff1-rb")});
  CHECK(ok.code == kPass);
  CHECK(ok.out == "OK\n");

  TempDir tmp;
  const Run m = run({"mutate", cat("aff1-rb"), "--site", "R[1,1]", "--delta", "1", "-o", tmp.file("bad.json")});
  REQUIRE(m.code == kPass);
  const Run bad = run({"verify", tmp.file("bad.json")});
  CHECK(bad.code == kViolations);
  CHECK(count_lines(bad.out, "VIOLATION ") >= 1);
  CHECK(count_lines(bad.out, "VIOLATION ") == count_lines(bad.out, ""));

  std::ofstream(tmp.file("broken.json")) << "{\"format\": ";
  CHECK(run({"verify", tmp.file("broken.json")}).code == kUsage);
  CHECK(run({"verify", tmp.file("missing.json")}).code == kUsage);
  CHECK(run({"frobnicate"}).code == kUsage);
  CHECK(run({}).code == kUsage);
  CHECK(run({"search-rb", cat("aff1"), "--coeffs", "1/-2"}).code == kUsage);
  CHECK(run({"mutate", cat("aff1"), "--site", "bracket[1,1,1]", "--delta", "1"}).code == kUsage);
}

TEST_CASE("violation report grammar") {
  TempDir tmp;
  REQUIRE(run({"mutate", cat("sl2"), "--site", "bracket[1,1,2]", "--delta", "1", "-o", tmp.file("m.json")}).code ==
          kPass);
  const Run r = run({"verify", tmp.file("m.json")});
  CHECK(r.code == kViolations);
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    CAPTURE(line);
    std::istringstream ls(line);
    std::string tag, id, tuple, residual, rest;
    ls >> tag >> id >> tuple >> residual;
    CHECK(tag == "VIOLATION");
    CHECK(tuple.front() == '(');
    CHECK(tuple.back() == ')');
    CHECK(residual.front() == '[');
    CHECK(residual.back() == ']');
    CHECK_FALSE(static_cast<bool>(ls >> rest));
  }
}

TEST_CASE("report order does not depend on the worker count") {
  TempDir tmp;
  // Broken homs give long reports mixing several condition families.
  REQUIRE(run({"mutate", cat("sl2-twist"), "--site", "phi0[1,1]", "--delta", "1", "-o", tmp.file("d.json")}).code ==
          kPass);
  REQUIRE(run({"mutate", cat("h3-twist"), "--site", "phi0[1,2]", "--delta", "1", "-o", tmp.file("h.json")}).code ==
          kPass);
  for (const auto& f : {tmp.file("d.json"), tmp.file("h.json")}) {
    const Run one = run({"--workers", "1", "verify", f});
    CHECK(one.code == kViolations);
    CHECK(count_lines(one.out, "VIOLATION") > 3);
    for (const char* w : {"2", "4", "7"}) {
      CHECK(run({"--workers", w, "verify", f}).out == one.out);
      CHECK(run({"verify", f, "--workers", w}).out == one.out);
    }
  }
}

TEST_CASE("search-rb reproduces the golden list") {
  TempDir tmp;
  const std::string expected = slurp(golden("aff1_rb_operators.json"));
  REQUIRE_FALSE(expected.empty());
  const Run r = run({"search-rb", cat("aff1"), "--coeffs", "-1,0,1", "-o", tmp.file("ops.json")});
  CHECK(r.code == kPass);
  CHECK(r.out == "FOUND 15 OF 81\n");
  CHECK(slurp(tmp.file("ops.json")) == expected);
  CHECK(run({"--workers", "5", "search-rb", cat("aff1")}).out == expected);
  CHECK(run({"search-rb", cat("aff1-rb"), "--coeffs", "1,0,-1,0"}).out == expected);
  const Run b = run({"search-rb", cat("diamond"), "--budget", "100"});
  CHECK(b.code == kViolations);
  CHECK(b.err.find("43046721") != std::string::npos);
}

TEST_CASE("construct commands") {
  TempDir tmp;
  const auto construct = [&](const std::string& op, std::vector<std::string> files) {
    std::vector<std::string> args{"construct", op};
    for (auto& f : files) args.push_back(cat(f));
    args.push_back("-o");
    args.push_back(tmp.file(op + ".json"));
    const Run r = run(args);
    CAPTURE(op);
    CAPTURE(r.err);
    CHECK(r.code == kPass);
    return load(tmp.file(op + ".json"));
  };
  CHECK(std::get<PreLieAlgebra>(construct("prelie", {"aff1-rb"})) == prelie_from_rb(catalog::aff1_rb()));
  CHECK(std::get<LieAlgebra>(construct("subadjacent", {"aff1-prelie"})) ==
        subadjacent_lie(prelie_from_rb(catalog::aff1_rb())));
  CHECK(std::get<RBRepresentation>(construct("adjoint", {"h3-rb"})) == adjoint_representation(catalog::h3_rb()));
  CHECK(std::get<RBRepresentation>(construct("dual", {"aff1-adjoint-rep"})) ==
        dual_representation(adjoint_representation(catalog::aff1_rb())));
  CHECK(std::get<RotaBaxterLieAlgebra>(construct("semidirect", {"h3-coadjoint-rep"})) ==
        semidirect_product(coadjoint_representation(catalog::h3_rb())));
  const auto strict = std::get<TwoTermRBLInfinity>(construct("crossed-to-strict", {"aff1-ideal"}));
  CHECK(strict == crossed_to_strict(catalog::aff1_ideal()));
  CHECK(std::get<RBLieCrossedModule>(construct("strict-to-crossed", {"aff1-adjoint"})) ==
        strict_to_crossed(catalog::aff1_adjoint()));
  CHECK(std::get<PreLieCrossedModule>(construct("rb-to-prelie-cm", {"h3-centre"})) ==
        rb_crossed_to_prelie_crossed(catalog::h3_centre()));
  CHECK(std::get<LieCrossedModule>(construct("prelie-to-lie-cm", {"h3-centre-prelie-cm"})) ==
        prelie_crossed_to_lie_crossed(rb_crossed_to_prelie_crossed(catalog::h3_centre())));
  CHECK(std::get<LieCrossedModule>(construct("derived-cm", {"aff1-identity-cm"})) ==
        derived_crossed(catalog::aff1_identity_cm()).module);
  CHECK(std::get<RotaBaxterLieAlgebra>(construct("cm-semidirect", {"h3-centre"})) ==
        crossed_semidirect(catalog::h3_centre()));

  CHECK(run({"construct", "strict-to-crossed", cat("sl2-string")}).code == kViolations);
  CHECK(run({"construct", "prelie", cat("aff1")}).code == kUsage);
  CHECK(run({"construct", "nonsense", cat("aff1-rb")}).code == kUsage);
}

TEST_CASE("roundtrip command") {
  for (const char* f : {"aff1-adjoint", "h3-adjoint", "sl2-string", "aff1sq-string", "probe", "aff1-adjoint-2term",
                        "h3-twist", "aff1-adjoint-id-hom"}) {
    CAPTURE(f);
    const Run r = run({"roundtrip", cat(f)});
    CHECK(r.code == kPass);
    CHECK(r.out == "OK\n");
  }
  CHECK(run({"roundtrip", cat("aff1")}).code == kUsage);
}

TEST_CASE("compose applies the first file first") {
  TempDir tmp;
  const Run r = run({"compose", cat("aff1-twist-1"), cat("aff1-twist-2"), "-o", tmp.file("c.json")});
  CHECK(r.code == kPass);
  const auto hs = catalog::homs();
  CHECK(std::get<RBLInfinityHom>(load(tmp.file("c.json"))) == compose_rb_homs(hs[4], hs[3]));
  CHECK(slurp(tmp.file("c.json")) == slurp(cat("aff1-twist-21")));
  CHECK(run({"compose", cat("aff1-twist-2"), cat("aff1-twist-1")}).code == kViolations);
  CHECK(run({"compose", cat("aff1"), cat("aff1")}).code == kUsage);
}

TEST_CASE("mutate command writes a canonical document") {
  const Run r = run({"mutate", cat("aff1"), "--site", "bracket[1,1,2]", "--delta", "-1/2"});
  CHECK(r.code == kPass);
  const Document d = parse_document(r.out);
  CHECK(write_document(d) == r.out);
  CHECK(d.tensors.at("bracket").entries.at({0, 0, 1}) == q(-1, 2));
  CHECK(d.tensors.at("bracket").entries.at({0, 1, 0}) == q(1, 2));
}

TEST_CASE("catalog command reproduces the committed catalog") {
  TempDir tmp;
  CHECK(run({"catalog", "-o", tmp.path.string()}).code == kPass);
  std::size_t n = 0;
  for (const auto& f : fs::directory_iterator(tmp.path)) {
    ++n;
    CHECK(slurp(f.path().string()) == slurp(cat(f.path().stem().string())));
  }
  CHECK(n == catalog::entries().size());
}
