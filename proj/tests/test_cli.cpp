#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopfq/cli.hpp"

using namespace hopfq;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(HOPFQ_FIXTURE_DIR) + "/" + name;
}

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / "hopfq_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string structure_for(const std::string& loop_name) {
  fs::path out = scratch() / (loop_name + ".hqg");
  CliResult r = run({"loop", fixture(loop_name + ".loop"), out.string()});
  REQUIRE(r.code == 0);
  return out.string();
}

}  // namespace

TEST_CASE("loop command builds structures that verify") {
  CliResult built = run({"loop", fixture("m12.loop"),
                         (scratch() / "m12.hqg").string()});
  CHECK(built.code == 0);
  CHECK(built.out.find("moufang_nonassoc") != std::string::npos);

  CliResult verify = run({"verify", (scratch() / "m12.hqg").string(),
                          "--flavor=quasi"});
  CHECK(verify.code == 0);
  CHECK(verify.out.find("result: PASS") != std::string::npos);

  CliResult wrong = run({"verify", (scratch() / "m12.hqg").string(),
                         "--flavor=coquasi"});
  CHECK(wrong.code == 1);
  CHECK(wrong.out.find("axiom associativity: FAIL") != std::string::npos);
}

TEST_CASE("verify reports witnesses in stable lines") {
  std::string path = structure_for("o16");
  CliResult r = run({"verify", path, "--flavor=quasi"});
  CHECK(r.code == 0);
  CHECK(r.out.find("axiom preamble/unitality-left: PASS") != std::string::npos);
  CHECK(r.out.find("axiom left-division-outer: PASS") != std::string::npos);
}

TEST_CASE("verify on a truncated file exits 2 with a line number") {
  fs::path bad = scratch() / "truncated.hqg";
  {
    std::ofstream f(bad);
    f << "format_version 1\nfield QQ\ndim 2\nbegin mu\n0 0 0 1\n";
  }
  CliResult r = run({"verify", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 5") != std::string::npos);
}

TEST_CASE("decide round-trips the octonion fixture") {
  CliResult r = run({"decide", structure_for("o16")});
  CHECK(r.code == 0);
  CHECK(r.out.find("classification: HopfQuasigroup") != std::string::npos);
  CHECK(r.out.find("stored antipode: matches") != std::string::npos);
}

TEST_CASE("decide names the failing test on the non-IP loop algebra") {
  CliResult r = run({"decide", structure_for("l5")});
  CHECK(r.code == 1);
  CHECK(r.out.find("classification: Neither") != std::string::npos);
  CHECK(r.out.find("step beta-bijective: PASS") != std::string::npos);
  CHECK(r.out.find("reason: beta-inverse-almost-left-linear") != std::string::npos);
  CHECK(r.out.find("at basis (") != std::string::npos);
}

TEST_CASE("decide classifies the dual of a Moufang loop algebra") {
  fs::path dual = scratch() / "dual_m12.hqg";
  CliResult d = run({"dualize", structure_for("m12"), dual.string()});
  REQUIRE(d.code == 0);
  CliResult r = run({"decide", dual.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("classification: HopfCoquasigroup") != std::string::npos);
}

TEST_CASE("decide emits machine-readable json") {
  CliResult r = run({"decide", structure_for("z2"), "--json"});
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["classification"] == "HopfQuasigroup");
  CHECK(j["also_hopf_algebra"] == true);
  CHECK(j["stored_antipode"] == "matches");
}

TEST_CASE("dualize twice reproduces the file") {
  std::string original = structure_for("s3");
  fs::path once = scratch() / "s3_dual.hqg";
  fs::path twice = scratch() / "s3_dual_dual.hqg";
  REQUIRE(run({"dualize", original, once.string()}).code == 0);
  REQUIRE(run({"dualize", once.string(), twice.string()}).code == 0);
  std::ifstream a(original), b(twice);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
}

TEST_CASE("fundamental on the regular module and the tensor square") {
  std::string path = structure_for("m12");
  CliResult reg = run({"fundamental", path, "--module=H"});
  CHECK(reg.code == 0);
  CHECK(reg.out.find("dim coinvariants = 1") != std::string::npos);

  CliResult sq = run({"fundamental", path, "--module=HtensorH"});
  CHECK(sq.code == 0);
  CHECK(sq.out.find("dim M = 144") != std::string::npos);
  CHECK(sq.out.find("dim coinvariants = 12") != std::string::npos);
  CHECK(sq.out.find("sigma o sigma_inv = id: yes") != std::string::npos);
  CHECK(sq.out.find("beta = sigma: yes") != std::string::npos);
}

TEST_CASE("fundamental on a coquasigroup goes through the quotient") {
  fs::path dual = scratch() / "dual_m12_f.hqg";
  REQUIRE(run({"dualize", structure_for("m12"), dual.string()}).code == 0);
  CliResult r = run({"fundamental", dual.string(), "--module=H"});
  CHECK(r.code == 0);
  CHECK(r.out.find("flavor: coquasigroup") != std::string::npos);
  CHECK(r.out.find("dim invariants = 1") != std::string::npos);
  CHECK(r.out.find("eta_inv well-defined on relations: yes") != std::string::npos);
}

TEST_CASE("fundamental names missing modules and antipodes") {
  CliResult missing = run({"fundamental", structure_for("m12"), "--module=W"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("not found") != std::string::npos);

  CliResult no_antipode = run({"fundamental", structure_for("l5")});
  CHECK(no_antipode.code == 2);
  CHECK(no_antipode.err.find("antipode") != std::string::npos);
}

TEST_CASE("fundamental reads named modules from the file") {
  // attach F(V), dim V = 2, to the z2 structure by hand
  std::string path = structure_for("z2");
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  std::string with_module = text.str() +
      "begin module FV2\n"
      "dim 4\n"
      "begin action\n"
      "0 0 0 1\n0 1 1 1\n1 0 1 1\n1 1 0 1\n"
      "2 0 2 1\n2 1 3 1\n3 0 3 1\n3 1 2 1\n"
      "end action\n"
      "begin coaction\n"
      "0 0 0 1\n1 1 1 1\n2 2 0 1\n3 3 1 1\n"
      "end coaction\n"
      "end module\n";
  fs::path module_path = scratch() / "z2_mod.hqg";
  {
    std::ofstream f(module_path);
    f << with_module;
  }
  CliResult r = run({"fundamental", module_path.string(), "--module=FV2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dim M = 4") != std::string::npos);
  CHECK(r.out.find("dim coinvariants = 2") != std::string::npos);
}

TEST_CASE("loop rejects a non-Latin table naming the repeated entry") {
  fs::path bad = scratch() / "bad.loop";
  {
    std::ofstream f(bad);
    f << "2 0\n0 1\n0 1\n";
  }
  CliResult r = run({"loop", bad.string(), (scratch() / "bad.hqg").string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("repeats entry 0") != std::string::npos);
}

TEST_CASE("loop accepts prime fields") {
  fs::path out = scratch() / "m12_gf7.hqg";
  CliResult r = run({"loop", fixture("m12.loop"), out.string(), "--field=GF7"});
  CHECK(r.code == 0);
  CliResult verify = run({"verify", out.string()});
  CHECK(verify.code == 0);

  CliResult bad = run({"loop", fixture("m12.loop"), out.string(), "--field=R"});
  CHECK(bad.code == 2);
}

TEST_CASE("bad invocations exit 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "/nonexistent/path.hqg"}).code == 2);
  CHECK(run({"verify", fixture("m12.loop"), "--flavor=diagonal"}).code == 2);
}
