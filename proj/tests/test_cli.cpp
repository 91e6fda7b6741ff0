#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "polyknot_cli/cli.hpp"

namespace {

std::string bin_path() {
  if (const char* env = std::getenv("POLYKNOT_BIN")) return env;
  return POLYKNOT_BIN_FALLBACK;
}

struct RunResult {
  int exit_code;
  std::string out;
};

// Subprocess run, stdout captured; stderr passes through to the test log.
RunResult run_bin(const std::string& args) {
  const std::string out_file = "/tmp/polyknot_cli_out.txt";
  const std::string cmd = bin_path() + " " + args + " > " + out_file;
  const int rc = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("generate then curvature prints 2pi to nine decimals") {
  CHECK(run_bin("generate --kind convex_ngon --n 4 --radius 1 -o /tmp/pk_square.json").exit_code ==
        0);
  const auto res = run_bin("curvature /tmp/pk_square.json");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "6.283185307\n");
}

TEST_CASE("in-process run mirrors the binary") {
  CHECK(polyknot::cli::run({"generate", "--kind", "convex_ngon", "--n", "6", "-o",
                            "/tmp/pk_hex.json"}) == 0);
  CHECK(polyknot::cli::run({"curvature", "/tmp/pk_hex.json"}) == 0);
}

TEST_CASE("verify exits 0 on the trefoil and reports the expected certificates") {
  REQUIRE(run_bin("generate --kind torus_knot --p 2 --q 3 --samples 60 --R 2 --r 1 -o "
                  "/tmp/pk_trefoil.json")
              .exit_code == 0);
  const auto res =
      run_bin("verify /tmp/pk_trefoil.json --seed 1 --json /tmp/pk_report1.json");
  CHECK(res.exit_code == 0);

  const auto report = nlohmann::json::parse(slurp("/tmp/pk_report1.json"));
  CHECK(report["overall"] == "pass");
  double phi = 0.0;
  for (const auto& check : report["checks"]) {
    const auto& values = check["values"];
    const std::string name = check["name"];
    if (name == "total_curvature") phi = values["phi_total"];
    if (name == "tricolorability") CHECK(values["tricolorable"] == true);
    if (name == "quadrisecant_scan") CHECK(values["alternating"].get<double>() >= 1);
    if (name == "second_hull") CHECK(values["witness_found"] == true);
    if (name == "unknot_certificate") CHECK(values["certificate_found"] == false);
  }
  CHECK(phi >= 4.0 * 3.141592653589793);
}

TEST_CASE("verify reports are byte-identical across runs with the same seed") {
  REQUIRE(run_bin("verify /tmp/pk_trefoil.json --seed 1 --json /tmp/pk_repA.json").exit_code == 0);
  REQUIRE(run_bin("verify /tmp/pk_trefoil.json --seed 1 --json /tmp/pk_repB.json").exit_code == 0);
  CHECK(slurp("/tmp/pk_repA.json") == slurp("/tmp/pk_repB.json"));
  REQUIRE(run_bin("verify /tmp/pk_trefoil.json --seed 2 --json /tmp/pk_repC.json").exit_code == 0);
  CHECK(slurp("/tmp/pk_repA.json") != slurp("/tmp/pk_repC.json"));
}

TEST_CASE("verify takes the triviality branch on convex fixtures") {
  const auto res = run_bin("verify /tmp/pk_square.json --seed 1 --json /tmp/pk_repsq.json");
  CHECK(res.exit_code == 0);
  const auto report = nlohmann::json::parse(slurp("/tmp/pk_repsq.json"));
  for (const auto& check : report["checks"]) {
    const auto& values = check["values"];
    const std::string name = check["name"];
    if (name == "unknot_certificate") CHECK(values["certificate_found"] == true);
    if (name == "tricolorability") CHECK(values["tricolorable"] == false);
    if (name == "quadrisecant_scan") CHECK(values["records"].get<double>() == 0);
    if (name == "second_hull") CHECK(values["witness_found"] == false);
  }
}

TEST_CASE("diagram emits svg and json with the expected counts") {
  const auto res = run_bin(
      "diagram /tmp/pk_trefoil.json --dir 0,0,1 --svg /tmp/pk_tref.svg --json /tmp/pk_diag.json");
  CHECK(res.exit_code == 0);
  const auto diag = nlohmann::json::parse(slurp("/tmp/pk_diag.json"));
  CHECK(diag["crossing_count"] == 3);
  CHECK(diag["face_count"] == 5);
  const std::string svg = slurp("/tmp/pk_tref.svg");
  size_t paths = 0, pos = 0;
  while ((pos = svg.find("<path", pos)) != std::string::npos) {
    ++paths;
    ++pos;
  }
  CHECK(paths == 6);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_bin("no_such_command 2>/dev/null").exit_code == 1);
  CHECK(run_bin("curvature /tmp/definitely_missing.json 2>/dev/null").exit_code == 1);
}

TEST_CASE("the searched direction picks the cleanest trefoil view") {
  const auto res = run_bin("diagram /tmp/pk_trefoil.json --json /tmp/pk_diag2.json");
  CHECK(res.exit_code == 0);
  const auto diag = nlohmann::json::parse(slurp("/tmp/pk_diag2.json"));
  CHECK(diag["crossing_count"] == 3);
}
