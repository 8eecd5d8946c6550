// Drives the installed binary end to end: exit codes, output shapes,
// usage failures.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "catch_amalgamated.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  static int serial = 0;
  std::string out_path = "cli_out_" + std::to_string(serial) + ".txt";
  std::string err_path = "cli_err_" + std::to_string(serial) + ".txt";
  ++serial;
  std::string cmd = std::string(COHSYS_CLI_PATH) + " " + args + " >" + out_path +
                    " 2>" + err_path;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("check exit codes partition the outcomes") {
  RunResult r = run_cli("check --g 5 --n 2 --d 21 --k 12");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("GUARANTEED_NONEMPTY") != std::string::npos);
  CHECK(r.out.find("a=1 t=1 s=1") != std::string::npos);
  CHECK(r.out.find("expected_dim_component: 29") != std::string::npos);

  r = run_cli("check --g 5 --n 2 --d 21 --k 20");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("CLIFFORD_INFEASIBLE") != std::string::npos);

  r = run_cli("check --g 2 --n 2 --d 1 --k 1");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("UNKNOWN") != std::string::npos);

  r = run_cli("check --g 2 --n 2 --d 6 --k 5");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("conditional: LOW_DEGREE a=0") != std::string::npos);
}

TEST_CASE("malformed or invalid input exits 1 with usage on stderr") {
  RunResult r = run_cli("check --g 5 --n 2 --d 21");
  CHECK(r.exit_code == 1);
  CHECK(!r.err.empty());

  r = run_cli("check --g 1 --n 2 --d 21 --k 12");
  CHECK(r.exit_code == 1);

  r = run_cli("bogus --g 5");
  CHECK(r.exit_code == 1);
  CHECK(!r.err.empty());

  r = run_cli("scan --g 5 --n 2 --d-min 5 --d-max 4 --k-min 0 --k-max 1");
  CHECK(r.exit_code == 1);

  r = run_cli("scan --g 5 --n 2 --d-min 1 --d-max 2 --k-min 0 --k-max 1 --format tsv");
  CHECK(r.exit_code == 1);
}

TEST_CASE("walls listing") {
  RunResult r = run_cli("walls --g 5 --n 2 --d 3 --k 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("upper_cutoff: 3") != std::string::npos);
  CHECK(r.out.find("walls: 1") != std::string::npos);

  r = run_cli("walls --g 5 --n 2 --d 2 --k 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("walls: 0") != std::string::npos);
}

TEST_CASE("dims report") {
  RunResult r = run_cli("dims --g 4 --n 2 --d 5 --a 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("unstable_locus_dim: 11") != std::string::npos);
  CHECK(r.out.find("s_delta: 2") != std::string::npos);

  r = run_cli("dims --g 4 --n 2 --d 5 --a 3");  // above a_max
  CHECK(r.exit_code == 1);
}

TEST_CASE("scan writes the requested file") {
  RunResult r = run_cli(
      "scan --g 5 --n 2 --d-min 20 --d-max 22 --k-min 11 --k-max 14 "
      "--format svg --out scan_test.svg");
  CHECK(r.exit_code == 0);
  std::ifstream in("scan_test.svg", std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  in.close();
  std::remove("scan_test.svg");
  const std::string svg = ss.str();
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<g id=\"cells\">") != std::string::npos);

  r = run_cli("scan --g 5 --n 2 --d-min 20 --d-max 20 --k-min 12 --k-max 12");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("g,n,d,k,outcome,theorem,a\n", 0) == 0);
}
