#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CURVOP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string csv_cell(const std::string& line, int col) {
  std::stringstream ss(line);
  std::string cell;
  for (int i = 0; i <= col; ++i) std::getline(ss, cell, ',');
  return cell;
}

std::string last_line(const std::string& text) {
  auto end = text.find_last_not_of('\n');
  auto start = text.rfind('\n', end);
  return text.substr(start + 1, end - start);
}

}  // namespace

TEST_CASE("spectrum subcommand") {
  {
    const auto r = run_cli("spectrum --abc 0 0 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "analytic: -0.33333333333333331 0 0 1 1"));
    CHECK(contains(r.out, "match: true"));
  }
  {
    const auto r = run_cli("spectrum --abc 1 1 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "analytic: 1 1 1 1 1"));
  }
  {
    const auto r = run_cli("spectrum --schouten \"-0.5:1,0.5:2\" --dim 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "match: true"));
    CHECK(contains(r.out, "0 0 1 1"));
  }
  CHECK(run_cli("spectrum --abc 1 0 1").exit_code == 64);
  CHECK(run_cli("spectrum").exit_code == 64);
  CHECK(run_cli("spectrum --schouten \"0.5:2\" --dim 3").exit_code == 64);
}

TEST_CASE("cone subcommand") {
  {
    const auto r = run_cli("cone --abc 0 0 1 --alpha 3.3333333333");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "holds: true"));
  }
  CHECK(run_cli("cone --abc -1 1 1 --alpha 3.9 --mode nonneg").exit_code == 1);
  CHECK(run_cli("cone --abc 1 1 1 --alpha 1 --mode positive").exit_code == 0);
  CHECK(run_cli("cone --abc -1 -1 -1 --alpha 2 --mode negative").exit_code == 0);
  CHECK(run_cli("cone --abc 1 1 1 --alpha 7").exit_code == 64);
  CHECK(run_cli("cone --abc 1 1 1 --alpha 2 --mode sideways").exit_code == 64);
}

TEST_CASE("flow subcommand writes the CSV contract") {
  {
    const auto r = run_cli("flow --abc 1 1 1 --h 1e-4 --tmax 0.45 --out cli_sphere.csv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "halt_reason: t_max"));
    CHECK(contains(r.out, "monotone: pass"));
    const std::string csv = slurp("cli_sphere.csv");
    CHECK(contains(csv,
                   "t,a,b,c,S,a_over_S,ab_over_S,neg_c_over_S,lm_over_S,"
                   "neg_lp_over_S,neg_ric2_over_S2\n"));
    const std::string final_row = last_line(csv);
    CHECK(csv_cell(final_row, 0) == "0.45000000000000001");
    const double a_end = std::stod(csv_cell(final_row, 1));
    CHECK(std::abs(a_end - 10.0) < 1e-6);
  }
  {
    const auto r = run_cli("flow --abc 0 0 0 --h 1e-3 --tmax 0.01 --out cli_zero.csv");
    CHECK(r.exit_code == 0);
    const std::string csv = slurp("cli_zero.csv");
    CHECK(contains(csv, "0.001,0,0,0,0,nan,nan,nan,nan,nan,nan\n"));
  }
  {
    const auto r = run_cli(
        "flow --abc 0 0 1 --h 1e-3 --tmax 0.5 --alpha 3.3333333333 --out cli_alpha.csv");
    CHECK(r.exit_code == 0);
    const std::string csv = slurp("cli_alpha.csv");
    CHECK(contains(csv, "neg_ric2_over_S2,f_alpha_over_S\n"));
    CHECK(contains(r.out, "monotone: pass"));
  }
  CHECK(run_cli("flow --abc 0 0 1 --h -1 --tmax 1 --out x.csv").exit_code == 64);
  CHECK(run_cli("flow --abc 0 0 1 --h 1e-3 --tmax 1").exit_code == 64);
}

TEST_CASE("flow output is byte-identical across runs") {
  const std::string args =
      "flow --abc -0.2 0.1 0.9 --h 1e-3 --tmax 1.0 --out cli_det_a.csv";
  const auto r1 = run_cli(args);
  const std::string f1 = slurp("cli_det_a.csv");
  const auto r2 = run_cli(args);
  const std::string f2 = slurp("cli_det_a.csv");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  CHECK(f1 == f2);
  CHECK(!f1.empty());
}

TEST_CASE("verify subcommand") {
  {
    const auto r = run_cli("verify --suite spectra --samples 300 --seed 0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "suite: spectra pass: true"));
  }
  {
    const auto a = run_cli("verify --suite cones --samples 2000 --seed 7");
    const auto b = run_cli("verify --suite cones --samples 2000 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
  {
    const auto r = run_cli("verify --suite flow --samples 50 --seed 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "preservation-f-alpha-"));
    CHECK(contains(r.out, "preservation-h-alpha-"));
  }
  CHECK(run_cli("verify --suite bogus").exit_code == 64);
}

TEST_CASE("examples subcommand reproduces the boundary rows") {
  const auto r = run_cli("examples");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "example=1 eps=0.01 "));
  CHECK(contains(r.out, "example=2 eps=0.001 "));
  CHECK(contains(r.out, "example=3"));
  CHECK(contains(r.out, "example=4"));
  CHECK(contains(r.out, "lm=-1 lp=1.6666666666666667"));
  CHECK(contains(r.out, "examples: pass"));
}

TEST_CASE("JSON config supplies defaults and flags override") {
  {
    std::ofstream cfg("cli_cone.json", std::ios::binary);
    cfg << R"({"abc": [0, 0, 1], "alpha": 3.5})" << "\n";
  }
  {
    const auto r = run_cli("cone --config cli_cone.json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "alpha: 3.5"));
    CHECK(contains(r.out, "abc: 0 0 1"));
  }
  {
    const auto r = run_cli("cone --config cli_cone.json --alpha 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "alpha: 4"));
  }
  {
    std::ofstream cfg("cli_bad.json", std::ios::binary);
    cfg << "[1,2,3]\n";
    const auto r = run_cli("cone --config cli_bad.json --abc 0 0 1 --alpha 2");
    CHECK(r.exit_code == 64);
  }
}

TEST_CASE("exit code contract") {
  CHECK(run_cli("").exit_code == 64);             // missing subcommand
  CHECK(run_cli("unknown").exit_code == 64);      // unknown subcommand
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("flow --help").exit_code == 0);
}
