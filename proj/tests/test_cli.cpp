#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "radon/io.hpp"
#include "radon/regularity.hpp"

using namespace radon;
namespace fs = std::filesystem;

namespace {

const fs::path& work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "radon_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path(const std::string& name) { return (work_dir() / name).string(); }

/// Runs the CLI with `args`; stdout and stderr go to files named after `tag`.
int run(const std::string& args, const std::string& tag = "last") {
  const std::string cmd = std::string(RADON_CLI_PATH) + " " + args + " > " + path(tag + ".out") +
                          " 2> " + path(tag + ".err");
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& p) { return read_text_file(p); }

double read_metric(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(key + " ", 0) == 0) return std::stod(line.substr(key.size() + 1));
  FAIL("metric " << key << " not found");
  return NAN;
}

}  // namespace

TEST_CASE("constant polynomial projects to twice the half chord length") {
  write_text_file(path("one.json"),
                  R"({"degree": 0, "coefficients": [{"j": 0, "k": 0, "c": 1}]})");
  REQUIRE(run("simulate --poly-in " + path("one.json") + " --scheme equidistant --out " + path("g0.json")) == 0);
  const auto g = load_grid(path("g0.json"));
  CHECK(g.size() == 1);
  const double t = g.node(0);
  CHECK(g.value(0, 0) == doctest::Approx(2 * std::sqrt(1 - t * t)).epsilon(1e-15));
}

TEST_CASE("grid sizes follow the degree") {
  REQUIRE(run("simulate --degree 4 --seed 3 --out " + path("g4.json")) == 0);
  CHECK(load_grid(path("g4.json")).size() == 15);
  CHECK(load_grid(path("g4.json")).angle_count() == 5);
  REQUIRE(run("simulate --degree 3 --seed 3 --out " + path("g3.json")) == 0);
  CHECK(load_grid(path("g3.json")).size() == 10);
  CHECK(load_grid(path("g3.json")).nodes_per_angle() == 2);
}

TEST_CASE("simulate then reconstruct at degree 8") {
  for (const char* scheme : {"u-zeros", "equidistant", "chebyshev", "obrechkoff"}) {
    const std::string g = path(std::string("g8_") + scheme + ".json");
    const std::string p = path(std::string("p8_") + scheme + ".json");
    REQUIRE(run(std::string("simulate --degree 8 --seed 11 --scheme ") + scheme + " --out " + g +
                " --poly-out " + p) == 0);
    REQUIRE(run("reconstruct --in " + g + " --truth " + p + " --out " + path("r8.json"), "rec") == 0);
    const std::string diag = slurp(path("rec.err"));
    CHECK(read_metric(diag, "coefficient_max_error") <= 1e-8);
    CHECK(read_metric(diag, "reprojection_residual") <= 1e-9);
    CHECK(diag.find("X_4") != std::string::npos);
    CHECK(load_polynomial(path("r8.json")).degree() == 8);
  }
}

TEST_CASE("zero grid gives the zero polynomial") {
  ProjectionGrid<double> zero(5, make_nodes(Scheme::chebyshev, 5));
  save_grid(path("zero.json"), zero);
  REQUIRE(run("reconstruct --in " + path("zero.json") + " --out " + path("zero_poly.json")) == 0);
  const auto rep = load_polynomial(path("zero_poly.json"));
  for (double c : rep.coefficients()) CHECK(c == 0.0);
}

TEST_CASE("symmetric nodes in a grid file are rejected before solving") {
  write_text_file(path("sym.json"), R"({"m": 1, "parity": "even",
    "nodes": {"scheme": "custom", "parity": "even", "values": [0.5, -0.5]},
    "values": [{"j": 0, "k": 0, "value": 1}, {"j": 0, "k": 1, "value": 1},
               {"j": 1, "k": 0, "value": 1}, {"j": 1, "k": 1, "value": 1},
               {"j": 2, "k": 0, "value": 1}, {"j": 2, "k": 1, "value": 1}]})");
  CHECK(run("reconstruct --in " + path("sym.json")) == 2);
  CHECK(slurp(path("last.err")).find("symmetric_pair") != std::string::npos);
}

TEST_CASE("regularity sweep over m = 1..10") {
  REQUIRE(run("regularity --m-range 1..10 --out " + path("reg.csv")) == 0);
  std::ifstream in(path("reg.csv"));
  std::string line;
  std::getline(in, line);
  CHECK(line == "scheme,parity,m,j,block,rows,det,cond,singular,max_cond");
  int rows = 0;
  int m2_checked = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    REQUIRE(f.size() == 10);
    CHECK(f[8] == "false");
    if (f[2] == "2" && f[4] == "X_1") {
      const auto nodes = make_nodes(parse_scheme(f[0]), 4);
      const double closed = det_xi2_closed_form(nodes[0], nodes[1], nodes[2]);
      CHECK(f[5] == "4 2 3");
      CHECK(-std::stod(f[6]) == doctest::Approx(closed).epsilon(1e-12));
      ++m2_checked;
    }
  }
  int want = 0;
  for (int m = 1; m <= 10; ++m) want += 4 * (m + 1);
  CHECK(rows == want);
  CHECK(m2_checked == 4);
}

TEST_CASE("outputs are deterministic and re-readable") {
  REQUIRE(run("simulate --degree 7 --scheme chebyshev --seed 99 --out " + path("d1.json")) == 0);
  REQUIRE(run("simulate --degree 7 --scheme chebyshev --seed 99 --out " + path("d2.json")) == 0);
  CHECK(slurp(path("d1.json")) == slurp(path("d2.json")));
  REQUIRE(run("reconstruct --in " + path("d1.json") + " --out " + path("dp1.json")) == 0);
  REQUIRE(run("reconstruct --in " + path("d1.json") + " --out " + path("dp2.json")) == 0);
  CHECK(slurp(path("dp1.json")) == slurp(path("dp2.json")));
  CHECK_NOTHROW(load_polynomial(path("dp1.json")));
  REQUIRE(run("nodes --degree 6 --scheme obrechkoff --out " + path("n.json")) == 0);
  CHECK(load_nodes(path("n.json")).scheme() == Scheme::obrechkoff);
  REQUIRE(run("regularity --m-range 2..3 --out " + path("r1.csv")) == 0);
  REQUIRE(run("regularity --m-range 2..3 --out " + path("r2.csv")) == 0);
  CHECK(slurp(path("r1.csv")) == slurp(path("r2.csv")));
}

TEST_CASE("custom nodes file") {
  write_text_file(path("custom.json"),
                  R"({"scheme": "custom", "parity": "odd", "values": [0.9, -0.35, 0.6]})");
  REQUIRE(run("verify --degree 5 --nodes-file " + path("custom.json")) == 0);
  CHECK(slurp(path("last.out")).find("OK") != std::string::npos);
  CHECK(run("verify --degree 4 --nodes-file " + path("custom.json")) == 2);
}

TEST_CASE("exit codes") {
  CHECK(run("simulate --degree 3 --scheme gauss") == 2);
  CHECK(run("reconstruct --in " + path("missing.json")) == 4);
  CHECK(run("simulate --degree 3 --out /nonexistent_dir/g.json") == 4);
  write_text_file(path("broken.json"), "{\"m\": 1,");
  CHECK(run("reconstruct --in " + path("broken.json")) == 2);
  CHECK(run("regularity --m-range 5..2") == 2);
  CHECK(run("frobnicate") == 2);
  // nodes on the curve 4 t0 t1 = -1 make X_1 numerically singular
  write_text_file(path("near.json"),
                  R"({"scheme": "custom", "parity": "even", "values": [0.4, -0.625]})");
  REQUIRE(run("simulate --degree 2 --nodes-file " + path("near.json") + " --out " + path("near_grid.json")) == 0);
  CHECK(run("reconstruct --in " + path("near_grid.json")) == 3);
  CHECK(slurp(path("last.err")).find("X_1") != std::string::npos);
}

TEST_CASE("verify in both precisions") {
  CHECK(run("verify --degree 12 --scheme u-zeros") == 0);
  CHECK(run("verify --degree 12 --scheme obrechkoff --precision extended") == 0);
  CHECK(run("verify --degree 12 --scheme obrechkoff") == 1);
  CHECK(slurp(path("last.err")).find("warning: block") != std::string::npos);
  CHECK(run("verify --degree 3 --precision quad") == 2);
}

TEST_CASE("simulate a built-in test function") {
  REQUIRE(run("simulate --degree 6 --function gaussian --scheme equidistant --quad-order 40 --out " +
              path("fn.json")) == 0);
  REQUIRE(run("reconstruct --in " + path("fn.json") + " --out " + path("fn_poly.json"), "fn") == 0);
  CHECK(read_metric(slurp(path("fn.err")), "reprojection_residual") <= 1e-8);
  CHECK(run("simulate --degree 6 --function nope") == 2);
}
