#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "radon/io.hpp"
#include "radon/random.hpp"

using namespace radon;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("radon_io_test_" + name);
}

template <class T, class W>
std::string render(const T& v, W w) {
  std::ostringstream os;
  w(os, v);
  return os.str();
}

}  // namespace

TEST_CASE("numbers use 17 significant digits") {
  CHECK(format_number(0.1) == "1.0000000000000001e-01");
  CHECK(format_number(-2.0) == "-2.0000000000000000e+00");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("polynomial round trip is exact") {
  const auto rep = random_representation(7, 3);
  std::stringstream ss;
  write_polynomial(ss, rep);
  const auto back = read_polynomial(ss);
  CHECK(back.degree() == 7);
  CHECK(max_abs_difference(rep, back) == 0.0);
  CHECK(render(rep, write_polynomial) == render(back, write_polynomial));
}

TEST_CASE("node set round trip") {
  const auto nodes = nodes_u_zeros_even(4, 0.97);
  std::stringstream ss;
  write_nodes(ss, nodes);
  const auto back = read_nodes(ss);
  CHECK(back.scheme() == Scheme::u_zeros);
  CHECK(back.parity() == Parity::even);
  REQUIRE(back.size() == nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) CHECK(back[i] == nodes[i]);
}

TEST_CASE("grid round trip through a file") {
  const auto nodes = make_nodes(Scheme::chebyshev, 5);
  const auto grid = simulate(random_representation(5, 9), nodes);
  const auto path = temp_path("grid.json");
  save_grid(path, grid);
  const auto back = load_grid(path);
  CHECK(back.degree() == 5);
  CHECK(back.m() == 3);
  CHECK(back.parity() == Parity::odd);
  for (std::size_t j = 0; j < grid.angle_count(); ++j)
    for (std::size_t k = 0; k < grid.nodes_per_angle(); ++k) CHECK(back.value(j, k) == grid.value(j, k));
  CHECK(render(grid, write_grid) == read_text_file(path));
  std::filesystem::remove(path);
}

TEST_CASE("grid document layout") {
  const auto grid = simulate(random_representation(2, 1), nodes_equidistant(1));
  const std::string text = render(grid, write_grid);
  CHECK(text.find("\"m\": 1") != std::string::npos);
  CHECK(text.find("\"parity\": \"even\"") != std::string::npos);
  CHECK(text.find("\"scheme\": \"equidistant\"") != std::string::npos);
  CHECK(text.find("{\"j\": 2, \"k\": 1, \"value\": ") != std::string::npos);
}

TEST_CASE("malformed documents raise FormatError") {
  const auto parse_poly = [](const std::string& s) {
    std::istringstream is(s);
    return read_polynomial(is);
  };
  CHECK_THROWS_AS(parse_poly("{"), FormatError);
  CHECK_THROWS_AS(parse_poly("{\"coefficients\": []}"), FormatError);
  CHECK_THROWS_AS(parse_poly("{\"degree\": -1, \"coefficients\": []}"), FormatError);
  CHECK_THROWS_AS(parse_poly("{\"degree\": 0, \"coefficients\": []}"), FormatError);
  CHECK_THROWS_AS(parse_poly("{\"degree\": 0, \"coefficients\": [{\"j\": 1, \"k\": 0, \"c\": 1}]}"),
                  FormatError);
  CHECK_THROWS_AS(parse_poly("{\"degree\": 0, \"coefficients\": [{\"j\": 0, \"k\": 0, \"c\": \"x\"}]}"),
                  FormatError);
  CHECK(parse_poly("{\"degree\": 0, \"coefficients\": [{\"j\": 0, \"k\": 0, \"c\": 2.5}]}").c(0, 0) == 2.5);

  std::istringstream grid_missing("{\"m\": 1, \"parity\": \"even\", \"values\": []}");
  CHECK_THROWS_AS(read_grid(grid_missing), FormatError);
  std::istringstream grid_short(
      "{\"m\": 1, \"parity\": \"even\", \"nodes\": {\"scheme\": \"custom\", \"parity\": \"even\", "
      "\"values\": [0.1, 0.2]}, \"values\": [{\"j\": 0, \"k\": 0, \"value\": 1}]}");
  CHECK_THROWS_AS(read_grid(grid_short), FormatError);
}

TEST_CASE("invalid node sets in documents raise the validation error") {
  std::istringstream sym("{\"scheme\": \"custom\", \"parity\": \"even\", \"values\": [0.3, -0.3]}");
  CHECK_THROWS_AS(read_nodes(sym), NodeValidationError);
  std::istringstream scheme("{\"scheme\": \"zernike\", \"parity\": \"even\", \"values\": [0.3]}");
  CHECK_THROWS_AS(read_nodes(scheme), NodeValidationError);
}

TEST_CASE("missing files raise IoError") {
  CHECK_THROWS_AS(load_polynomial(temp_path("does_not_exist.json")), IoError);
  CHECK_THROWS_AS(save_nodes("/nonexistent_dir/x.json", nodes_equidistant(1)), IoError);
}
