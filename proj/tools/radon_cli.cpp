// radon: simulate Radon projection data, reconstruct polynomials from it and
// report on the regularity of node schemes.
//
// Exit status: 0 success, 1 verification outside tolerance, 2 invalid input,
// 3 singular system, 4 file I/O failure.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "radon/io.hpp"
#include "radon/numeric.hpp"
#include "radon/random.hpp"
#include "radon/reconstruct.hpp"
#include "radon/regularity.hpp"

using namespace radon;

namespace {

enum ExitCode { kOk = 0, kOutOfTolerance = 1, kInvalid = 2, kSingular = 3, kIo = 4 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using TestFunction = std::function<double(double, double)>;

const std::map<std::string, TestFunction>& test_functions() {
  static const std::map<std::string, TestFunction> fns{
      {"gaussian", [](double x, double y) { return std::exp(-2.0 * (x * x + y * y)); }},
      {"ridge-cos", [](double x, double y) { return std::cos(3.0 * x + y); }},
      {"smooth", [](double x, double y) { return std::exp(x - 0.5 * y) * std::cos(2.0 * y) + 1.0 / (2.0 + x); }},
      {"franke-like", [](double x, double y) {
         return 0.75 * std::exp(-((x - 0.2) * (x - 0.2) + (y + 0.3) * (y + 0.3)) * 4.0) +
                0.5 * std::exp(-((x + 0.4) * (x + 0.4) + (y - 0.1) * (y - 0.1)) * 9.0);
       }},
  };
  return fns;
}

struct Config {
  int degree = -1;
  std::string scheme = "u-zeros";
  std::string nodes_file;
  double t0 = kDefaultUZerosT0;
  std::uint64_t seed = kDefaultSeed;
  std::string poly_in;
  std::string poly_out;
  std::string function;
  int quad_order = 32;
  std::string in;
  std::string out;
  std::string truth;
  std::string m_range = "1..10";
  std::string parity = "even";
  std::string precision = "double";
  double tolerance = 1e-8;
  double residual_tolerance = 1e-9;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

NodeSet resolve_nodes(const Config& cfg, int degree) {
  if (!cfg.nodes_file.empty()) {
    auto nodes = load_nodes(cfg.nodes_file);
    if (nodes.parity() != parity_of_degree(degree) ||
        nodes.size() != static_cast<std::size_t>(node_count(degree)))
      throw NodeValidationError(NodeValidationError::Violation::wrong_count,
                                "degree " + std::to_string(degree) + " needs " +
                                    std::to_string(node_count(degree)) + " " +
                                    to_string(parity_of_degree(degree)) + "-parity nodes, file has " +
                                    std::to_string(nodes.size()) + " " + to_string(nodes.parity()));
    return nodes;
  }
  return make_nodes(parse_scheme(cfg.scheme), degree, cfg.t0);
}

RidgeRepresentation<double> resolve_polynomial(const Config& cfg) {
  if (!cfg.poly_in.empty()) {
    auto rep = load_polynomial(cfg.poly_in);
    if (cfg.degree >= 0 && rep.degree() != cfg.degree)
      throw UsageError("--degree " + std::to_string(cfg.degree) + " disagrees with polynomial file of degree " +
                       std::to_string(rep.degree()));
    return rep;
  }
  if (cfg.degree < 0) throw UsageError("--degree is required");
  return random_representation(cfg.degree, cfg.seed);
}

std::string render_grid(const ProjectionGrid<double>& g) {
  std::ostringstream os;
  write_grid(os, g);
  return os.str();
}

std::string render_polynomial(const RidgeRepresentation<double>& rep) {
  std::ostringstream os;
  write_polynomial(os, rep);
  return os.str();
}

void print_diagnostics(const SolveDiagnostics& d) {
  std::fprintf(stderr, "block  harmonic  cond\n");
  for (const auto& b : d.blocks)
    std::fprintf(stderr, "%-6s %8d  %s\n", b.label.c_str(), b.harmonic, format_number(b.cond).c_str());
  std::fprintf(stderr, "max_condition %s\n", format_number(d.max_condition).c_str());
  for (const auto& w : d.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
}

int cmd_simulate(const Config& cfg) {
  if (!cfg.function.empty()) {
    const auto it = test_functions().find(cfg.function);
    if (it == test_functions().end()) throw UsageError("unknown --function '" + cfg.function + "'");
    if (cfg.degree < 0) throw UsageError("--degree is required with --function");
    if (cfg.quad_order < 1) throw UsageError("--quad-order must be >= 1");
    const auto nodes = resolve_nodes(cfg, cfg.degree);
    emit(cfg.out, render_grid(simulate_function<double>(it->second, cfg.degree, nodes, cfg.quad_order)));
    return kOk;
  }
  const auto rep = resolve_polynomial(cfg);
  const auto nodes = resolve_nodes(cfg, rep.degree());
  if (!cfg.poly_out.empty()) save_polynomial(cfg.poly_out, rep);
  emit(cfg.out, render_grid(simulate(rep, nodes)));
  return kOk;
}

int cmd_reconstruct(const Config& cfg) {
  if (cfg.in.empty()) throw UsageError("--in <grid file> is required");
  const auto grid = load_grid(cfg.in);
  const auto rec = reconstruct(grid);
  print_diagnostics(rec.diagnostics);
  const double residual = reprojection_residual(rec.polynomial, grid);
  std::fprintf(stderr, "reprojection_residual %s\n", format_number(residual).c_str());
  if (!cfg.truth.empty()) {
    const auto truth = load_polynomial(cfg.truth);
    if (truth.degree() != rec.polynomial.degree())
      throw UsageError("--truth has degree " + std::to_string(truth.degree()) + ", grid has degree " +
                       std::to_string(rec.polynomial.degree()));
    std::fprintf(stderr, "coefficient_max_error %s\n",
                 format_number(max_abs_difference(truth, rec.polynomial)).c_str());
  }
  emit(cfg.out, render_polynomial(rec.polynomial));
  return kOk;
}

std::pair<int, int> parse_m_range(const std::string& text) {
  static const std::regex re(R"(^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$)");
  std::smatch mt;
  if (!std::regex_match(text, mt, re)) throw UsageError("--m-range must look like A..B");
  const int a = std::stoi(mt[1]);
  const int b = mt[2].matched ? std::stoi(mt[2]) : a;
  if (a < 1 || b < a || b > 30) throw UsageError("--m-range needs 1 <= A <= B <= 30");
  return {a, b};
}

int cmd_regularity(const Config& cfg) {
  const auto [lo, hi] = parse_m_range(cfg.m_range);
  std::vector<Parity> parities;
  if (cfg.parity == "both")
    parities = {Parity::even, Parity::odd};
  else
    parities = {parse_parity(cfg.parity)};

  std::ostringstream csv;
  write_regularity_csv_header(csv);
  std::map<std::string, double> worst;
  bool any_singular = false;
  for (int m = lo; m <= hi; ++m)
    for (Parity p : parities)
      for (Scheme s : {Scheme::equidistant, Scheme::chebyshev, Scheme::u_zeros, Scheme::obrechkoff}) {
        const int degree = p == Parity::even ? 2 * m : 2 * m - 1;
        const auto report = certify(make_nodes(s, degree, cfg.t0));
        write_regularity_csv_rows(csv, report);
        const std::string key = to_string(s) + "/" + to_string(p);
        worst[key] = std::max(worst[key], report.max_condition());
        any_singular = any_singular || report.singular();
      }
  emit(cfg.out, csv.str());
  std::fprintf(stderr, "max condition number over m = %d..%d:\n", lo, hi);
  for (const auto& [key, c] : worst) std::fprintf(stderr, "  %-20s %s\n", key.c_str(), format_number(c).c_str());
  if (any_singular) {
    std::fprintf(stderr, "error: a singular block was found\n");
    return kSingular;
  }
  return kOk;
}

int cmd_nodes(const Config& cfg) {
  NodeSet nodes = [&] {
    if (!cfg.nodes_file.empty()) return load_nodes(cfg.nodes_file);
    if (cfg.degree < 0) throw UsageError("--degree or --nodes-file is required");
    return make_nodes(parse_scheme(cfg.scheme), cfg.degree, cfg.t0);
  }();
  const auto report = certify(nodes);
  std::fprintf(stderr, "scheme %s, parity %s, degree %d, m %d\n", to_string(nodes.scheme()).c_str(),
               to_string(nodes.parity()).c_str(), report.degree, report.m);
  for (const auto& b : report.blocks)
    std::fprintf(stderr, "  %-5s rows {%s} det %s cond %s%s\n", b.label.c_str(),
                 format_degrees(b.row_degrees).c_str(), format_number(b.det).c_str(),
                 format_number(b.cond).c_str(), b.singular ? " SINGULAR" : "");
  std::ostringstream os;
  write_nodes(os, nodes);
  emit(cfg.out, os.str());
  return report.singular() ? kSingular : kOk;
}

template <class Real>
int verify_in(const Config& cfg) {
  const auto rep_d = resolve_polynomial(cfg);
  const auto nodes = resolve_nodes(cfg, rep_d.degree());
  const auto rep = convert<Real>(rep_d);
  const auto grid = simulate(rep, nodes);
  const auto rec = reconstruct(grid);
  print_diagnostics(rec.diagnostics);
  const double err = to_double(max_abs_difference(rep, rec.polynomial));
  const double res = to_double(reprojection_residual(rec.polynomial, grid));
  const bool ok = err <= cfg.tolerance && res <= cfg.residual_tolerance;
  std::printf("degree %d scheme %s precision %s\n", rep.degree(), to_string(nodes.scheme()).c_str(),
              cfg.precision.c_str());
  std::printf("coefficient_max_error %s\n", format_number(err).c_str());
  std::printf("reprojection_residual %s\n", format_number(res).c_str());
  std::printf("max_condition %s\n", format_number(rec.diagnostics.max_condition).c_str());
  std::printf("%s\n", ok ? "OK" : "OUT OF TOLERANCE");
  return ok ? kOk : kOutOfTolerance;
}

int cmd_verify(const Config& cfg) {
  if (cfg.precision == "double") return verify_in<double>(cfg);
  if (cfg.precision == "extended") return verify_in<HighPrecision>(cfg);
  throw UsageError("--precision must be double or extended");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polynomial reconstruction from Radon projections on the unit disk"};
  app.require_subcommand(1);
  Config cfg;

  auto add_nodes_opts = [&](CLI::App* sub) {
    sub->add_option("--scheme", cfg.scheme, "equidistant|chebyshev|u-zeros|obrechkoff")
        ->capture_default_str();
    sub->add_option("--nodes-file", cfg.nodes_file, "node set JSON (overrides --scheme)");
    sub->add_option("--t0", cfg.t0, "free node of the even u-zeros scheme")->capture_default_str();
  };
  auto add_poly_opts = [&](CLI::App* sub) {
    sub->add_option("--degree", cfg.degree, "polynomial degree n >= 0");
    sub->add_option("--seed", cfg.seed, "seed for the random polynomial")->capture_default_str();
    sub->add_option("--poly-in", cfg.poly_in, "polynomial JSON instead of a random one");
  };

  auto* sim = app.add_subcommand("simulate", "write the projection grid of a polynomial or test function");
  add_poly_opts(sim);
  add_nodes_opts(sim);
  sim->add_option("--poly-out", cfg.poly_out, "also write the polynomial that was projected");
  sim->add_option("--function", cfg.function, "built-in test function: gaussian|ridge-cos|smooth|franke-like");
  sim->add_option("--quad-order", cfg.quad_order, "Gauss-Legendre points per chord for --function")
      ->capture_default_str();
  sim->add_option("--out", cfg.out, "grid JSON (default stdout)");

  auto* rec = app.add_subcommand("reconstruct", "recover the polynomial from a projection grid");
  rec->add_option("--in", cfg.in, "grid JSON")->required();
  rec->add_option("--out", cfg.out, "polynomial JSON (default stdout)");
  rec->add_option("--truth", cfg.truth, "polynomial JSON to compare against");

  auto* reg = app.add_subcommand("regularity", "CSV sweep of block determinants and condition numbers");
  reg->add_option("--m-range", cfg.m_range, "A..B")->capture_default_str();
  reg->add_option("--parity", cfg.parity, "even|odd|both")->capture_default_str();
  reg->add_option("--t0", cfg.t0, "free node of the even u-zeros scheme")->capture_default_str();
  reg->add_option("--out", cfg.out, "CSV file (default stdout)");

  auto* nod = app.add_subcommand("nodes", "generate or check a node set and certify its blocks");
  nod->add_option("--degree", cfg.degree, "polynomial degree n >= 0");
  add_nodes_opts(nod);
  nod->add_option("--out", cfg.out, "node set JSON (default stdout)");

  auto* ver = app.add_subcommand("verify", "simulate, reconstruct and compare in one step");
  add_poly_opts(ver);
  add_nodes_opts(ver);
  ver->add_option("--precision", cfg.precision, "double|extended")->capture_default_str();
  ver->add_option("--tolerance", cfg.tolerance, "coefficient tolerance")->capture_default_str();
  ver->add_option("--residual-tolerance", cfg.residual_tolerance, "reprojection tolerance")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*sim) return cmd_simulate(cfg);
    if (*rec) return cmd_reconstruct(cfg);
    if (*reg) return cmd_regularity(cfg);
    if (*nod) return cmd_nodes(cfg);
    if (*ver) return cmd_verify(cfg);
  } catch (const SingularBlockError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kSingular;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIo;
  } catch (const NodeValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInvalid;
  } catch (const FormatError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInvalid;
  }
  return kInvalid;
}
