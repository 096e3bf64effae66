#include "radon/regularity.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "radon/numeric.hpp"

namespace radon {

using BigInt = boost::multiprecision::cpp_int;

std::vector<int> xi_row_degrees(int degree, int j) {
  const int h = degree / 2;
  const int m = half_degree(degree);
  std::vector<int> rows;
  for (int l = h; l >= j; --l) rows.push_back(2 * l);
  for (int l = m; l >= m - j + 1; --l) rows.push_back(2 * l - 1);
  return rows;
}

std::vector<int> y_row_degrees(int m, int j) {
  if (j < 0 || j > 2 * m)
    throw std::invalid_argument("y_row_degrees: j must lie in [0, 2m]");
  std::vector<int> rows;
  if (j == 0) {
    for (int l = m; l >= 0; --l) rows.push_back(2 * l);
  } else if (j % 2 == 0) {
    return xi_row_degrees(2 * m, j / 2);
  } else {
    const int i = (j + 1) / 2;
    for (int l = m; l >= i + 1; --l) rows.push_back(2 * l - 1);
    for (int l = m; l >= m - i; --l) rows.push_back(2 * l);
  }
  return rows;
}

std::string format_degrees(std::span<const int> degrees) {
  std::string s;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(degrees[i]);
  }
  return s;
}

namespace detail {

void require_block(int degree, int j, std::size_t node_count, const char* who) {
  const int m = half_degree(degree);
  if (j < 0 || j > m)
    throw std::invalid_argument(std::string(who) + ": block index " + std::to_string(j) +
                                " outside [0, " + std::to_string(m) + "]");
  if (node_count != static_cast<std::size_t>(radon::node_count(degree)))
    throw std::invalid_argument(std::string(who) + ": expected " +
                                std::to_string(radon::node_count(degree)) + " nodes, got " +
                                std::to_string(node_count));
}

}  // namespace detail

double det_xi2_closed_form(double t1, double t2, double t3) {
  const double vandermonde = (t1 - t2) * (t1 - t3) * (t2 - t3);
  const double bracket = 8 * t1 * t1 * t2 * t2 * t3 * t3 + 4 * t1 * t2 * t3 * (t1 + t2 + t3) +
                         (2 * t1 * t1 - 1) * (2 * t2 * t2 - 1) * (2 * t3 * t3 - 1);
  return 32 * vandermonde * bracket;
}

namespace {

/// t = numerator / 2^shift exactly.
struct Dyadic {
  BigInt numerator;
  int shift = 0;
};

Dyadic to_dyadic(double t) {
  if (t == 0.0) return {};
  int e = 0;
  const double f = std::frexp(t, &e);
  auto mant = static_cast<std::int64_t>(std::ldexp(f, 53));
  int shift = 53 - e;
  while (shift > 0 && mant % 2 == 0) {
    mant /= 2;
    --shift;
  }
  if (shift < 0)
    throw std::invalid_argument("exact_determinant: node magnitude must be below 2^53");
  return {BigInt(mant), shift};
}

double ldexp_big(const BigInt& v, long long exponent, double* log2_abs) {
  if (v == 0) {
    if (log2_abs) *log2_abs = -std::numeric_limits<double>::infinity();
    return 0.0;
  }
  const BigInt a = abs(v);
  const long long bits = static_cast<long long>(boost::multiprecision::msb(a)) + 1;
  const long long drop = bits > 62 ? bits - 62 : 0;
  const double mant = static_cast<double>(static_cast<std::int64_t>(a >> drop));
  if (log2_abs) *log2_abs = std::log2(mant) + static_cast<double>(drop + exponent);
  const double r = std::ldexp(mant, static_cast<int>(std::clamp<long long>(drop + exponent, -100000, 100000)));
  return v < 0 ? -r : r;
}

}  // namespace

namespace {

struct ExactDetWithLog {
  ExactDeterminant det;
  double log2_abs = 0.0;
};

ExactDetWithLog exact_determinant_impl(std::span<const int> degrees,
                                       std::span<const double> nodes) {
  const std::size_t n = degrees.size();
  if (n == 0 || n != nodes.size())
    throw std::invalid_argument("exact_determinant: need as many degrees as nodes");
  int top = 0;
  for (int d : degrees) top = std::max(top, d);

  // Column c scaled by 2^(shift_c * top) so every entry is an integer.
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  long long total_shift = 0;
  for (std::size_t c = 0; c < n; ++c) {
    const Dyadic t = to_dyadic(nodes[c]);
    const BigInt four_s = BigInt(1) << (2 * t.shift);
    std::vector<BigInt> v(static_cast<std::size_t>(top) + 1);
    v[0] = 1;
    if (top >= 1) v[1] = 2 * t.numerator;
    for (int d = 1; d < top; ++d) v[d + 1] = 2 * t.numerator * v[d] - four_s * v[d - 1];
    for (std::size_t r = 0; r < n; ++r) {
      const int d = degrees[r];
      a[r][c] = v[d] << (t.shift * (top - d));
    }
    total_shift += static_cast<long long>(t.shift) * top;
  }

  // Fraction-free Gaussian elimination (Bareiss).
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return {};
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  const BigInt det = sign * a[n - 1][n - 1];

  ExactDetWithLog out;
  if (det == 0) return out;
  out.det.sign = det < 0 ? -1 : 1;
  out.det.value = ldexp_big(det, -total_shift, &out.log2_abs);
  return out;
}

}  // namespace

ExactDeterminant exact_determinant(std::span<const int> degrees, std::span<const double> nodes) {
  return exact_determinant_impl(degrees, nodes).det;
}

bool RegularityReport::singular() const {
  for (const auto& b : blocks)
    if (b.singular) return true;
  return false;
}

double RegularityReport::max_condition() const {
  double best = 0.0;
  for (const auto& b : blocks) best = std::max(best, b.cond);
  return best;
}

RegularityReport certify(std::span<const double> nodes, Parity parity, Scheme scheme) {
  validate_nodes(nodes, parity);
  RegularityReport report;
  report.scheme = scheme;
  report.parity = parity;
  report.degree = degree_for(nodes.size(), parity);
  report.m = half_degree(report.degree);

  for (int j = 0; j <= report.m; ++j) {
    const auto block = build_block<double>(report.degree, j, nodes);
    BlockCertificate cert;
    cert.label = block.label;
    cert.j = j;
    cert.row_degrees = block.row_degrees;

    const auto exact = exact_determinant_impl(block.row_degrees, nodes);
    cert.det = exact.det.value;
    cert.singular = exact.det.zero();
    if (!cert.singular) {
      double log2_rows = 0.0;
      for (std::size_t r = 0; r < block.entries.dim(); ++r) {
        double s = 0.0;
        for (double v : block.entries.row(r)) s += v * v;
        log2_rows += 0.5 * std::log2(s);
      }
      cert.hadamard_ratio = std::exp2(exact.log2_abs - log2_rows);
    }
    // Several families exceed 1/eps, so the condition number is formed in
    // extended precision; a double LU would just report those blocks as singular.
    const auto wide = build_block<HighPrecision>(report.degree, j, nodes);
    cert.cond = cert.singular ? std::numeric_limits<double>::infinity()
                              : to_double(condition_1norm(wide.entries));
    report.blocks.push_back(std::move(cert));
  }
  return report;
}

RegularityReport certify(const NodeSet& nodes) {
  return certify(nodes.values(), nodes.parity(), nodes.scheme());
}

namespace {

std::string sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

}  // namespace

void write_regularity_csv_header(std::ostream& os) {
  os << "scheme,parity,m,j,block,rows,det,cond,singular,max_cond\n";
}

void write_regularity_csv_rows(std::ostream& os, const RegularityReport& report) {
  for (const auto& b : report.blocks) {
    os << to_string(report.scheme) << ',' << to_string(report.parity) << ',' << report.m << ','
       << b.j << ',' << b.label << ',' << format_degrees(b.row_degrees) << ',' << sci(b.det)
       << ',' << sci(b.cond) << ',' << (b.singular ? "true" : "false") << ','
       << sci(report.max_condition()) << '\n';
  }
}

}  // namespace radon
