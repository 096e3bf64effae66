#pragma once

// The square Chebyshev-value matrices whose nonsingularity makes the
// reconstruction unique.
//
// For degree n, with h = floor(n/2) and m = floor((n+1)/2), block j >= 1 has rows
//   U_{2h}, U_{2h-2}, ..., U_{2j},  U_{2m-1}, U_{2m-3}, ..., U_{2m-2j+1}
// (the even case n = 2m gives X_j of size m+1, the odd case n = 2m-1 gives
// X_j of size m), and block 0 has rows U_{2h}, ..., U_2, U_0 (Y_0).
// Column c holds those polynomials evaluated at node t_c.
//
// Block j carries the folded harmonic pair {2j, 2m+1-2j}. Blocks 0..m are
// all required for the even case too: X_m = {U_2m, U_2m-1, ..., U_1} pairs
// harmonic 1 with harmonic 2m.
//
// The m = 2 example set {U_2, U_3, U_4} is block X_1 here; its closed-form
// determinant is det_xi2_closed_form().

#include <algorithm>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "radon/chebyshev.hpp"
#include "radon/nodes.hpp"
#include "radon/solver.hpp"

namespace radon {

/// Row degrees of block j (j = 0 is the all-even block Y_0) for degree n.
std::vector<int> xi_row_degrees(int degree, int j);

/// Row degrees of Y_j (0 <= j <= 2m) for the even case n = 2m:
///   Y_0      = {U_2m, U_2m-2, ..., U_0}
///   Y_{2i}   = {U_2m, ..., U_2i, U_2m-1, ..., U_2m-2i+1}           (= X_i)
///   Y_{2i-1} = {U_2m-1, ..., U_2i+1, U_2m, U_2m-2, ..., U_2m-2i}
std::vector<int> y_row_degrees(int m, int j);

std::string format_degrees(std::span<const int> degrees);

template <class Real>
struct XiMatrix {
  std::string label;
  int j = 0;
  Parity parity = Parity::even;
  std::vector<int> row_degrees;
  DenseMatrix<Real> entries;
};

/// Entry (r, c) = U_{degrees[r]}(nodes[c]); requires degrees.size() == nodes.size().
template <class Real = double>
DenseMatrix<Real> chebyshev_value_matrix(std::span<const int> degrees,
                                         std::span<const double> nodes) {
  if (degrees.size() != nodes.size() || degrees.empty())
    throw std::invalid_argument("chebyshev_value_matrix: need as many degrees as nodes");
  DenseMatrix<Real> a(degrees.size());
  int top = 0;
  for (int d : degrees) top = std::max(top, d);
  for (std::size_t c = 0; c < nodes.size(); ++c) {
    const auto u = eval_u_all(top, Real(nodes[c]));
    for (std::size_t r = 0; r < degrees.size(); ++r) a(r, c) = u[static_cast<std::size_t>(degrees[r])];
  }
  return a;
}

namespace detail {
void require_block(int degree, int j, std::size_t node_count, const char* who);
}

/// Block j of degree n at the given nodes (j = 0 gives Y_0).
template <class Real = double>
XiMatrix<Real> build_block(int degree, int j, std::span<const double> nodes) {
  detail::require_block(degree, j, nodes.size(), "build_block");
  XiMatrix<Real> x;
  x.label = j == 0 ? "Y_0" : "X_" + std::to_string(j);
  x.j = j;
  x.parity = parity_of_degree(degree);
  x.row_degrees = xi_row_degrees(degree, j);
  x.entries = chebyshev_value_matrix<Real>(x.row_degrees, nodes);
  return x;
}

/// X_j for n = 2m with m = nodes.size() - 1, 1 <= j <= m.
template <class Real = double>
XiMatrix<Real> build_xi_even(int j, std::span<const double> nodes) {
  if (nodes.empty()) throw std::invalid_argument("build_xi_even: no nodes");
  const int degree = degree_for(nodes.size(), Parity::even);
  if (j < 1) throw std::invalid_argument("build_xi_even: j must be >= 1");
  return build_block<Real>(degree, j, nodes);
}

template <class Real = double>
XiMatrix<Real> build_xi_even(int j, const NodeSet& nodes) {
  if (nodes.parity() != Parity::even) throw std::invalid_argument("build_xi_even: odd node set");
  return build_xi_even<Real>(j, nodes.values());
}

/// X_j for n = 2m-1 with m = nodes.size(), 1 <= j <= m.
template <class Real = double>
XiMatrix<Real> build_xi_odd(int j, std::span<const double> nodes) {
  if (nodes.empty()) throw std::invalid_argument("build_xi_odd: no nodes");
  const int degree = degree_for(nodes.size(), Parity::odd);
  if (j < 1) throw std::invalid_argument("build_xi_odd: j must be >= 1");
  return build_block<Real>(degree, j, nodes);
}

template <class Real = double>
XiMatrix<Real> build_xi_odd(int j, const NodeSet& nodes) {
  if (nodes.parity() != Parity::odd) throw std::invalid_argument("build_xi_odd: even node set");
  return build_xi_odd<Real>(j, nodes.values());
}

/// Y_j for n = 2m with m = nodes.size() - 1, 0 <= j <= 2m.
template <class Real = double>
XiMatrix<Real> build_y(int j, std::span<const double> nodes) {
  if (nodes.empty()) throw std::invalid_argument("build_y: no nodes");
  const int m = static_cast<int>(nodes.size()) - 1;
  XiMatrix<Real> x;
  x.label = "Y_" + std::to_string(j);
  x.j = j;
  x.parity = Parity::even;
  x.row_degrees = y_row_degrees(m, j);
  x.entries = chebyshev_value_matrix<Real>(x.row_degrees, nodes);
  return x;
}

template <class Real = double>
XiMatrix<Real> build_y(int j, const NodeSet& nodes) {
  if (nodes.parity() != Parity::even) throw std::invalid_argument("build_y: odd node set");
  return build_y<Real>(j, nodes.values());
}

/// det of the m = 2 block with rows {U_2, U_3, U_4}:
///   32 prod_{i<j}(t_i - t_j) [8 t1^2 t2^2 t3^2 + 4 t1 t2 t3 (t1+t2+t3) + prod(2 t_i^2 - 1)].
/// Equals -det(X_1) with rows ordered U_4, U_2, U_3.
double det_xi2_closed_form(double t1, double t2, double t3);

/// Exact determinant of the Chebyshev value matrix at the given (binary
/// floating-point, hence rational) nodes.
struct ExactDeterminant {
  int sign = 0;        ///< -1, 0 or +1, exact
  double value = 0.0;  ///< the exact value rounded to double (may underflow to 0 when sign != 0)
  bool zero() const { return sign == 0; }
};

ExactDeterminant exact_determinant(std::span<const int> degrees, std::span<const double> nodes);

struct BlockCertificate {
  std::string label;
  int j = 0;
  std::vector<int> row_degrees;
  double det = 0.0;             ///< exact determinant rounded to double
  double hadamard_ratio = 0.0;  ///< |det| / prod of row 2-norms, in [0, 1]
  double cond = 0.0;            ///< 1-norm condition number, formed in 50 digits (inf when singular)
  bool singular = false;        ///< exact determinant is zero
};

struct RegularityReport {
  Scheme scheme = Scheme::custom;
  Parity parity = Parity::even;
  int degree = 0;
  int m = 0;
  std::vector<BlockCertificate> blocks;

  bool singular() const;
  double max_condition() const;
};

/// Certify every block the reconstruction solves: Y_0 and X_1..X_m.
RegularityReport certify(const NodeSet& nodes);
RegularityReport certify(std::span<const double> nodes, Parity parity,
                         Scheme scheme = Scheme::custom);

/// CSV columns: scheme,parity,m,j,block,rows,det,cond,singular,max_cond
/// (max_cond repeats the largest condition number over the report's blocks).
void write_regularity_csv_header(std::ostream& os);
void write_regularity_csv_rows(std::ostream& os, const RegularityReport& report);

}  // namespace radon
