#pragma once

// Recover a degree-n polynomial from R_{phi_j}(f; t_k), phi_j = 2j*pi/(2m+1),
// 0 <= j <= 2m, m = floor((n+1)/2), over floor(n/2)+1 nodes t_k.
//
//  1. gamma_{j,k} = R_{phi_j}(f; t_k) / sqrt(1 - t_k^2)
//  2. discrete Fourier moments at the 2m+1 equidistant angles:
//       m0_k   = 1/(2m+1) sum_j gamma_{j,k}
//       mC_i,k = 1/(2m+1) sum_j gamma_{j,k} cos(i phi_j),  mS likewise with sin, 1 <= i <= m
//  3. at those angles harmonic h and 2m+1-h coincide, so
//       A_0(t_k) = m0_k,   (A_i + A_{2m+1-i})(t_k) / 2 = mC_i,k,   (B_i - B_{2m+1-i})(t_k) / 2 = mS_i,k.
//     A_i and A_{2m+1-i} have opposite parity, so each pair is one square
//     system in the Chebyshev values at the nodes. Writing the even member as
//     2J, the unknowns are a_{J,2l} (l = J..floor(n/2)) and a_{m-J+1,2l-1}
//     (l = m-J+1..m): exactly the rows of block X_J (regularity.hpp). The
//     sine system has the same matrix; unknowns that belong to the partner
//     harmonic 2m+1-i > m pick up a minus sign. A_0 is solved against Y_0.
//  4. profile_to_coefficients() turns (a, b) into ridge coefficients.
//
// For odd n = 2m-1 the same folding holds with A_{2m} = B_{2m} = 0, which is
// what the shorter odd blocks X_J encode; no separate derivation is needed.

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "radon/chebyshev.hpp"
#include "radon/nodes.hpp"
#include "radon/numeric.hpp"
#include "radon/projection.hpp"
#include "radon/regularity.hpp"
#include "radon/ridge_basis.hpp"
#include "radon/solver.hpp"

namespace radon {

inline constexpr double kConditionWarningThreshold = 1e10;

class SingularBlockError : public std::runtime_error {
 public:
  SingularBlockError(int j, std::string label, Scheme scheme)
      : std::runtime_error("block " + label + " (j=" + std::to_string(j) + ", scheme " +
                           to_string(scheme) + ") is numerically singular"),
        j_(j),
        label_(std::move(label)) {}

  int j() const { return j_; }
  const std::string& label() const { return label_; }

 private:
  int j_;
  std::string label_;
};

/// Raw projections on the (2m+1) x K grid; value(j, k) = R_{phi_j}(f; t_k).
template <class Real>
class ProjectionGrid {
 public:
  ProjectionGrid(int degree, NodeSet nodes) : degree_(degree), nodes_(std::move(nodes)) {
    if (degree < 0) throw std::invalid_argument("ProjectionGrid: negative degree");
    if (nodes_.parity() != parity_of_degree(degree))
      throw NodeValidationError(NodeValidationError::Violation::wrong_count,
                                "node set parity " + to_string(nodes_.parity()) +
                                    " does not match degree " + std::to_string(degree));
    if (nodes_.size() != static_cast<std::size_t>(node_count(degree)))
      throw NodeValidationError(NodeValidationError::Violation::wrong_count,
                                "degree " + std::to_string(degree) + " needs " +
                                    std::to_string(node_count(degree)) + " nodes, got " +
                                    std::to_string(nodes_.size()));
    values_.assign(angle_count() * nodes_per_angle(), Real(0));
  }

  int degree() const { return degree_; }
  int m() const { return half_degree(degree_); }
  Parity parity() const { return parity_of_degree(degree_); }
  const NodeSet& nodes() const { return nodes_; }

  std::size_t angle_count() const { return static_cast<std::size_t>(radon::angle_count(degree_)); }
  std::size_t nodes_per_angle() const { return nodes_.size(); }
  std::size_t size() const { return values_.size(); }

  /// phi_j = 2j*pi/(2m+1).
  Real angle(std::size_t j) const {
    return Real(2 * static_cast<long>(j)) * pi<Real>() / Real(2 * m() + 1);
  }
  Real node(std::size_t k) const { return Real(nodes_[k]); }

  Real& value(std::size_t j, std::size_t k) { return values_.at(j * nodes_per_angle() + k); }
  const Real& value(std::size_t j, std::size_t k) const {
    return values_.at(j * nodes_per_angle() + k);
  }

  bool all_finite() const {
    using std::isfinite;
    for (const Real& v : values_)
      if (!isfinite(v)) return false;
    return true;
  }

 private:
  int degree_;
  NodeSet nodes_;
  std::vector<Real> values_;
};

/// Exact projections of `rep` on the grid of its own degree.
template <class Real>
ProjectionGrid<Real> simulate(const RidgeRepresentation<Real>& rep, const NodeSet& nodes) {
  ProjectionGrid<Real> grid(rep.degree(), nodes);
  for (std::size_t j = 0; j < grid.angle_count(); ++j) {
    const auto factors = ridge_angular_factors(rep, BasicAngle<Real>(grid.angle(j)));
    for (std::size_t k = 0; k < grid.nodes_per_angle(); ++k)
      grid.value(j, k) = project_with_factors<Real>(factors, grid.node(k));
  }
  return grid;
}

/// Projections of an arbitrary f(x, y) by Gauss-Legendre quadrature along each chord.
template <class Real, class F>
ProjectionGrid<Real> simulate_function(F&& f, int degree, const NodeSet& nodes, int order) {
  ProjectionGrid<Real> grid(degree, nodes);
  for (std::size_t j = 0; j < grid.angle_count(); ++j) {
    const BasicAngle<Real> phi(grid.angle(j));
    for (std::size_t k = 0; k < grid.nodes_per_angle(); ++k)
      grid.value(j, k) = project_quadrature(f, BasicChord<Real>(phi, grid.node(k)), order);
  }
  return grid;
}

/// gamma[j][k].
template <class Real>
using NormalizedData = std::vector<std::vector<Real>>;

template <class Real>
NormalizedData<Real> normalize(const ProjectionGrid<Real>& grid) {
  using std::abs;
  using std::sqrt;
  for (std::size_t k = 0; k < grid.nodes_per_angle(); ++k)
    if (!(abs(grid.node(k)) < Real(1 - 1e-12)))
      throw NodeValidationError(NodeValidationError::Violation::out_of_range,
                                "node too close to the boundary for normalisation");
  NormalizedData<Real> gamma(grid.angle_count(), std::vector<Real>(grid.nodes_per_angle()));
  for (std::size_t k = 0; k < grid.nodes_per_angle(); ++k) {
    const Real t = grid.node(k);
    const Real w = sqrt(1 - t * t);
    for (std::size_t j = 0; j < grid.angle_count(); ++j) gamma[j][k] = grid.value(j, k) / w;
  }
  return gamma;
}

template <class Real>
struct TrigMoments {
  int m = 0;
  std::vector<Real> m0;                  ///< [k]
  std::vector<std::vector<Real>> cosine;  ///< [i-1][k], 1 <= i <= m
  std::vector<std::vector<Real>> sine;    ///< [i-1][k]

  const Real& c(int i, std::size_t k) const { return cosine.at(static_cast<std::size_t>(i - 1)).at(k); }
  const Real& s(int i, std::size_t k) const { return sine.at(static_cast<std::size_t>(i - 1)).at(k); }
};

template <class Real>
TrigMoments<Real> trig_moments(const NormalizedData<Real>& gamma, int m) {
  using std::cos;
  using std::sin;
  const std::size_t n_angle = static_cast<std::size_t>(2 * m + 1);
  if (gamma.size() != n_angle)
    throw std::invalid_argument("trig_moments: expected " + std::to_string(n_angle) + " angles");
  const std::size_t nk = gamma.front().size();
  TrigMoments<Real> out;
  out.m = m;
  out.m0.assign(nk, Real(0));
  out.cosine.assign(static_cast<std::size_t>(m), std::vector<Real>(nk, Real(0)));
  out.sine.assign(static_cast<std::size_t>(m), std::vector<Real>(nk, Real(0)));
  const Real inv = Real(1) / Real(2 * m + 1);
  for (std::size_t j = 0; j < n_angle; ++j) {
    const Real phi = Real(2 * static_cast<long>(j)) * pi<Real>() / Real(2 * m + 1);
    for (std::size_t k = 0; k < nk; ++k) out.m0[k] += gamma[j][k];
    for (int i = 1; i <= m; ++i) {
      const Real ci = cos(Real(i) * phi), si = sin(Real(i) * phi);
      for (std::size_t k = 0; k < nk; ++k) {
        out.cosine[i - 1][k] += gamma[j][k] * ci;
        out.sine[i - 1][k] += gamma[j][k] * si;
      }
    }
  }
  for (std::size_t k = 0; k < nk; ++k) out.m0[k] *= inv;
  for (int i = 0; i < m; ++i)
    for (std::size_t k = 0; k < nk; ++k) {
      out.cosine[i][k] *= inv;
      out.sine[i][k] *= inv;
    }
  return out;
}

struct BlockDiagnostic {
  std::string label;
  int j = 0;
  int harmonic = 0;  ///< harmonic index i <= m whose moments form the right-hand side
  double cond = 0.0;
};

struct SolveDiagnostics {
  std::vector<BlockDiagnostic> blocks;
  double max_condition = 0.0;
  std::vector<std::string> warnings;
};

template <class Real>
struct ProfileSolution {
  FourierProfile<Real> profile;
  SolveDiagnostics diagnostics;
};

/// Harmonic index (<= m) whose moments feed block J >= 1.
inline int block_harmonic(int m, int J) { return 2 * J <= m ? 2 * J : 2 * m + 1 - 2 * J; }

template <class Real>
ProfileSolution<Real> assemble_and_solve(const TrigMoments<Real>& moments, const NodeSet& nodes,
                                         int degree) {
  const int m = half_degree(degree);
  if (moments.m != m) throw std::invalid_argument("assemble_and_solve: moment order mismatch");
  if (nodes.size() != static_cast<std::size_t>(node_count(degree)) ||
      nodes.parity() != parity_of_degree(degree))
    throw NodeValidationError(NodeValidationError::Violation::wrong_count,
                              "node set does not match degree " + std::to_string(degree));

  ProfileSolution<Real> out{FourierProfile<Real>(degree), {}};
  const std::size_t nk = nodes.size();

  for (int J = 0; J <= m; ++J) {
    const auto block = build_block<Real>(degree, J, nodes.values());
    const auto system = block.entries.transposed();  // row k: sum_r d_r U_{deg_r}(t_k)
    const auto fact = lu_factor(system);
    const int harmonic = J == 0 ? 0 : block_harmonic(m, J);

    BlockDiagnostic diag{block.label, J, harmonic, to_double(condition_1norm(block.entries))};
    out.diagnostics.max_condition = std::max(out.diagnostics.max_condition, diag.cond);
    if (diag.cond > kConditionWarningThreshold) {
      char buf[96];
      std::snprintf(buf, sizeof buf, " condition number %.3e exceeds %.0e", diag.cond,
                    kConditionWarningThreshold);
      out.diagnostics.warnings.push_back("block " + block.label + buf);
    }
    out.diagnostics.blocks.push_back(diag);
    if (fact.singular()) throw SingularBlockError(J, block.label, nodes.scheme());

    if (J == 0) {
      const auto d = fact.solve(moments.m0);
      for (std::size_t r = 0; r < nk; ++r) out.profile.a(0, block.row_degrees[r]) = d[r];
      continue;
    }

    std::vector<Real> rhs_c(nk), rhs_s(nk);
    for (std::size_t k = 0; k < nk; ++k) {
      rhs_c[k] = moments.c(harmonic, k);
      rhs_s[k] = moments.s(harmonic, k);
    }
    const auto dc = fact.solve(rhs_c);
    const auto ds = fact.solve(rhs_s);
    for (std::size_t r = 0; r < nk; ++r) {
      const int deg = block.row_degrees[r];
      // even rows belong to harmonic 2J, odd rows to harmonic 2(m-J+1)-1
      const int j_index = deg % 2 == 0 ? J : m - J + 1;
      const int owner = deg % 2 == 0 ? 2 * J : 2 * (m - J + 1) - 1;
      out.profile.a(j_index, deg) = dc[r];
      out.profile.b(j_index, deg) = owner <= m ? ds[r] : Real(-ds[r]);
    }
  }
  return out;
}

/// Even case n = 2m; m is taken from the node count (m+1 nodes).
template <class Real>
ProfileSolution<Real> assemble_and_solve_even(const TrigMoments<Real>& moments,
                                              const NodeSet& nodes) {
  if (nodes.parity() != Parity::even)
    throw std::invalid_argument("assemble_and_solve_even: node set has odd parity");
  return assemble_and_solve(moments, nodes, nodes.degree());
}

/// Odd case n = 2m-1 with m nodes, A_2m = B_2m = 0.
template <class Real>
ProfileSolution<Real> assemble_and_solve_odd(const TrigMoments<Real>& moments,
                                             const NodeSet& nodes) {
  if (nodes.parity() != Parity::odd)
    throw std::invalid_argument("assemble_and_solve_odd: node set has even parity");
  return assemble_and_solve(moments, nodes, nodes.degree());
}

template <class Real>
struct Reconstruction {
  RidgeRepresentation<Real> polynomial;
  FourierProfile<Real> profile;
  SolveDiagnostics diagnostics;
};

template <class Real>
Reconstruction<Real> reconstruct(const ProjectionGrid<Real>& grid) {
  if (!grid.all_finite()) throw std::invalid_argument("reconstruct: grid has non-finite values");
  const auto gamma = normalize(grid);
  const auto moments = trig_moments(gamma, grid.m());
  auto solved = assemble_and_solve(moments, grid.nodes(), grid.degree());
  auto rep = profile_to_coefficients(solved.profile);
  return {std::move(rep), std::move(solved.profile), std::move(solved.diagnostics)};
}

template <class Real>
RidgeRepresentation<Real> reconstruct_even(const ProjectionGrid<Real>& grid) {
  if (grid.parity() != Parity::even) throw std::invalid_argument("reconstruct_even: odd degree");
  return reconstruct(grid).polynomial;
}

template <class Real>
RidgeRepresentation<Real> reconstruct_odd(const ProjectionGrid<Real>& grid) {
  if (grid.parity() != Parity::odd) throw std::invalid_argument("reconstruct_odd: even degree");
  return reconstruct(grid).polynomial;
}

/// max_{j,k} |R_{phi_j}(rep; t_k) - grid(j, k)|.
template <class Real>
Real reprojection_residual(const RidgeRepresentation<Real>& rep, const ProjectionGrid<Real>& grid) {
  using std::abs;
  const auto again = simulate(rep, grid.nodes());
  Real worst(0);
  for (std::size_t j = 0; j < grid.angle_count(); ++j)
    for (std::size_t k = 0; k < grid.nodes_per_angle(); ++k) {
      const Real d = abs(again.value(j, k) - grid.value(j, k));
      if (d > worst) worst = d;
    }
  return worst;
}

/// Normalised projection at phi from the folded form
///   A_0(t) + sum_{i=1}^{m} [(A_i + A_{2m+1-i})(t) cos(i phi) + (B_i - B_{2m+1-i})(t) sin(i phi)],
/// which agrees with the unfolded profile whenever phi = 2j*pi/(2m+1).
template <class Real>
Real folded_projection(const FourierProfile<Real>& prof, const Real& phi, const Real& t) {
  using std::cos;
  using std::sin;
  const int m = half_degree(prof.degree());
  Real s = harmonic_a(prof, 0, t);
  for (int i = 1; i <= m; ++i) {
    const int partner = 2 * m + 1 - i;
    s += (harmonic_a(prof, i, t) + harmonic_a(prof, partner, t)) * cos(Real(i) * phi) +
         (harmonic_b(prof, i, t) - harmonic_b(prof, partner, t)) * sin(Real(i) * phi);
  }
  return s;
}

}  // namespace radon
