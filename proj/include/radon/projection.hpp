#pragma once

// Forward Radon projections on the unit disk.
//
// A chord I(theta, t) is the part of the line x cos(theta) + y sin(theta) = t
// inside the disk, parameterised by s in [-sqrt(1-t^2), sqrt(1-t^2)]:
//   x = t cos(theta) - s sin(theta),  y = t sin(theta) + s cos(theta).
//
// Ridge polynomials have the closed form (Marr)
//   R_phi(U_k(theta; .); t) = 2/(k+1) sqrt(1-t^2) U_k(t) U_k(cos(phi - theta)),
// and the quadrature routines below exist to check it independently.

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "radon/chebyshev.hpp"
#include "radon/numeric.hpp"
#include "radon/ridge_basis.hpp"

namespace radon {

template <class Real>
struct BasicChord {
  BasicChord(BasicAngle<Real> theta_, Real t_) : theta(theta_), t(t_) {
    using std::abs;
    if (!(abs(t) < 1)) throw std::domain_error("Chord: |t| must be < 1");
  }

  Real half_length() const {
    using std::sqrt;
    return sqrt(1 - t * t);
  }

  BasicAngle<Real> theta;
  Real t;
};

using Chord = BasicChord<double>;

template <class Real>
Real marr_projection(int k, const BasicAngle<Real>& theta, const BasicAngle<Real>& phi,
                     const Real& t) {
  using std::abs;
  using std::cos;
  using std::sqrt;
  if (!(abs(t) < 1)) throw std::domain_error("marr_projection: |t| must be < 1");
  return Real(2) / Real(k + 1) * sqrt(1 - t * t) * eval_u(k, t) *
         eval_u(k, Real(cos(phi.radians() - theta.radians())));
}

/// (2/(k+1)) sum_j c_{j,k} U_k(cos(phi - theta_{j,k})) for k = 0..n: the part of
/// R_phi(P; t) / sqrt(1-t^2) that multiplies U_k(t). Depends on phi only.
template <class Real>
std::vector<Real> ridge_angular_factors(const RidgeRepresentation<Real>& rep,
                                        const BasicAngle<Real>& phi) {
  using std::cos;
  std::vector<Real> out(static_cast<std::size_t>(rep.degree()) + 1, Real(0));
  for (int k = 0; k <= rep.degree(); ++k) {
    Real inner(0);
    for (int j = 0; j <= k; ++j) {
      const Real& cjk = rep.c(j, k);
      if (cjk == 0) continue;
      inner += cjk * eval_u(k, Real(cos(phi.radians() - ridge_angle<Real>(j, k))));
    }
    out[k] = Real(2) / Real(k + 1) * inner;
  }
  return out;
}

/// sqrt(1-t^2) sum_k U_k(t) factors[k].
template <class Real>
Real project_with_factors(std::span<const Real> factors, const Real& t) {
  using std::abs;
  using std::sqrt;
  if (!(abs(t) < 1)) throw std::domain_error("project_ridge_poly: |t| must be < 1");
  const auto ut = eval_u_all(static_cast<int>(factors.size()) - 1, t);
  Real sum(0);
  for (std::size_t k = 0; k < factors.size(); ++k) sum += ut[k] * factors[k];
  return sqrt(1 - t * t) * sum;
}

/// R_phi(P; t) for P in ridge form, summing Marr's formula over all terms.
template <class Real>
Real project_ridge_poly(const RidgeRepresentation<Real>& rep, const BasicAngle<Real>& phi,
                        const Real& t) {
  using std::abs;
  if (!(abs(t) < 1)) throw std::domain_error("project_ridge_poly: |t| must be < 1");
  const auto f = ridge_angular_factors(rep, phi);
  return project_with_factors<Real>(f, t);
}

template <class Real>
struct GaussRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

/// Gauss-Legendre rule on [-1, 1]; Newton on P_order, stopping once the
/// update falls below 1e-15 and then taking one polishing step.
template <class Real = double>
GaussRule<Real> gauss_legendre(int order) {
  using std::abs;
  using std::cos;
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  GaussRule<Real> rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));

  // P_order(x) and its derivative by the Bonnet recurrence.
  auto legendre = [order](const Real& x, Real& dp) {
    Real p0(1), p1 = x;
    for (int k = 2; k <= order; ++k) {
      Real p2 = (Real(2 * k - 1) * x * p1 - Real(k - 1) * p0) / Real(k);
      p0 = p1;
      p1 = p2;
    }
    dp = Real(order) * (x * p1 - p0) / (x * x - 1);
    return p1;
  };

  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    Real x = cos(pi<Real>() * (Real(i) + Real(0.75)) / (Real(order) + Real(0.5)));
    Real dp;
    for (int iter = 0; iter < 100; ++iter) {
      const Real p = legendre(x, dp);
      const Real dx = p / dp;
      x -= dx;
      if (abs(dx) <= Real(1e-15)) break;
    }
    const Real p = legendre(x, dp);
    x -= p / dp;
    legendre(x, dp);
    const Real w = Real(2) / ((1 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[order - 1 - i] = x;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = Real(0);
  return rule;
}

/// Order that integrates a degree-`deg` polynomial exactly, plus a margin of 2.
inline int default_quadrature_order(int deg) { return (deg + 2) / 2 + 2; }

/// Gauss-Legendre approximation of the line integral of f over the chord.
/// Exact for polynomial integrands of total degree <= 2*order - 1.
template <class Real, class F>
Real project_quadrature(F&& f, const BasicChord<Real>& chord, int order) {
  using std::cos;
  using std::sin;
  const auto rule = gauss_legendre<Real>(order);
  const Real h = chord.half_length();
  const Real c = cos(chord.theta.radians());
  const Real s = sin(chord.theta.radians());
  Real sum(0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const Real u = h * rule.nodes[i];
    sum += rule.weights[i] * f(chord.t * c - u * s, chord.t * s + u * c);
  }
  return h * sum;
}

/// (1/pi) * integral over the disk of U_k(theta; x) U_k(phi; x), by a product rule:
/// Gauss-Legendre with `order` points in u = r^2 and 2*order+1 equispaced
/// angles. Exact for degree 2k when order >= k+1; the closed form is
/// U_k(cos(phi - theta)) / (k+1).
template <class Real>
Real disk_orthogonality_oracle(int k, const BasicAngle<Real>& theta, const BasicAngle<Real>& phi,
                               int order) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  if (order < k + 1)
    throw std::invalid_argument("disk_orthogonality_oracle: order must be >= k+1");
  const auto rule = gauss_legendre<Real>(order);
  const int n_angle = 2 * order + 1;
  const Real ct = cos(theta.radians()), st = sin(theta.radians());
  const Real cp = cos(phi.radians()), sp = sin(phi.radians());
  Real total(0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const Real u = (rule.nodes[i] + 1) / 2;  // u = r^2 on [0, 1]
    const Real r = sqrt(u);
    Real ring(0);
    for (int a = 0; a < n_angle; ++a) {
      const Real alpha = 2 * pi<Real>() * Real(a) / Real(n_angle);
      const Real x = r * cos(alpha), y = r * sin(alpha);
      ring += eval_u(k, Real(x * ct + y * st)) * eval_u(k, Real(x * cp + y * sp));
    }
    // dx = r dr dalpha = (1/2) du dalpha, du = dnode/2
    total += rule.weights[i] / 2 * (ring * 2 * pi<Real>() / Real(n_angle)) / 2;
  }
  return total / pi<Real>();
}

}  // namespace radon
