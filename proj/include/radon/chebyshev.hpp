#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "radon/numeric.hpp"

namespace radon {

inline constexpr double kAngleTolerance = 1e-12;

/// An angle in radians, reduced modulo 2*pi into [0, 2*pi).
template <class Real>
class BasicAngle {
 public:
  BasicAngle() = default;
  explicit BasicAngle(const Real& radians) : value_(reduce(radians)) {}

  const Real& radians() const { return value_; }

  /// Circular distance below `tol`.
  bool approx_equal(const BasicAngle& other, double tol = kAngleTolerance) const {
    using std::abs;
    const Real two_pi = 2 * pi<Real>();
    Real d = abs(value_ - other.value_);
    if (d > pi<Real>()) d = two_pi - d;
    return d < Real(tol);
  }

 private:
  static Real reduce(Real r) {
    using std::fmod;
    const Real two_pi = 2 * pi<Real>();
    r = fmod(r, two_pi);
    if (r < 0) r += two_pi;
    if (r >= two_pi) r -= two_pi;
    return r;
  }

  Real value_{0};
};

using Angle = BasicAngle<double>;

template <class Real>
struct BasicDiskPoint {
  Real x{0};
  Real y{0};

  bool in_disk() const { return x * x + y * y <= Real(1 + 1e-12); }
};

using DiskPoint = BasicDiskPoint<double>;

/// Chebyshev polynomial of the second kind U_k(t) by the three-term recurrence.
/// Valid for any real t (polynomial extension outside [-1, 1]).
template <class Real>
Real eval_u(int k, const Real& t) {
  if (k < 0) throw std::invalid_argument("eval_u: negative degree");
  if (k == 0) return Real(1);
  Real prev(1);
  Real cur = 2 * t;
  for (int i = 1; i < k; ++i) {
    Real next = 2 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// U_0(t), ..., U_kmax(t).
template <class Real>
std::vector<Real> eval_u_all(int kmax, const Real& t) {
  if (kmax < 0) throw std::invalid_argument("eval_u_all: negative degree");
  std::vector<Real> out(static_cast<std::size_t>(kmax) + 1);
  out[0] = Real(1);
  if (kmax >= 1) out[1] = 2 * t;
  for (int i = 2; i <= kmax; ++i) out[i] = 2 * t * out[i - 1] - out[i - 2];
  return out;
}

/// Zeros cos(j*pi/(k+1)), j = 1..k, strictly decreasing.
template <class Real = double>
std::vector<Real> u_zeros(int k) {
  using std::cos;
  if (k < 1) throw std::invalid_argument("u_zeros: k must be >= 1");
  std::vector<Real> z;
  z.reserve(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) z.push_back(cos(Real(j) * pi<Real>() / Real(k + 1)));
  return z;
}

/// Ridge polynomial U_k(x cos(theta) + y sin(theta)).
template <class Real>
Real eval_ridge(int k, const BasicAngle<Real>& theta, const BasicDiskPoint<Real>& p) {
  using std::cos;
  using std::sin;
  const Real& th = theta.radians();
  return eval_u(k, p.x * cos(th) + p.y * sin(th));
}

}  // namespace radon
