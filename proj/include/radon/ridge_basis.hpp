#pragma once

// Polynomials of total degree n stored in the ridge Chebyshev basis
//
//   P(x) = sum_{k=0}^{n} sum_{j=0}^{k} c_{j,k} U_k(theta_{j,k}; x),  theta_{j,k} = j*pi/(k+1),
//
// and the equivalent angular Fourier profile of their normalised Radon
// projections R_phi(P; t) / sqrt(1 - t^2):
//
//   sum_l U_{2l}(t) [a_{0,2l} + 2 sum_{j=1}^{l} (a_{j,2l} cos 2j phi + b_{j,2l} sin 2j phi)]
//   + sum_l U_{2l-1}(t) [2 sum_{j=1}^{l} (a_{j,2l-1} cos (2j-1) phi + b_{j,2l-1} sin (2j-1) phi)].
//
// Both layouts hold exactly (n+1)(n+2)/2 reals: degree block k occupies
// slots [k(k+1)/2, k(k+1)/2 + k].

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "radon/chebyshev.hpp"
#include "radon/numeric.hpp"

namespace radon {

inline std::size_t ridge_dimension(int degree) {
  if (degree < 0) throw std::invalid_argument("ridge_dimension: negative degree");
  const auto n = static_cast<std::size_t>(degree);
  return (n + 1) * (n + 2) / 2;
}

inline std::size_t block_offset(int k) {
  const auto kk = static_cast<std::size_t>(k);
  return kk * (kk + 1) / 2;
}

/// theta_{j,k} = j*pi/(k+1).
template <class Real>
Real ridge_angle(int j, int k) {
  return Real(j) * pi<Real>() / Real(k + 1);
}

template <class Real>
class RidgeRepresentation {
 public:
  explicit RidgeRepresentation(int degree = 0)
      : degree_(degree), coeffs_(ridge_dimension(degree), Real(0)) {}

  int degree() const { return degree_; }
  std::size_t size() const { return coeffs_.size(); }

  static bool valid_index(int j, int k, int degree) {
    return k >= 0 && k <= degree && j >= 0 && j <= k;
  }

  Real& c(int j, int k) { return coeffs_[index(j, k)]; }
  const Real& c(int j, int k) const { return coeffs_[index(j, k)]; }

  std::span<Real> coefficients() { return coeffs_; }
  std::span<const Real> coefficients() const { return coeffs_; }

  bool all_finite() const {
    using std::isfinite;
    for (const Real& v : coeffs_)
      if (!isfinite(v)) return false;
    return true;
  }

 private:
  std::size_t index(int j, int k) const {
    if (!valid_index(j, k, degree_))
      throw std::out_of_range("RidgeRepresentation: (j,k) = (" + std::to_string(j) + "," +
                              std::to_string(k) + ") outside degree " +
                              std::to_string(degree_));
    return block_offset(k) + static_cast<std::size_t>(j);
  }

  int degree_;
  std::vector<Real> coeffs_;
};

template <class To, class From>
RidgeRepresentation<To> convert(const RidgeRepresentation<From>& rep) {
  RidgeRepresentation<To> out(rep.degree());
  auto src = rep.coefficients();
  auto dst = out.coefficients();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = To(src[i]);
  return out;
}

template <class Real>
RidgeRepresentation<Real> operator+(const RidgeRepresentation<Real>& a,
                                    const RidgeRepresentation<Real>& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("operator+: degree mismatch");
  RidgeRepresentation<Real> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i)
    out.coefficients()[i] = a.coefficients()[i] + b.coefficients()[i];
  return out;
}

template <class Real>
RidgeRepresentation<Real> operator*(const Real& s, const RidgeRepresentation<Real>& a) {
  RidgeRepresentation<Real> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out.coefficients()[i] = s * a.coefficients()[i];
  return out;
}

/// Largest |a_i - b_i|; the degrees must agree.
template <class Real>
Real max_abs_difference(const RidgeRepresentation<Real>& a, const RidgeRepresentation<Real>& b) {
  using std::abs;
  if (a.degree() != b.degree()) throw std::invalid_argument("max_abs_difference: degree mismatch");
  Real best(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Real d = abs(a.coefficients()[i] - b.coefficients()[i]);
    if (d > best) best = d;
  }
  return best;
}

template <class Real>
Real eval_poly(const RidgeRepresentation<Real>& rep, const BasicDiskPoint<Real>& p) {
  using std::cos;
  using std::sin;
  Real sum(0);
  for (int k = 0; k <= rep.degree(); ++k) {
    for (int j = 0; j <= k; ++j) {
      const Real& cjk = rep.c(j, k);
      if (cjk == 0) continue;
      const Real th = ridge_angle<Real>(j, k);
      sum += cjk * eval_u(k, p.x * cos(th) + p.y * sin(th));
    }
  }
  return sum;
}

/// Angular Fourier coefficients a_{j,k}, b_{j,k}.
///
/// Even k = 2l: a_{0,k}, and (a_{j,k}, b_{j,k}) for 1 <= j <= l.
/// Odd  k = 2l-1: (a_{j,k}, b_{j,k}) for 1 <= j <= l.
template <class Real>
class FourierProfile {
 public:
  explicit FourierProfile(int degree = 0)
      : degree_(degree), values_(ridge_dimension(degree), Real(0)) {}

  int degree() const { return degree_; }
  std::size_t size() const { return values_.size(); }

  /// Largest harmonic index j carried by degree block k.
  static int max_harmonic(int k) { return (k % 2 == 0) ? k / 2 : (k + 1) / 2; }

  static bool has_a(int j, int k, int degree) {
    if (k < 0 || k > degree) return false;
    const int lo = (k % 2 == 0) ? 0 : 1;
    return j >= lo && j <= max_harmonic(k);
  }
  static bool has_b(int j, int k, int degree) {
    return k >= 0 && k <= degree && j >= 1 && j <= max_harmonic(k);
  }

  Real& a(int j, int k) { return values_[a_index(j, k)]; }
  const Real& a(int j, int k) const { return values_[a_index(j, k)]; }
  Real& b(int j, int k) { return values_[b_index(j, k)]; }
  const Real& b(int j, int k) const { return values_[b_index(j, k)]; }

  std::span<Real> values() { return values_; }
  std::span<const Real> values() const { return values_; }

 private:
  std::size_t a_index(int j, int k) const {
    if (!has_a(j, k, degree_)) throw std::out_of_range(bad("a", j, k));
    const int slot = (k % 2 == 0) ? (j == 0 ? 0 : 2 * j - 1) : 2 * (j - 1);
    return block_offset(k) + static_cast<std::size_t>(slot);
  }
  std::size_t b_index(int j, int k) const {
    if (!has_b(j, k, degree_)) throw std::out_of_range(bad("b", j, k));
    const int slot = (k % 2 == 0) ? 2 * j : 2 * j - 1;
    return block_offset(k) + static_cast<std::size_t>(slot);
  }
  std::string bad(const char* which, int j, int k) const {
    return std::string("FourierProfile: ") + which + "(" + std::to_string(j) + "," +
           std::to_string(k) + ") outside degree " + std::to_string(degree_);
  }

  int degree_;
  std::vector<Real> values_;
};

/// c_{j,k} -> (a, b). For fixed k this is an orthogonal transform up to scaling:
///   a_{j,2l} = 2/(2l+1) sum_i c_{i,2l} cos(2j theta_{i,2l})      (j = 0 included)
///   a_{j,2l-1} = 1/l sum_i c_{i,2l-1} cos((2j-1) theta_{i,2l-1})
/// and likewise for b with sin.
template <class Real>
FourierProfile<Real> coefficients_to_profile(const RidgeRepresentation<Real>& rep) {
  using std::cos;
  using std::sin;
  const int n = rep.degree();
  FourierProfile<Real> prof(n);
  for (int k = 0; k <= n; ++k) {
    const bool even = (k % 2 == 0);
    const int l = FourierProfile<Real>::max_harmonic(k);
    const Real scale = even ? Real(2) / Real(k + 1) : Real(1) / Real(l);
    for (int j = even ? 0 : 1; j <= l; ++j) {
      const int freq = even ? 2 * j : 2 * j - 1;
      Real sa(0), sb(0);
      for (int i = 0; i <= k; ++i) {
        const Real ang = Real(freq) * ridge_angle<Real>(i, k);
        sa += rep.c(i, k) * cos(ang);
        sb += rep.c(i, k) * sin(ang);
      }
      prof.a(j, k) = scale * sa;
      if (j >= 1) prof.b(j, k) = scale * sb;
    }
  }
  return prof;
}

/// (a, b) -> c_{j,k}:
///   c_{j,2l}   = a_{0,2l}/2 + sum_{i=1}^{l} (a_{i,2l} cos 2i theta_{j,2l} + b_{i,2l} sin 2i theta_{j,2l})
///   c_{j,2l-1} = sum_{i=1}^{l} (a_{i,2l-1} cos (2i-1) theta_{j,2l-1} + b_{i,2l-1} sin (2i-1) theta_{j,2l-1})
template <class Real>
RidgeRepresentation<Real> profile_to_coefficients(const FourierProfile<Real>& prof) {
  using std::cos;
  using std::sin;
  const int n = prof.degree();
  RidgeRepresentation<Real> rep(n);
  for (int k = 0; k <= n; ++k) {
    const bool even = (k % 2 == 0);
    const int l = FourierProfile<Real>::max_harmonic(k);
    for (int j = 0; j <= k; ++j) {
      const Real th = ridge_angle<Real>(j, k);
      Real s = even ? prof.a(0, k) / 2 : Real(0);
      for (int i = 1; i <= l; ++i) {
        const int freq = even ? 2 * i : 2 * i - 1;
        s += prof.a(i, k) * cos(Real(freq) * th) + prof.b(i, k) * sin(Real(freq) * th);
      }
      rep.c(j, k) = s;
    }
  }
  return rep;
}

/// Radial profile A_h(t) of harmonic h (h = 0 gives A_0):
///   A_0    = sum_l a_{0,2l} U_{2l}
///   A_{2j} = 2 sum_{l>=j} a_{j,2l} U_{2l},  A_{2j-1} = 2 sum_{l>=j} a_{j,2l-1} U_{2l-1}.
/// Zero for h > degree.
template <class Real>
Real harmonic_a(const FourierProfile<Real>& prof, int h, const Real& t) {
  const int n = prof.degree();
  if (h > n) return Real(0);
  Real s(0);
  if (h == 0) {
    for (int k = 0; k <= n; k += 2) s += prof.a(0, k) * eval_u(k, t);
    return s;
  }
  const int j = (h + 1) / 2;
  for (int k = (h % 2 == 0) ? 2 * j : 2 * j - 1; k <= n; k += 2) s += prof.a(j, k) * eval_u(k, t);
  return 2 * s;
}

/// B_h(t), h >= 1; zero for h > degree.
template <class Real>
Real harmonic_b(const FourierProfile<Real>& prof, int h, const Real& t) {
  const int n = prof.degree();
  if (h < 1) throw std::invalid_argument("harmonic_b: h must be >= 1");
  if (h > n) return Real(0);
  const int j = (h + 1) / 2;
  Real s(0);
  for (int k = (h % 2 == 0) ? 2 * j : 2 * j - 1; k <= n; k += 2) s += prof.b(j, k) * eval_u(k, t);
  return 2 * s;
}

/// R_phi(P; t) / sqrt(1 - t^2) evaluated from the Fourier profile.
template <class Real>
Real profile_projection_normalized(const FourierProfile<Real>& prof, const Real& phi,
                                   const Real& t) {
  using std::cos;
  using std::sin;
  Real s = harmonic_a(prof, 0, t);
  for (int h = 1; h <= prof.degree(); ++h)
    s += harmonic_a(prof, h, t) * cos(Real(h) * phi) + harmonic_b(prof, h, t) * sin(Real(h) * phi);
  return s;
}

}  // namespace radon
