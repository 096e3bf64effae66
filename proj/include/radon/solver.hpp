#pragma once

// Small dense linear algebra: LU with partial pivoting, solve, determinant and
// 1-norm condition numbers. Every system in the reconstruction is at most
// (m+1) x (m+1), so nothing here is blocked or vectorised.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "radon/numeric.hpp"

namespace radon {

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Real>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Real(0)) {
    if (dim == 0) throw std::invalid_argument("DenseMatrix: dimension must be positive");
  }

  static DenseMatrix identity(std::size_t dim) {
    DenseMatrix a(dim);
    for (std::size_t i = 0; i < dim; ++i) a(i, i) = Real(1);
    return a;
  }

  std::size_t dim() const { return dim_; }

  Real& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Real& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<const Real> row(std::size_t r) const {
    return std::span<const Real>(data_).subspan(r * dim_, dim_);
  }
  std::span<const Real> values() const { return data_; }

  DenseMatrix transposed() const {
    DenseMatrix t(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Max absolute column sum.
  Real norm_1() const {
    using std::abs;
    Real best(0);
    for (std::size_t c = 0; c < dim_; ++c) {
      Real s(0);
      for (std::size_t r = 0; r < dim_; ++r) s += abs((*this)(r, c));
      best = std::max(best, s);
    }
    return best;
  }

  /// Max absolute row sum.
  Real norm_inf() const { return transposed().norm_1(); }

  Real max_abs() const {
    using std::abs;
    Real best(0);
    for (const Real& v : data_) best = std::max(best, Real(abs(v)));
    return best;
  }

  std::vector<Real> multiply(std::span<const Real> x) const {
    if (x.size() != dim_) throw std::invalid_argument("DenseMatrix::multiply: size mismatch");
    std::vector<Real> y(dim_, Real(0));
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) y[r] += (*this)(r, c) * x[c];
    return y;
  }

  bool all_finite() const {
    using std::isfinite;
    return std::all_of(data_.begin(), data_.end(), [](const Real& v) { return isfinite(v); });
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Real> data_;
};

/// Relative pivot threshold: 1e-14 for double, scaled by epsilon for wider types.
template <class Real>
Real singular_pivot_tolerance() {
  return scaled_tolerance<Real>(1e-14);
}

/// PA = LU with partial pivoting. Immutable once built.
template <class Real>
class LuFactorization {
 public:
  explicit LuFactorization(DenseMatrix<Real> a) : lu_(std::move(a)), perm_(lu_.dim()) {
    using std::abs;
    const std::size_t n = lu_.dim();
    const Real scale = lu_.max_abs();
    const Real threshold = singular_pivot_tolerance<Real>() * scale;
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    min_pivot_ = std::numeric_limits<Real>::infinity();

    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      for (std::size_t r = k + 1; r < n; ++r)
        if (abs(lu_(r, k)) > abs(lu_(p, k))) p = r;
      if (p != k) {
        for (std::size_t c = 0; c < n; ++c) std::swap(lu_(k, c), lu_(p, c));
        std::swap(perm_[k], perm_[p]);
        sign_ = -sign_;
        ++swaps_;
      }
      const Real pivot = lu_(k, k);
      min_pivot_ = std::min(min_pivot_, Real(abs(pivot)));
      if (!(abs(pivot) > threshold)) singular_ = true;
      if (pivot == 0) continue;
      for (std::size_t r = k + 1; r < n; ++r) {
        const Real f = lu_(r, k) / pivot;
        lu_(r, k) = f;
        for (std::size_t c = k + 1; c < n; ++c) lu_(r, c) -= f * lu_(k, c);
      }
    }
  }

  std::size_t dim() const { return lu_.dim(); }
  bool singular() const { return singular_; }
  const Real& min_pivot() const { return min_pivot_; }
  int row_swaps() const { return swaps_; }
  std::span<const std::size_t> permutation() const { return perm_; }

  /// Product of the pivots with the permutation sign. Defined even when
  /// singular() is set, in which case it is tiny or zero.
  Real determinant() const {
    Real d(sign_);
    for (std::size_t i = 0; i < lu_.dim(); ++i) d *= lu_(i, i);
    return d;
  }

  std::vector<Real> solve(std::span<const Real> b) const {
    const std::size_t n = lu_.dim();
    if (singular_) throw SingularMatrixError("solve: matrix is numerically singular");
    if (b.size() != n) throw std::invalid_argument("solve: right-hand side size mismatch");
    std::vector<Real> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      Real s = b[perm_[i]];
      for (std::size_t c = 0; c < i; ++c) s -= lu_(i, c) * x[c];
      x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      Real s = x[i];
      for (std::size_t c = i + 1; c < n; ++c) s -= lu_(i, c) * x[c];
      x[i] = s / lu_(i, i);
    }
    return x;
  }

  DenseMatrix<Real> inverse() const {
    const std::size_t n = lu_.dim();
    DenseMatrix<Real> inv(n);
    std::vector<Real> e(n, Real(0));
    for (std::size_t c = 0; c < n; ++c) {
      std::fill(e.begin(), e.end(), Real(0));
      e[c] = Real(1);
      const auto col = solve(e);
      for (std::size_t r = 0; r < n; ++r) inv(r, c) = col[r];
    }
    return inv;
  }

 private:
  DenseMatrix<Real> lu_;
  std::vector<std::size_t> perm_;
  Real min_pivot_{0};
  int sign_ = 1;
  int swaps_ = 0;
  bool singular_ = false;
};

template <class Real>
LuFactorization<Real> lu_factor(DenseMatrix<Real> a) {
  return LuFactorization<Real>(std::move(a));
}

template <class Real>
std::vector<Real> solve(const LuFactorization<Real>& fact, std::span<const Real> b) {
  return fact.solve(b);
}

template <class Real>
Real determinant(const LuFactorization<Real>& fact) {
  return fact.determinant();
}

inline constexpr std::size_t kMaxConditionDim = 64;

/// ||A||_1 * ||A^-1||_1 via the explicit inverse; +inf when A is numerically singular.
template <class Real>
Real condition_1norm(const DenseMatrix<Real>& a) {
  if (a.dim() > kMaxConditionDim)
    throw std::invalid_argument("condition_1norm: dimension exceeds " +
                                std::to_string(kMaxConditionDim));
  const auto fact = lu_factor(a);
  if (fact.singular()) return std::numeric_limits<Real>::infinity();
  return a.norm_1() * fact.inverse().norm_1();
}

}  // namespace radon
