#pragma once

#include <limits>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace radon {

/// 50 decimal digits, expression templates off so generic code can use `auto`.
using HighPrecision = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                                    boost::multiprecision::et_off>;

template <class Real>
inline Real pi() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
inline double to_double(const Real& x) {
  return static_cast<double>(x);
}

/// Scales a tolerance calibrated for double to the precision of Real.
template <class Real>
inline Real scaled_tolerance(double double_tol) {
  return Real(double_tol) *
         (std::numeric_limits<Real>::epsilon() / Real(std::numeric_limits<double>::epsilon()));
}

}  // namespace radon
