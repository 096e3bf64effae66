#pragma once

#include <cstdint>

#include "radon/ridge_basis.hpp"

namespace radon {

inline constexpr std::uint64_t kDefaultSeed = 20060101;

/// Coefficients uniform in [-1, 1) from std::mt19937_64, mapped through the top
/// 53 bits of each draw so the sequence is identical on every platform.
RidgeRepresentation<double> random_representation(int degree, std::uint64_t seed);

}  // namespace radon
