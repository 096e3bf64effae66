#include "radon/random.hpp"

#include <cmath>
#include <random>

namespace radon {

RidgeRepresentation<double> random_representation(int degree, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  RidgeRepresentation<double> rep(degree);
  for (double& c : rep.coefficients()) {
    const double u = std::ldexp(static_cast<double>(gen() >> 11), -53);
    c = 2.0 * u - 1.0;
  }
  return rep;
}

}  // namespace radon
