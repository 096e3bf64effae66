#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "radon/numeric.hpp"
#include "radon/projection.hpp"
#include "radon/random.hpp"

using namespace radon;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("marr_projection examples") {
  for (double t : {-0.9, -0.2, 0.0, 0.55}) {
    CHECK(marr_projection(0, Angle(0.3), Angle(2.0), t) == Approx(2 * std::sqrt(1 - t * t)));
  }
  CHECK(marr_projection(1, Angle(0.0), Angle(0.0), 0.0) == 0.0);
  CHECK(marr_projection(2, Angle(0.0), Angle(kPi / 2), 0.0) == Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(marr_projection(2, Angle(0.0), Angle(0.0), 1.0), std::domain_error);
  CHECK_THROWS_AS(marr_projection(2, Angle(0.0), Angle(0.0), -1.5), std::domain_error);
}

TEST_CASE("U_2 ridge integrated along the chord through the origin at phi = pi/2") {
  // the chord is the segment y = 0, so the integral is int_{-1}^{1} 4x^2 - 1 dx
  const auto f = [](double x, double) { return eval_u(2, x); };
  CHECK(project_quadrature(f, Chord(Angle(kPi / 2), 0.0), 4) == Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("project_ridge_poly examples") {
  RidgeRepresentation<double> one(0);
  one.c(0, 0) = 1.0;
  for (double t : {-0.3, 0.0, 0.8})
    CHECK(project_ridge_poly(one, Angle(1.7), t) == Approx(2 * std::sqrt(1 - t * t)));

  RidgeRepresentation<double> lin(1);
  lin.c(0, 1) = 1.0;
  CHECK(project_ridge_poly(lin, Angle(0.0), 0.5) == Approx(2 * std::sqrt(0.75)).epsilon(1e-14));
  CHECK(project_ridge_poly(lin, Angle(0.0), 0.5) == Approx(1.7320508075688772));
  const auto f = [](double x, double) { return 2 * x; };
  CHECK(project_quadrature(f, Chord(Angle(0.0), 0.5), 3) == Approx(2 * std::sqrt(0.75)));
  CHECK_THROWS_AS(project_ridge_poly(one, Angle(0.0), 1.0), std::domain_error);
}

TEST_CASE("project_ridge_poly matches quadrature of eval_poly") {
  std::mt19937_64 gen(19);
  double worst = 0.0;
  for (int n = 0; n <= 6; ++n) {
    const auto rep = random_representation(n, 300 + n);
    const auto f = [&](double x, double y) { return eval_poly(rep, DiskPoint{x, y}); };
    for (int i = 0; i < 50; ++i) {
      const double phi = oracle::uniform(gen, 0.0, 2 * kPi);
      const double t = oracle::uniform(gen, -0.99, 0.99);
      const double q = project_quadrature(f, Chord(Angle(phi), t), default_quadrature_order(n));
      worst = std::max(worst, std::abs(q - project_ridge_poly(rep, Angle(phi), t)));
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("project_quadrature examples") {
  const auto one = [](double, double) { return 1.0; };
  for (int order = 1; order <= 6; ++order)
    CHECK(project_quadrature(one, Chord(Angle(0.4), 0.6), order) == Approx(1.6));
  const auto x = [](double x, double) { return x; };
  for (int order = 1; order <= 4; ++order)
    CHECK(project_quadrature(x, Chord(Angle(0.0), 0.3), order) ==
          Approx(0.57236352085016736831).epsilon(1e-14));
}

TEST_CASE("U_3 ridge at pi/7 is integrated exactly") {
  std::mt19937_64 gen(4);
  const Angle theta(kPi / 7);
  const auto f = [&](double x, double y) { return eval_ridge(3, theta, DiskPoint{x, y}); };
  for (int i = 0; i < 10; ++i) {
    const Angle phi(oracle::uniform(gen, 0.0, 2 * kPi));
    const double t = oracle::uniform(gen, -0.95, 0.95);
    CHECK(std::abs(project_quadrature(f, Chord(phi, t), 8) - marr_projection(3, theta, phi, t)) <=
          1e-12);
  }
}

TEST_CASE("Marr's formula against chord quadrature up to degree 20") {
  std::mt19937_64 gen(1);
  double worst = 0.0;
  for (int k = 0; k <= 20; ++k)
    for (int i = 0; i < 50; ++i) {
      const Angle theta(oracle::uniform(gen, 0.0, 2 * kPi));
      const Angle phi(oracle::uniform(gen, 0.0, 2 * kPi));
      const double t = oracle::uniform(gen, -0.99, 0.99);
      const auto f = [&](double x, double y) { return eval_ridge(k, theta, DiskPoint{x, y}); };
      const double q = project_quadrature(f, Chord(phi, t), k + 2);
      worst = std::max(worst, std::abs(q - marr_projection(k, theta, phi, t)));
    }
  CHECK(worst <= 1e-9);
}

TEST_CASE("reflection identity R_theta(t) = R_{theta+pi}(-t)") {
  std::mt19937_64 gen(23);
  const auto rep = random_representation(7, 5);
  for (int i = 0; i < 30; ++i) {
    const double phi = oracle::uniform(gen, 0.0, 2 * kPi);
    const double t = oracle::uniform(gen, -0.99, 0.99);
    const int k = i % 12;
    const Angle theta(oracle::uniform(gen, 0.0, 2 * kPi));
    CHECK(std::abs(marr_projection(k, theta, Angle(phi), t) -
                   marr_projection(k, theta, Angle(phi + kPi), -t)) <= 1e-13);
    CHECK(std::abs(project_ridge_poly(rep, Angle(phi), t) -
                   project_ridge_poly(rep, Angle(phi + kPi), -t)) <= 1e-13);
  }
}

TEST_CASE("projection is linear") {
  std::mt19937_64 gen(29);
  const auto a = random_representation(5, 10);
  const auto b = random_representation(5, 11);
  const auto s = a + (-0.75) * b;
  for (int i = 0; i < 20; ++i) {
    const Angle phi(oracle::uniform(gen, 0.0, 2 * kPi));
    const double t = oracle::uniform(gen, -0.99, 0.99);
    CHECK(std::abs(project_ridge_poly(s, phi, t) -
                   (project_ridge_poly(a, phi, t) - 0.75 * project_ridge_poly(b, phi, t))) <= 1e-12);
  }
}

TEST_CASE("Gauss-Legendre rule") {
  for (int order = 1; order <= 30; ++order) {
    const auto rule = gauss_legendre(order);
    double w = 0.0;
    for (double v : rule.weights) w += v;
    CHECK(w == Approx(2.0).epsilon(1e-13));
    // exact for x^(2 order - 2)
    const int p = 2 * order - 2;
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], p);
    CHECK(s == Approx(2.0 / (p + 1)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
  CHECK(default_quadrature_order(0) == 3);
  CHECK(default_quadrature_order(5) == 5);
  CHECK(default_quadrature_order(6) == 6);
}

TEST_CASE("Chord rejects boundary lines") {
  CHECK_THROWS_AS(Chord(Angle(0.0), 1.0), std::domain_error);
  CHECK_THROWS_AS(Chord(Angle(0.0), -1.0), std::domain_error);
  CHECK(Chord(Angle(0.0), 0.6).half_length() == Approx(0.8));
}

TEST_CASE("disk orthogonality oracle") {
  CHECK(disk_orthogonality_oracle(0, Angle(0.2), Angle(1.9), 1) == Approx(1.0).epsilon(1e-14));
  CHECK(disk_orthogonality_oracle(3, Angle(0.4), Angle(1.3), 4) ==
        Approx(-0.14123108687319836868).epsilon(1e-12));
  CHECK(disk_orthogonality_oracle(3, Angle(0.4), Angle(1.3), 4) ==
        Approx(eval_u(3, std::cos(0.9)) / 4).epsilon(1e-12));
  for (int k = 1; k <= 8; ++k)
    CHECK(std::abs(disk_orthogonality_oracle(k, Angle(0.5), Angle(0.5 + kPi / (k + 1)), k + 1)) <= 1e-9);
  CHECK_THROWS_AS(disk_orthogonality_oracle(4, Angle(0.0), Angle(0.0), 4), std::invalid_argument);
}

TEST_CASE("disk orthogonality matches U_k(cos(phi - theta)) / (k+1)") {
  std::mt19937_64 gen(31);
  double worst = 0.0;
  for (int k = 0; k <= 15; ++k)
    for (int i = 0; i < 20; ++i) {
      const double th = oracle::uniform(gen, 0.0, 2 * kPi);
      const double ph = oracle::uniform(gen, 0.0, 2 * kPi);
      const double q = disk_orthogonality_oracle(k, Angle(th), Angle(ph), k + 1);
      worst = std::max(worst, std::abs(q - eval_u(k, std::cos(ph - th)) / (k + 1)));
    }
  CHECK(worst <= 1e-9);
}

TEST_CASE("Marr's formula in extended precision") {
  using R = HighPrecision;
  const BasicAngle<R> theta(R(1) / 3), phi(R(2));
  const R t = R(3) / 10;
  const auto f = [&](const R& x, const R& y) { return eval_ridge(9, theta, BasicDiskPoint<R>{x, y}); };
  const R q = project_quadrature(f, BasicChord<R>(phi, t), 11);
  CHECK(abs(q - marr_projection(9, theta, phi, t)) < R(1e-40));
}
