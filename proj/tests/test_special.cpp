#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "nlslab/errors.hpp"
#include "nlslab/quadrature.hpp"
#include "nlslab/special.hpp"
#include "nlslab/tridiagonal.hpp"
#include "support.hpp"

using namespace nlslab;

TEST_CASE("log gamma against the C library") {
  for (double x = 0.01; x < 60.0; x *= 1.07) {
    const double ref = std::lgamma(x);
    CHECK(std::abs(log_gamma(x) - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
  }
  CHECK(std::abs(log_gamma(1.0)) < 1e-14);
  CHECK(std::abs(log_gamma(2.0)) < 1e-14);
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("beta function") {
  CHECK(beta({0.5, 0.5}) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
  CHECK(beta({1.0, 3.0}) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(beta({2.0, 3.0}) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  for (double x = 0.1; x < 20; x *= 1.5) {
    for (double y = 0.1; y < 20; y *= 1.7) {
      CHECK(beta({x, y}) == doctest::Approx(beta({y, x})).epsilon(1e-14));
      const double ref = std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
      CHECK(beta({x, y}) == doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("H closed form against direct integration") {
  CHECK(std::abs(h_function({1.0, 1.0}) - 2.0) < 1e-12);
  for (double x : {0.2, 0.7, 1.0, 2.5, 5.0}) {
    for (double y : {0.2, 1.0, 3.3, 5.0}) {
      const double ref = testsupport::h_direct(x, y);
      CHECK(h_function({x, y}) == doctest::Approx(ref).epsilon(1e-10));
    }
  }
}

TEST_CASE("complement helpers keep precision near s = 1") {
  const double c = 1e-13, s = 1.0 - c;
  CHECK(log_of_complement(s, c) == doctest::Approx(std::log1p(-c)).epsilon(1e-14));
  CHECK(one_minus_pow(s, c, 2.5) == doctest::Approx(-std::expm1(2.5 * std::log1p(-c))).epsilon(1e-13));
  CHECK(one_minus_pow(0.25, 0.75, 2.0) == doctest::Approx(1.0 - 0.0625).epsilon(1e-15));
  CHECK(log_of_complement(0.25, 0.75) == doctest::Approx(std::log(0.25)).epsilon(1e-15));
}

TEST_CASE("tanh-sinh quadrature on endpoint singularities") {
  CHECK(integrate_01([](double s) { return s * s; }) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(integrate_01([](double s) { return 1.0 / std::sqrt(s); }) == doctest::Approx(2.0).epsilon(1e-11));
  CHECK(integrate_01([](double s) { return std::log(s); }) == doctest::Approx(-1.0).epsilon(1e-11));
  CHECK(integrate_01([](double s) { return std::pow(s, -0.9); }) == doctest::Approx(10.0).epsilon(1e-9));
  CHECK(integrate_01([](double, double c) { return 1.0 / std::sqrt(c); }) ==
        doctest::Approx(2.0).epsilon(1e-11));
  CHECK(integrate_01([](double s, double c) { return std::pow(s, -0.5) * std::pow(c, -0.75); }) ==
        doctest::Approx(beta({0.5, 0.25})).epsilon(1e-9));
}

TEST_CASE("quadrature reports failure on divergent integrals") {
  CHECK_THROWS_AS(integrate_01([](double s) { return 1.0 / s; }), AccuracyError);
  CHECK_THROWS_AS(integrate_01([](double) { return std::nan(""); }), NumericError);
}

TEST_CASE("complex Thomas solve against the product") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 50;
  using C = std::complex<double>;
  std::vector<C> lo(n), di(n), up(n), x(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = {u(rng), u(rng)};
    up[i] = {u(rng), u(rng)};
    di[i] = C{4.0 + u(rng), u(rng)};
    x[i] = {u(rng), u(rng)};
  }
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = di[i] * x[i];
    if (i > 0) b[i] += lo[i] * x[i - 1];
    if (i + 1 < n) b[i] += up[i] * x[i + 1];
  }
  solve_tridiagonal<C>(lo, di, up, b);
  for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(b[i] - x[i]) < 1e-13);

  std::vector<double> zl(2, 0.0), zd(2, 0.0), zu(2, 0.0), zr(2, 1.0);
  CHECK_THROWS_AS(solve_tridiagonal<double>(zl, zd, zu, zr), NumericError);
}
