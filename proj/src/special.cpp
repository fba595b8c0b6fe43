#include "nlslab/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "nlslab/errors.hpp"

namespace nlslab {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

void check_beta_args(const BetaArgs& a) {
  if (!(a.x > 0.0) || !(a.y > 0.0) || !std::isfinite(a.x) || !std::isfinite(a.y)) {
    throw DomainError("Beta arguments must be positive (got x = " + std::to_string(a.x) +
                      ", y = " + std::to_string(a.y) + ")");
  }
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log_gamma requires x > 0");
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x).
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double series = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

double beta(BetaArgs args) {
  check_beta_args(args);
  return std::exp(log_gamma(args.x) + log_gamma(args.y) - log_gamma(args.x + args.y));
}

double h_function(BetaArgs args) {
  check_beta_args(args);
  const double x = args.x, y = args.y;
  return -(2.0 * x - 1.0) * beta({x, 0.5}) + (2.0 * x + 2.0 * y - 1.0) * beta({x + y, 0.5});
}

double log_of_complement(double s, double c) {
  return s < 0.5 ? std::log(s) : std::log1p(-c);
}

double one_minus_pow(double s, double c, double r) {
  return -std::expm1(r * log_of_complement(s, c));
}

}  // namespace nlslab
