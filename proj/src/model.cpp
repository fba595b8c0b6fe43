#include "nlslab/model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "nlslab/errors.hpp"

namespace nlslab {

const char* to_string(SignCase c) {
  switch (c) {
    case SignCase::focusing_focusing: return "focusing-focusing";
    case SignCase::focusing_defocusing: return "focusing-defocusing";
    case SignCase::defocusing_focusing: return "defocusing-focusing";
    case SignCase::defocusing_defocusing: return "defocusing-defocusing";
  }
  return "unknown";
}

ModelParams::ModelParams(double a_p, double a_q, double p, double q)
    : a_p_(a_p), a_q_(a_q), p_(p), q_(q) {
  if (!std::isfinite(a_p) || !std::isfinite(a_q) || !std::isfinite(p) || !std::isfinite(q)) {
    throw DomainError("model parameters must be finite");
  }
  if (a_p == 0.0 || a_q == 0.0) throw DomainError("a_p and a_q must be nonzero");
  if (!(p > 1.0)) throw DomainError("exponent p must satisfy p > 1");
  if (!(q > p)) throw DomainError("exponents must satisfy p < q");
}

SignCase ModelParams::sign_case() const noexcept {
  if (a_p_ > 0) return a_q_ > 0 ? SignCase::focusing_focusing : SignCase::focusing_defocusing;
  return a_q_ > 0 ? SignCase::defocusing_focusing : SignCase::defocusing_defocusing;
}

void ModelParams::require_standing_waves() const {
  if (!has_standing_waves()) throw NoStandingWaves();
}

namespace {

// (ratio)^{1/(q-p)} evaluated through logarithms; exponent may be large when q-p is small.
double root_q_minus_p(double ratio, const ModelParams& m) {
  return std::exp(std::log(ratio) / (m.q() - m.p()));
}

double domega_dphi0(const ModelParams& m, double phi0) {
  const double p = m.p(), q = m.q();
  return 2.0 * m.a_p() * (p - 1.0) / (p + 1.0) * std::pow(phi0, p - 2.0) +
         2.0 * m.a_q() * (q - 1.0) / (q + 1.0) * std::pow(phi0, q - 2.0);
}

double omega_unchecked(const ModelParams& m, double phi0) {
  const double p = m.p(), q = m.q();
  return 2.0 * m.a_p() / (p + 1.0) * std::pow(phi0, p - 1.0) +
         2.0 * m.a_q() / (q + 1.0) * std::pow(phi0, q - 1.0);
}

}  // namespace

FrequencyWindow frequency_window(const ModelParams& model) {
  model.require_standing_waves();
  const double a_p = model.a_p(), a_q = model.a_q(), p = model.p(), q = model.q();

  double phi_lower = 0.0;
  if (a_p < 0) phi_lower = root_q_minus_p(-(a_p / a_q) * (q + 1.0) / (p + 1.0), model);

  if (a_q > 0) return {Extent::unbounded(), phi_lower, Extent::unbounded()};

  const double phi_upper =
      root_q_minus_p(-(a_p / a_q) * (p - 1.0) / (q - 1.0) * (q + 1.0) / (p + 1.0), model);
  return {Extent::finite(omega_unchecked(model, phi_upper)), phi_lower, Extent::finite(phi_upper)};
}

double omega_from_phi0(const ModelParams& model, double phi0) {
  const FrequencyWindow w = frequency_window(model);
  if (!(phi0 >= w.phi_lower) || (w.phi_upper.is_finite() && phi0 > w.phi_upper.value()) ||
      !std::isfinite(phi0)) {
    throw DomainError("phi0 = " + std::to_string(phi0) + " outside the admissible window");
  }
  return omega_unchecked(model, phi0);
}

double phi0_from_omega(const ModelParams& model, double omega) {
  const FrequencyWindow w = frequency_window(model);
  if (!(omega > 0.0) || !w.omega_star.exceeds(omega) || !std::isfinite(omega)) {
    throw DomainError("omega = " + std::to_string(omega) + " outside the admissible window");
  }

  double lo = w.phi_lower;
  double hi;
  if (w.phi_upper.is_finite()) {
    hi = w.phi_upper.value();
  } else {
    hi = std::max(2.0 * lo, 1.0);
    while (omega_unchecked(model, hi) < omega) {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi)) throw NumericError("phi0_from_omega: bracket overflow");
    }
  }

  // Starting guess: leading-order power law when the lower power dominates.
  double x = 0.5 * (lo + hi);
  if (model.a_p() > 0 && lo == 0.0) {
    const double guess =
        std::pow(omega * (model.p() + 1.0) / (2.0 * model.a_p()), 1.0 / (model.p() - 1.0));
    if (guess > lo && guess < hi) x = guess;
  }

  // Safeguarded Newton: g(phi) = omega(phi) - omega is increasing on the bracket.
  for (int iter = 0; iter < 1000; ++iter) {
    const double g = omega_unchecked(model, x) - omega;
    if (g == 0.0) return x;
    if (g > 0) hi = x; else lo = x;
    if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * hi) break;

    const double dg = domega_dphi0(model, x);
    double next = x - g / dg;
    if (!(dg > 0.0) || !(next > lo && next < hi)) {
      next = (lo > 0.0 && hi / lo > 4.0) ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    }
    if (std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * x) {
      x = next;
      break;
    }
    x = next;
  }

  const double residual = std::abs(omega_unchecked(model, x) - omega);
  if (!(residual <= 1e-12 * std::max(1.0, omega))) {
    throw NumericError("phi0_from_omega did not converge for omega = " + std::to_string(omega));
  }
  return x;
}

double dphi0_domega(const ModelParams& model, double phi0) {
  const FrequencyWindow w = frequency_window(model);
  if (!(phi0 >= w.phi_lower) || !w.phi_upper.exceeds(phi0) || !(phi0 > 0.0)) {
    if (w.phi_upper.is_finite() && phi0 == w.phi_upper.value()) {
      throw DomainError("dphi0_domega has a pole at phi0 = phi_upper");
    }
    throw DomainError("phi0 = " + std::to_string(phi0) + " outside the admissible window");
  }
  const double d = domega_dphi0(model, phi0);
  if (!(d > 0.0)) throw DomainError("dphi0_domega has a pole at phi0 = " + std::to_string(phi0));
  return 1.0 / d;
}

WavePoint wave_point(const ModelParams& model, double omega) {
  return {omega, phi0_from_omega(model, omega)};
}

double omega_scale(const ModelParams& model) {
  const FrequencyWindow w = frequency_window(model);
  if (model.a_p() < 0) return std::abs(model.a_p()) * std::pow(w.phi_lower, model.p() - 1.0);
  if (w.omega_star.is_finite()) return w.omega_star.value();
  return 1.0;
}

}  // namespace nlslab
