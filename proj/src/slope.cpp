#include "nlslab/slope.hpp"

#include <cmath>
#include <string>

#include "branch_terms.hpp"
#include "nlslab/errors.hpp"
#include "nlslab/special.hpp"

namespace nlslab {
namespace {

constexpr double kSevenThirds = 7.0 / 3.0;

bool same_exponent(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

// Below this fraction of omega_scale the defocusing-focusing slope integral is
// computed after the substitution t = s^{q-p}.
constexpr double kSmallOmegaFraction = 1e-3;

template <class G>
double integrate_branch(const ModelParams& model, const WavePoint& wave, G&& g,
                        const QuadratureConfig& cfg) {
  const bool substitute =
      model.a_p() < 0 && wave.omega < kSmallOmegaFraction * omega_scale(model);
  if (!substitute) return integrate_01(g, cfg);

  const double k = 1.0 / (model.q() - model.p());
  auto in_t = [&g, k](double t, double ct) {
    const double lt = log_of_complement(t, ct);
    const double s = std::exp(k * lt);
    const double c = -std::expm1(k * lt);
    return g(s, c) * k * std::exp((k - 1.0) * lt);
  };
  return integrate_01(in_t, cfg);
}

WavePoint wave_from_phi0(const ModelParams& model, double phi0) {
  return {omega_from_phi0(model, phi0), phi0};
}

double check_finite(double v, const char* what, double at) {
  if (!std::isfinite(v)) {
    throw NumericError(std::string(what) + " is not finite at phi0 = " + std::to_string(at));
  }
  return v;
}

}  // namespace

const char* to_string(LimitLabel label) {
  switch (label) {
    case LimitLabel::positive: return "positive";
    case LimitLabel::zero: return "zero";
    case LimitLabel::negative: return "negative";
    case LimitLabel::zero_plus: return "zero_plus";
    case LimitLabel::zero_minus: return "zero_minus";
    case LimitLabel::plus_infinity: return "plus_infinity";
    case LimitLabel::minus_infinity: return "minus_infinity";
    case LimitLabel::not_covered: return "not_covered";
  }
  return "unknown";
}

int sign_of(LimitLabel label) {
  switch (label) {
    case LimitLabel::positive:
    case LimitLabel::zero_plus:
    case LimitLabel::plus_infinity: return 1;
    case LimitLabel::negative:
    case LimitLabel::zero_minus:
    case LimitLabel::minus_infinity: return -1;
    default: return 0;
  }
}

IntegrandTerms integrand_terms(const ModelParams& model, double phi0, double s) {
  const detail::BranchTerms bt(model, wave_from_phi0(model, phi0));
  const auto v = bt.at(s, 1.0 - s);
  return {s, v.phi_p * bt.scale(), v.phi_q * bt.scale()};
}

double f_of_wave(const ModelParams& model, const WavePoint& wave, const QuadratureConfig& cfg) {
  const detail::BranchTerms bt(model, wave);
  const double wp = 5.0 - model.p(), wq = 5.0 - model.q();
  auto integrand = [&bt, wp, wq](double s, double c) {
    const auto v = bt.at(s, c);
    return (wp * (v.phi_p / v.sum) + wq * (v.phi_q / v.sum)) / std::sqrt(v.sum) * s;
  };
  const double f = integrate_branch(model, wave, integrand, cfg) / std::sqrt(bt.scale());
  return check_finite(f, "F", wave.phi0);
}

double f_of_phi0(const ModelParams& model, double phi0, const QuadratureConfig& cfg) {
  return f_of_wave(model, wave_from_phi0(model, phi0), cfg);
}

double c_factor(const ModelParams& model, double phi0) {
  return 0.5 * dphi0_domega(model, phi0) * phi0 * phi0;
}

SlopeEvaluation slope(const ModelParams& model, double omega, const QuadratureConfig& cfg) {
  const WavePoint wave = wave_point(model, omega);
  const double c = c_factor(model, wave.phi0);
  const double f = f_of_wave(model, wave, cfg);
  return {omega, wave.phi0, c, f, c * f, 0.0};
}

double i_gamma(const ModelParams& model, double phi0, double gamma, double s) {
  const detail::BranchTerms bt(model, wave_from_phi0(model, phi0));
  const auto v = bt.at(s, 1.0 - s);
  const double n = (5.0 - model.p()) * (v.phi_p / v.sum) + (5.0 - model.q()) * (v.phi_q / v.sum);
  return std::pow(phi0, gamma) * n / std::sqrt(v.sum) / std::sqrt(bt.scale());
}

namespace {

// Bracketed numerator of the closed-form d I_gamma / d phi0, divided by sum^{5/2}.
// Works with the ratios Phi_r / sum so nothing underflows as sum -> 0 at s -> 1.
double di_kernel(double p, double q, double gamma, double phi_p, double phi_q, double sum) {
  const double rp = phi_p / sum, rq = phi_q / sum;
  const double lead = (5.0 - p) * (2.0 * gamma - (p + 1.0)) * rp +
                      (5.0 - q) * (2.0 * gamma - (q + 1.0)) * rq;
  return (lead - 3.0 * (q - p) * (q - p) * rp * rq) / std::sqrt(sum);
}

}  // namespace

double i_gamma_dphi0(const ModelParams& model, double phi0, double gamma, double s) {
  const detail::BranchTerms bt(model, wave_from_phi0(model, phi0));
  const auto v = bt.at(s, 1.0 - s);
  return 0.5 * std::pow(phi0, gamma - 1.0) *
         di_kernel(model.p(), model.q(), gamma, v.phi_p, v.phi_q, v.sum) / std::sqrt(bt.scale());
}

double f_gamma(const ModelParams& model, double phi0, double gamma, const QuadratureConfig& cfg) {
  const WavePoint wave = wave_from_phi0(model, phi0);
  const detail::BranchTerms bt(model, wave);
  const double wp = 5.0 - model.p(), wq = 5.0 - model.q();
  auto integrand = [&bt, wp, wq](double s, double c) {
    const auto v = bt.at(s, c);
    return (wp * (v.phi_p / v.sum) + wq * (v.phi_q / v.sum)) / std::sqrt(v.sum) * s;
  };
  const double weight = std::pow(phi0, gamma) / std::sqrt(bt.scale());
  return check_finite(weight * integrate_branch(model, wave, integrand, cfg), "F_gamma", phi0);
}

double f_gamma_dphi0(const ModelParams& model, double phi0, double gamma,
                     const QuadratureConfig& cfg) {
  return f_gamma_dphi0(model, wave_from_phi0(model, phi0), gamma, cfg);
}

double f_gamma_dphi0(const ModelParams& model, const WavePoint& wave, double gamma,
                     const QuadratureConfig& cfg) {
  const double phi0 = wave.phi0;
  const detail::BranchTerms bt(model, wave);
  const double p = model.p(), q = model.q();
  auto integrand = [&bt, p, q, gamma](double s, double c) {
    const auto v = bt.at(s, c);
    return di_kernel(p, q, gamma, v.phi_p, v.phi_q, v.sum) * s;
  };
  const double weight = 0.5 * std::pow(phi0, gamma - 1.0) / std::sqrt(bt.scale());
  return check_finite(weight * integrate_branch(model, wave, integrand, cfg), "dF_gamma", phi0);
}

ZeroFrequencyResult j_zero_limit(const ModelParams& model) {
  model.require_standing_waves();
  const double a_p = model.a_p(), a_q = model.a_q(), p = model.p(), q = model.q();

  if (a_p < 0) {
    if (p >= kSevenThirds || same_exponent(p, kSevenThirds)) {
      return {LimitLabel::minus_infinity, std::nullopt, std::nullopt, std::nullopt};
    }
    const double phi_lower = frequency_window(model).phi_lower;
    const double c_star = 2.0 * a_q / (q + 1.0) * std::pow(phi_lower, q + 1.0);
    const double c_at_lower = std::pow(phi_lower, 5.0) / (2.0 * c_star * (q - p));
    const double c0 = c_at_lower / (std::sqrt(c_star) * (q - p));
    const double factor = 7.0 - 2.0 * p - q;
    const double value = factor * c0 * beta({(7.0 - 3.0 * p) / (2.0 * (q - p)), 0.5});
    LimitLabel label = LimitLabel::zero;
    if (value > 0) label = LimitLabel::positive;
    if (value < 0) label = LimitLabel::negative;
    return {label, value, c_star, c0};
  }

  // a_p > 0: phi0 -> 0 and the lower power dominates.
  if (p < kSevenThirds && !same_exponent(p, kSevenThirds)) {
    return {LimitLabel::zero_plus, std::nullopt, std::nullopt, std::nullopt};
  }
  if (same_exponent(p, kSevenThirds)) {
    // J -> (5-p)(p+1)/(4a_p(p-1)) A^{-1/2} int_0^1 (1-s^{p-1})^{-1/2} s ds, A = 2a_p/(p+1).
    const double m = p - 1.0;
    const double integral = beta({2.0 / m, 0.5}) / m;
    const double value = (5.0 - p) * (p + 1.0) / (4.0 * a_p * m) *
                         std::pow(2.0 * a_p / (p + 1.0), -0.5) * integral;
    return {LimitLabel::positive, value, std::nullopt, std::nullopt};
  }
  if (p < 5.0 && !same_exponent(p, 5.0)) {
    return {LimitLabel::plus_infinity, std::nullopt, std::nullopt, std::nullopt};
  }
  if (same_exponent(p, 5.0)) {
    const int s = a_q > 0 ? -1 : 1;  // -sign(a_q)
    if (same_exponent(q, 9.0)) {
      // J -> a_q(5-q) (3/(8a_p)) (2/(q+1)) (a_p/3)^{-3/2} (1/4) H(1/2, (q-1)/4).
      const double value = a_q * (5.0 - q) * 3.0 / (8.0 * a_p) * 2.0 / (q + 1.0) *
                           std::pow(a_p / 3.0, -1.5) * 0.25 * h_function({0.5, (q - 1.0) / 4.0});
      return {s > 0 ? LimitLabel::positive : LimitLabel::negative, value, std::nullopt,
              std::nullopt};
    }
    if (q < 9.0) {
      return {s > 0 ? LimitLabel::plus_infinity : LimitLabel::minus_infinity, std::nullopt,
              std::nullopt, std::nullopt};
    }
    return {s > 0 ? LimitLabel::zero_plus : LimitLabel::zero_minus, std::nullopt, std::nullopt,
            std::nullopt};
  }
  return {LimitLabel::minus_infinity, std::nullopt, std::nullopt, std::nullopt};
}

LimitLabel j_star_limit_sign(const ModelParams& model) {
  model.require_standing_waves();
  const double p = model.p(), q = model.q();
  if (model.a_q() > 0) {
    if (same_exponent(q, kSevenThirds)) return LimitLabel::positive;
    if (q < kSevenThirds) return LimitLabel::zero_plus;
    if (same_exponent(q, 5.0)) return model.a_p() > 0 ? LimitLabel::zero_plus : LimitLabel::zero_minus;
    if (q < 5.0) return LimitLabel::plus_infinity;
    return LimitLabel::minus_infinity;
  }
  if (p >= 5.0 || same_exponent(p, 5.0)) return LimitLabel::plus_infinity;
  return LimitLabel::not_covered;
}

namespace {

double phi01_ratio(const ModelParams& m) {
  const double p = m.p(), q = m.q();
  return -m.a_p() * (5.0 - p) * (p - 1.0) * (q + 1.0) * (q + 1.0) /
         (m.a_q() * (5.0 - q) * (q - 1.0) * (p + 1.0) * (p + 1.0));
}

void require_threshold_regime(const ModelParams& m) {
  if (!(m.a_p() > 0 && m.a_q() > 0 && m.p() < 5.0 && m.q() > 5.0)) {
    throw DomainError("thresholds are defined only for a_p > 0, a_q > 0, p < 5 < q");
  }
}

}  // namespace

Thresholds thresholds(const ModelParams& model) {
  require_threshold_regime(model);
  const double p = model.p(), q = model.q();
  const double r2 = -(model.a_p() / model.a_q()) * ((5.0 + 2.0 * q - 3.0 * p) / (5.0 - q)) *
                    ((q + 1.0) / (p + 1.0)) * ((p - 1.0) / (q - 1.0));
  const double k = 1.0 / (q - p);
  return {std::exp(k * std::log(phi01_ratio(model))), std::exp(k * std::log(r2))};
}

double phi01_direct(const ModelParams& model) {
  require_threshold_regime(model);
  return std::pow(phi01_ratio(model), 1.0 / (model.q() - model.p()));
}

double monotone_ratio(const ModelParams& model, double s) {
  const double p = model.p(), q = model.q();
  if (s <= 0.0) return 1.0;
  if (s >= 1.0) return (q - 1.0) / (p - 1.0);
  const double l = log_of_complement(s, 1.0 - s);
  return std::expm1((q - 1.0) * l) / std::expm1((p - 1.0) * l);
}

}  // namespace nlslab
