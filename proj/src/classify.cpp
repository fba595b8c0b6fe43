#include "nlslab/classify.hpp"

#include <cmath>
#include <string>

#include "nlslab/errors.hpp"
#include "nlslab/slope.hpp"

namespace nlslab {
namespace {

// Classification boundaries are inclusive on one side; compare with a small slack so
// that grid values such as q = 7 - 2p land on the intended side.
constexpr double kBoundarySlack = 1e-12;

bool le(double a, double b) { return a <= b + kBoundarySlack * std::max(1.0, std::abs(b)); }

int sign(double v) { return (v > 0) - (v < 0); }

}  // namespace

const char* to_string(StabilityType t) {
  switch (t) {
    case StabilityType::S: return "S";
    case StabilityType::U: return "U";
    case StabilityType::SU: return "SU";
    case StabilityType::US: return "US";
  }
  return "?";
}

StabilityType classify(const ModelParams& model) {
  model.require_standing_waves();
  const double p = model.p(), q = model.q();
  switch (model.sign_case()) {
    case SignCase::focusing_focusing:
      if (le(q, 5.0)) return StabilityType::S;
      if (le(5.0, p)) return StabilityType::U;
      return StabilityType::SU;
    case SignCase::focusing_defocusing:
      if (le(p, 5.0)) return StabilityType::S;
      return StabilityType::US;
    case SignCase::defocusing_focusing:
      if (le(q, 7.0 - 2.0 * p)) return StabilityType::S;
      if (le(5.0, q)) return StabilityType::U;
      return StabilityType::US;
    case SignCase::defocusing_defocusing: break;
  }
  throw NoStandingWaves();
}

double lowest_reliable_omega(const ModelParams& model) {
  return 1e-8 * std::max(1.0, omega_scale(model));
}

double regime_gamma(const ModelParams& model) {
  const double p = model.p(), q = model.q();
  switch (model.sign_case()) {
    case SignCase::focusing_focusing: return 0.5 * (p + 1.0);
    case SignCase::focusing_defocusing: return q <= 5.0 ? 0.5 * (p + 1.0) : p - q + 3.0;
    case SignCase::defocusing_focusing: return 3.0 * q >= 2.0 * p + 5.0 ? 0.5 * (q + 1.0) : p - q + 3.0;
    case SignCase::defocusing_defocusing: break;
  }
  throw NoStandingWaves();
}

double mass_second_derivative_at_root(const ModelParams& model, double phi0,
                                      const QuadratureConfig& cfg) {
  return mass_second_derivative_at_root(model, WavePoint{omega_from_phi0(model, phi0), phi0}, cfg);
}

double mass_second_derivative_at_root(const ModelParams& model, const WavePoint& wave,
                                      const QuadratureConfig& cfg) {
  const double gamma = regime_gamma(model);
  const double phi0 = wave.phi0;
  const double dphi = dphi0_domega(model, phi0);
  return dphi * c_factor(model, phi0) * std::pow(phi0, -gamma) *
         f_gamma_dphi0(model, wave, gamma, cfg);
}

CriticalSearch find_omega_crit(const ModelParams& model, const CriticalSearchOptions& opts) {
  const FrequencyWindow window = frequency_window(model);
  auto j_at = [&](double omega) { return slope(model, omega, opts.quadrature).j_value; };

  const double omega0 = lowest_reliable_omega(model);
  const bool capped_window = window.omega_star.is_finite();
  const double upper = capped_window ? window.omega_star.value() * (1.0 - 1e-9) : opts.omega_cap;

  int low_sign = sign_of(j_zero_limit(model).label);
  const double j0 = j_at(omega0);
  if (low_sign == 0) low_sign = sign(j0);
  if (low_sign == 0) throw NumericError("slope vanishes at the lowest sampled frequency");

  // Stage 1: upper bracket by doubling from omega = 1. On an unbounded window the search
  // stops once the candidate passes the cap; a slope that stayed positive up to there is
  // reported as having no sign change. Near p = 7/3 the root can sit far below omega0, in
  // which case the lower end is walked down instead.
  double lo = omega0;
  double j_lo = j0;
  double hi = lo;
  double j_hi = j_lo;
  if (sign(j0) != low_sign) {
    const double floor = 1e-280 * std::max(1.0, omega_scale(model));
    while (sign(j_lo) != low_sign) {
      if (lo <= floor) {
        throw NumericError("slope sign near zero frequency disagrees with its zero-frequency limit");
      }
      hi = lo;
      j_hi = j_lo;
      lo *= 1e-8;
      j_lo = j_at(lo);
    }
  } else {
    hi = std::min(1.0, upper);
    j_hi = j_at(hi);
    while (sign(j_hi) == low_sign) {
      if (capped_window && hi >= upper) {
        return {CriticalStatus::no_sign_change, std::nullopt, low_sign, hi};
      }
      const double next = capped_window ? std::min(2.0 * hi, upper) : 2.0 * hi;
      if (!capped_window && next > opts.omega_cap) {
        return {low_sign > 0 ? CriticalStatus::no_sign_change : CriticalStatus::cap_exceeded,
                std::nullopt, low_sign, next};
      }
      lo = hi;
      j_lo = j_hi;
      hi = next;
      j_hi = j_at(hi);
    }
  }

  // Stage 2: bisection (geometric while the bracket spans several octaves).
  double root = 0.0;
  bool exact = false;
  if (j_hi == 0.0) {
    root = hi;
    exact = true;
  }
  while (!exact && hi - lo > opts.rel_tol * lo) {
    const double mid = hi / lo > 4.0 ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    const double j_mid = j_at(mid);
    if (std::abs(j_mid) <= 1e-14 * std::max(std::abs(j_lo), std::abs(j_hi))) {
      root = mid;
      exact = true;
      break;
    }
    if (sign(j_mid) == sign(j_lo)) {
      lo = mid;
      j_lo = j_mid;
    } else {
      hi = mid;
      j_hi = j_mid;
    }
  }
  if (!exact) root = 0.5 * (lo + hi);

  const double d2m = mass_second_derivative_at_root(model, wave_point(model, root), opts.quadrature);
  CriticalPoint point{root, exact ? 0.0 : hi - lo, j_lo, j_hi, sign(d2m), d2m};
  return {CriticalStatus::critical, point, 0, hi};
}

}  // namespace nlslab
