#pragma once

#include <optional>

#include "nlslab/model.hpp"
#include "nlslab/quadrature.hpp"

namespace nlslab {

/// Stability pattern of the whole branch over (0, omega_star):
/// S stable throughout, U unstable throughout, SU stable then unstable,
/// US unstable then stable. The switching frequency itself is unstable.
enum class StabilityType { S, U, SU, US };

const char* to_string(StabilityType t);

/// Closed-form classification from (sign a_p, sign a_q, p, q).
StabilityType classify(const ModelParams& model);

struct CriticalPoint {
  double omega_c;
  double bracket_width;
  double j_left;
  double j_right;
  int d2m_sign;      // sign of d^2 M / d omega^2 at omega_c
  double d2m_value;
};

enum class CriticalStatus { critical, no_sign_change, cap_exceeded };

struct CriticalSearch {
  CriticalStatus status;
  std::optional<CriticalPoint> point;  // set when status == critical
  int constant_sign = 0;               // sign of J seen throughout when no change was found
  double omega_reached = 0.0;          // last upper bracket candidate tried
};

struct CriticalSearchOptions {
  double rel_tol = 1e-8;      // relative bracket width on omega_c
  double omega_cap = 1e10;    // doubling stops beyond this frequency
  QuadratureConfig quadrature{};
};

/// Locates the frequency where J changes sign: doubling search for an upper
/// bracket starting at omega = 1, then bisection.
CriticalSearch find_omega_crit(const ModelParams& model, const CriticalSearchOptions& opts = {});

/// Lowest frequency at which the slope is evaluated numerically.
double lowest_reliable_omega(const ModelParams& model);

/// The weight exponent gamma under which d I_gamma / d phi0 has a fixed sign in the model's regime.
double regime_gamma(const ModelParams& model);

/// d^2 M / d omega^2 at a zero of F, through the weighted factorisation
/// (d phi0/d omega) C(phi0) phi0^{-gamma} d F_gamma / d phi0.
double mass_second_derivative_at_root(const ModelParams& model, double phi0,
                                      const QuadratureConfig& cfg = {});
double mass_second_derivative_at_root(const ModelParams& model, const WavePoint& wave,
                                      const QuadratureConfig& cfg = {});

}  // namespace nlslab
