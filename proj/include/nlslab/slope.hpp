#pragma once

#include <optional>

#include "nlslab/model.hpp"
#include "nlslab/quadrature.hpp"

namespace nlslab {

/// The two nonlinear contributions Phi_p, Phi_q at abscissa s of the slope integral:
/// Phi_r = 2a_r/(r+1) phi0^{r+1} (1 - s^{r-1}).
struct IntegrandTerms {
  double s;
  double phi_p_term;
  double phi_q_term;
};

IntegrandTerms integrand_terms(const ModelParams& model, double phi0, double s);

/// J = C F at one frequency, with C = (d phi0/d omega) phi0^2 / 2 > 0.
struct SlopeEvaluation {
  double omega;
  double phi0;
  double c_factor;
  double f_value;
  double j_value;
  double gamma = 0.0;
};

/// Limit labels for the slope at an end of the frequency window.
enum class LimitLabel {
  positive,        // finite, > 0
  zero,            // exactly 0
  negative,        // finite, < 0
  zero_plus,       // tends to 0 from above
  zero_minus,      // tends to 0 from below
  plus_infinity,
  minus_infinity,
  not_covered,     // sign not determined by the analysis
};

const char* to_string(LimitLabel label);

/// Sign carried by a label: +1, -1 or 0 (zero and not_covered give 0).
int sign_of(LimitLabel label);

struct ZeroFrequencyResult {
  LimitLabel label;
  std::optional<double> value;   // set whenever the limit is finite
  std::optional<double> c_star;  // defocusing-focusing branch only
  std::optional<double> c0;      // defocusing-focusing branch only
};

/// F(phi0) = int_0^1 ((5-p)Phi_p + (5-q)Phi_q) / (Phi_p + Phi_q)^{3/2} s ds.
double f_of_phi0(const ModelParams& model, double phi0, const QuadratureConfig& cfg = {});

/// F evaluated on a branch point; uses the exact omega near the zero-frequency end.
double f_of_wave(const ModelParams& model, const WavePoint& wave, const QuadratureConfig& cfg = {});

SlopeEvaluation slope(const ModelParams& model, double omega, const QuadratureConfig& cfg = {});

/// C(phi0) = (d phi0/d omega) phi0^2 / 2.
double c_factor(const ModelParams& model, double phi0);

/// I_gamma(phi0; s) = phi0^gamma ((5-p)Phi_p + (5-q)Phi_q) / (Phi_p + Phi_q)^{3/2}.
double i_gamma(const ModelParams& model, double phi0, double gamma, double s);

/// Closed-form partial derivative of I_gamma with respect to phi0 at fixed s.
double i_gamma_dphi0(const ModelParams& model, double phi0, double gamma, double s);

/// F_gamma(phi0) = int_0^1 I_gamma s ds = phi0^gamma F(phi0).
double f_gamma(const ModelParams& model, double phi0, double gamma, const QuadratureConfig& cfg = {});

/// d F_gamma / d phi0 = int_0^1 (d I_gamma / d phi0) s ds.
double f_gamma_dphi0(const ModelParams& model, double phi0, double gamma,
                     const QuadratureConfig& cfg = {});
double f_gamma_dphi0(const ModelParams& model, const WavePoint& wave, double gamma,
                     const QuadratureConfig& cfg = {});

/// Limit of J as omega -> 0+.
ZeroFrequencyResult j_zero_limit(const ModelParams& model);

/// Limit of J at the upper end of the frequency window (label only).
LimitLabel j_star_limit_sign(const ModelParams& model);

/// Peak-amplitude thresholds of the focusing-focusing case p < 5 < q:
/// F < 0 beyond phi01, and d I_gamma/d phi0 < 0 below phi02 for gamma = (p+1)/2.
struct Thresholds {
  double phi01;
  double phi02;
};

Thresholds thresholds(const ModelParams& model);

/// phi01 computed without logarithms (for cross-checking).
double phi01_direct(const ModelParams& model);

/// h(s) = (1 - s^{q-1}) / (1 - s^{p-1}); increasing from 1 to (q-1)/(p-1) on (0,1).
double monotone_ratio(const ModelParams& model, double s);

}  // namespace nlslab
