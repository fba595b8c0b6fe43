#pragma once

#include <optional>

namespace nlslab {

/// Sign pattern of the two nonlinear coefficients (positive = focusing).
enum class SignCase {
  focusing_focusing,      // a_p > 0, a_q > 0
  focusing_defocusing,    // a_p > 0, a_q < 0
  defocusing_focusing,    // a_p < 0, a_q > 0
  defocusing_defocusing,  // a_p < 0, a_q < 0: no standing waves
};

const char* to_string(SignCase c);

/// Nonlinearity a_p|u|^{p-1}u + a_q|u|^{q-1}u with 1 < p < q and nonzero coefficients.
class ModelParams {
 public:
  ModelParams(double a_p, double a_q, double p, double q);

  double a_p() const noexcept { return a_p_; }
  double a_q() const noexcept { return a_q_; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  SignCase sign_case() const noexcept;
  bool has_standing_waves() const noexcept { return a_p_ > 0 || a_q_ > 0; }

  /// Throws NoStandingWaves when both coefficients are negative.
  void require_standing_waves() const;

 private:
  double a_p_;
  double a_q_;
  double p_;
  double q_;
};

/// A positive quantity that may be unbounded. Never stores infinity as a float.
class Extent {
 public:
  static Extent unbounded() { return Extent{}; }
  static Extent finite(double v) { return Extent{v}; }

  bool is_finite() const noexcept { return value_.has_value(); }
  /// Precondition: is_finite().
  double value() const { return value_.value(); }
  /// True when x lies strictly below the extent.
  bool exceeds(double x) const noexcept { return !value_ || x < *value_; }

 private:
  Extent() = default;
  explicit Extent(double v) : value_(v) {}
  std::optional<double> value_;
};

/// Admissible frequencies (0, omega_star) and the matching peak amplitudes (phi_lower, phi_upper).
struct FrequencyWindow {
  Extent omega_star;
  double phi_lower;
  Extent phi_upper;
};

/// A point on the standing-wave branch. Carries omega alongside phi0 so that
/// integrands near the zero-frequency end can use the exact frequency.
struct WavePoint {
  double omega;
  double phi0;
};

FrequencyWindow frequency_window(const ModelParams& model);

/// omega = 2a_p/(p+1) phi0^{p-1} + 2a_q/(q+1) phi0^{q-1}. Accepts the closed window [phi_lower, phi_upper].
double omega_from_phi0(const ModelParams& model, double phi0);

/// Inverse of omega_from_phi0 on (0, omega_star).
double phi0_from_omega(const ModelParams& model, double omega);

/// d phi0 / d omega; strictly positive inside the window.
double dphi0_domega(const ModelParams& model, double phi0);

WavePoint wave_point(const ModelParams& model, double omega);

/// Characteristic frequency of the model, used to place the near-zero frequency cutoff.
double omega_scale(const ModelParams& model);

}  // namespace nlslab
