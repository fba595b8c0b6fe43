#pragma once

#include <vector>

#include "nlslab/model.hpp"
#include "nlslab/quadrature.hpp"

namespace nlslab {

/// Standing-wave profile sampled on the symmetric grid x_i = -L + i dx, i = 0..2L/dx.
struct Profile {
  double omega;
  double phi0;
  double dx;
  double half_width;
  std::vector<double> x;
  std::vector<double> values;  // phi(x_i)
  std::vector<double> slopes;  // phi'(x_i) from the first integral

  std::size_t size() const { return values.size(); }
  std::size_t center() const { return values.size() / 2; }

  /// Cubic Hermite interpolation between nodes; 0 outside [-L, L].
  double operator()(double at) const;
};

/// Integrates phi' = -sqrt(omega phi^2 - 2a_p/(p+1) phi^{p+1} - 2a_q/(q+1) phi^{q+1}) from the
/// peak outward and mirrors. Throws DomainError when phi(L) >= 1e-8 phi0.
Profile build_profile(const ModelParams& model, double omega, double dx, double half_width);

/// M(phi_omega) = (1/2) ||phi_omega||_{L^2}^2, through the peak-amplitude integral
/// int_0^1 phi0^3 s / sqrt(Phi_p + Phi_q) ds.
double mass_of_wave(const ModelParams& model, double omega, const QuadratureConfig& cfg = {});

/// Trapezoid value of (1/2) int phi^2 dx on the profile grid.
double profile_mass(const Profile& profile);

/// Largest |-(1/2)phi_x^2 + (omega/2)phi^2 - a_p/(p+1) phi^{p+1} - a_q/(q+1) phi^{q+1}| on the grid.
double first_integral_residual(const ModelParams& model, const Profile& profile);

}  // namespace nlslab
