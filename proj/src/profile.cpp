#include "nlslab/profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "branch_terms.hpp"
#include "nlslab/errors.hpp"

namespace nlslab {
namespace {

class FirstIntegral {
 public:
  FirstIntegral(const ModelParams& m, double omega)
      : omega_(omega),
        p_(m.p()),
        q_(m.q()),
        a_p_(m.a_p()),
        a_q_(m.a_q()),
        bp_(2.0 * m.a_p() / (m.p() + 1.0)),
        bq_(2.0 * m.a_q() / (m.q() + 1.0)) {}

  // phi_x^2 as a function of phi.
  double slope_squared(double phi) const {
    return phi * phi * (omega_ - bp_ * std::pow(phi, p_ - 1.0) - bq_ * std::pow(phi, q_ - 1.0));
  }
  double slope(double phi) const { return -std::sqrt(std::max(0.0, slope_squared(phi))); }

  // phi'' = omega phi - a_p phi^p - a_q phi^q and its phi-derivative.
  double curvature(double phi) const {
    return omega_ * phi - a_p_ * std::pow(phi, p_) - a_q_ * std::pow(phi, q_);
  }
  double curvature_prime(double phi) const {
    return omega_ - p_ * a_p_ * std::pow(phi, p_ - 1.0) - q_ * a_q_ * std::pow(phi, q_ - 1.0);
  }

 private:
  double omega_, p_, q_, a_p_, a_q_, bp_, bq_;
};

}  // namespace

double Profile::operator()(double at) const {
  const double lo = x.front();
  if (at < lo || at > x.back()) return 0.0;
  const double pos = (at - lo) / dx;
  std::size_t i = static_cast<std::size_t>(pos);
  if (i + 1 >= values.size()) i = values.size() - 2;
  const double t = pos - static_cast<double>(i);
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
  return h00 * values[i] + h10 * dx * slopes[i] + h01 * values[i + 1] + h11 * dx * slopes[i + 1];
}

Profile build_profile(const ModelParams& model, double omega, double dx, double half_width) {
  if (!(dx > 0.0) || !(half_width > 0.0)) throw DomainError("dx and half_width must be positive");
  const auto half_nodes = static_cast<std::size_t>(std::llround(half_width / dx));
  if (half_nodes < 8) throw DomainError("profile grid needs at least 8 nodes per half");

  const double phi0 = phi0_from_omega(model, omega);
  const FirstIntegral fi(model, omega);

  // Right half, x_j = j dx. The first-order ODE is singular at the peak (phi_x(0) = 0), so
  // start from the Taylor seed at x = dx/4 and take classical RK4 steps of dx/8 on the smooth
  // system (phi, phi_x) while phi > phi0/2. Shooting that system further out would amplify
  // errors like e^{sqrt(omega) x}; past the switch phi_x = -sqrt(...) is contracting and is used instead.
  std::vector<double> right(half_nodes + 1);
  right[0] = phi0;
  const double h0 = 0.25 * dx;
  const double c2 = fi.curvature(phi0);
  const double c4 = fi.curvature_prime(phi0) * c2;
  double phi = phi0 + 0.5 * c2 * h0 * h0 + c4 * h0 * h0 * h0 * h0 / 24.0;
  double dphi = c2 * h0 + c4 * h0 * h0 * h0 / 6.0;
  bool near_peak = true;
  double xpos = h0;
  const double step = 0.125 * dx;

  for (std::size_t j = 1; j <= half_nodes; ++j) {
    const double target = static_cast<double>(j) * dx;
    while (xpos < target - 1e-3 * step) {
      if (near_peak) {
        const double k1 = dphi, l1 = fi.curvature(phi);
        const double k2 = dphi + 0.5 * step * l1, l2 = fi.curvature(phi + 0.5 * step * k1);
        const double k3 = dphi + 0.5 * step * l2, l3 = fi.curvature(phi + 0.5 * step * k2);
        const double k4 = dphi + step * l3, l4 = fi.curvature(phi + step * k3);
        phi += step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        dphi += step / 6.0 * (l1 + 2.0 * l2 + 2.0 * l3 + l4);
        near_peak = phi > 0.5 * phi0;
      } else {
        const double k1 = fi.slope(phi);
        const double k2 = fi.slope(phi + 0.5 * step * k1);
        const double k3 = fi.slope(phi + 0.5 * step * k2);
        const double k4 = fi.slope(phi + step * k3);
        phi += step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
      xpos += step;
      if (!std::isfinite(phi)) throw NumericError("profile integration failed");
    }
    right[j] = phi;
  }

  if (!(right.back() < 1e-8 * phi0)) {
    throw DomainError("half_width " + std::to_string(half_width) +
                      " too small: profile has not decayed below 1e-8 phi0; use a larger L");
  }

  Profile prof;
  prof.omega = omega;
  prof.phi0 = phi0;
  prof.dx = dx;
  prof.half_width = static_cast<double>(half_nodes) * dx;
  const std::size_t n = 2 * half_nodes + 1;
  prof.x.resize(n);
  prof.values.resize(n);
  prof.slopes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long offset = static_cast<long>(i) - static_cast<long>(half_nodes);
    const std::size_t j = static_cast<std::size_t>(std::labs(offset));
    prof.x[i] = static_cast<double>(offset) * dx;
    prof.values[i] = right[j];
    const double slope = j == 0 ? 0.0 : fi.slope(right[j]);
    prof.slopes[i] = offset < 0 ? -slope : slope;
  }
  return prof;
}

double mass_of_wave(const ModelParams& model, double omega, const QuadratureConfig& cfg) {
  const WavePoint wave = wave_point(model, omega);
  const detail::BranchTerms bt(model, wave);
  auto integrand = [&bt](double s, double c) { return s / std::sqrt(bt.at(s, c).sum); };
  const double phi0 = wave.phi0;
  const double m = phi0 * phi0 * phi0 / std::sqrt(bt.scale()) * integrate_01(integrand, cfg);
  if (!std::isfinite(m)) throw NumericError("mass integral is not finite at omega = " + std::to_string(omega));
  return m;
}

double profile_mass(const Profile& profile) {
  double sum = 0.0;
  for (double v : profile.values) sum += v * v;
  const double ends = profile.values.front() * profile.values.front() +
                      profile.values.back() * profile.values.back();
  return 0.5 * profile.dx * (sum - 0.5 * ends);
}

double first_integral_residual(const ModelParams& model, const Profile& profile) {
  const FirstIntegral fi(model, profile.omega);
  double worst = 0.0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const double v = profile.values[i], d = profile.slopes[i];
    worst = std::max(worst, std::abs(0.5 * (fi.slope_squared(v) - d * d)));
  }
  return worst;
}

}  // namespace nlslab
