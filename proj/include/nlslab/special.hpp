#pragma once

namespace nlslab {

/// Arguments of the Euler Beta integral; both must be positive.
struct BetaArgs {
  double x;
  double y;
};

/// log Gamma(x) for x > 0 (Lanczos approximation, g = 7, nine terms).
double log_gamma(double x);

/// B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y), evaluated in log space.
double beta(BetaArgs args);

/// H(x, y) = int_0^1 t^{x-1} (1 - t^y) (1 - t)^{-3/2} dt, through its Beta-function closed form
/// -(2x - 1) B(x, 1/2) + (2x + 2y - 1) B(x + y, 1/2).
double h_function(BetaArgs args);

/// log(s) for s in (0,1) given c = 1 - s, accurate at both ends.
double log_of_complement(double s, double c);

/// 1 - s^r for s in (0,1), r > 0, given c = 1 - s; no cancellation near s = 1.
double one_minus_pow(double s, double c, double r);

}  // namespace nlslab
