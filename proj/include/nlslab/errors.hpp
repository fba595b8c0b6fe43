#pragma once

#include <stdexcept>
#include <string>

namespace nlslab {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Both nonlinear coefficients are negative: no decaying standing waves exist.
class NoStandingWaves : public DomainError {
 public:
  NoStandingWaves() : DomainError("no standing waves: a_p and a_q are both negative") {}
};

/// An iterative numerical procedure failed to converge or produced NaN.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrature did not reach the requested tolerance at the maximum level.
class AccuracyError : public NumericError {
 public:
  AccuracyError(double estimate, double error_bound)
      : NumericError("quadrature did not converge (estimate " + std::to_string(estimate) +
                     ", error bound " + std::to_string(error_bound) + ")"),
        estimate_(estimate),
        error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

}  // namespace nlslab
