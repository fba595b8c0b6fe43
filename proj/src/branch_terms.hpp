#pragma once

#include <cmath>

#include "nlslab/model.hpp"
#include "nlslab/special.hpp"

namespace nlslab::detail {

// Phi_p, Phi_q and their sum at one branch point, normalised by
// scale = |A_p| + |A_q| with A_r = 2a_r/(r+1) phi0^{r+1}, so integrands are O(1).
class BranchTerms {
 public:
  BranchTerms(const ModelParams& m, const WavePoint& w) : p_(m.p()), q_(m.q()) {
    const double ap = 2.0 * m.a_p() / (p_ + 1.0) * std::pow(w.phi0, p_ + 1.0);
    const double aq = 2.0 * m.a_q() / (q_ + 1.0) * std::pow(w.phi0, q_ + 1.0);
    scale_ = std::abs(ap) + std::abs(aq);
    ap_ = ap / scale_;
    aq_ = aq / scale_;
    omega_term_ = w.omega * w.phi0 * w.phi0 / scale_;
  }

  double scale() const { return scale_; }
  double p() const { return p_; }
  double q() const { return q_; }

  struct Values {
    double phi_p;
    double phi_q;
    double sum;
  };

  // c = 1 - s. Near s = 0 the sum is taken as omega phi0^2 - A_p s^{p-1} - A_q s^{q-1},
  // which is exact at s = 0 even when Phi_p and Phi_q nearly cancel.
  Values at(double s, double c) const {
    if (s < 0.5) {
      const double sp = std::pow(s, p_ - 1.0);
      const double sq = std::pow(s, q_ - 1.0);
      return {ap_ * (1.0 - sp), aq_ * (1.0 - sq), omega_term_ - ap_ * sp - aq_ * sq};
    }
    const double phi_p = ap_ * one_minus_pow(s, c, p_ - 1.0);
    const double phi_q = aq_ * one_minus_pow(s, c, q_ - 1.0);
    return {phi_p, phi_q, phi_p + phi_q};
  }

 private:
  double p_;
  double q_;
  double scale_;
  double ap_;
  double aq_;
  double omega_term_;
};

}  // namespace nlslab::detail
