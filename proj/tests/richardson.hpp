#pragma once

#include <cmath>
#include <vector>

namespace testsupport {

// Limit as h -> 0 of samples f(h_k) = L + sum_j c_j h_k^{e_j}, eliminating the listed exponents
// in order. Needs exponents.size() + 1 samples.
inline double richardson(std::vector<double> h, std::vector<double> f,
                         const std::vector<double>& exponents) {
  for (double e : exponents) {
    std::vector<double> next;
    for (std::size_t k = 0; k + 1 < f.size(); ++k) {
      const double r = std::pow(h[k] / h[k + 1], e);
      next.push_back((r * f[k + 1] - f[k]) / (r - 1.0));
    }
    f = next;
    h.pop_back();
    if (f.size() == 1) break;
  }
  return f.front();
}

}  // namespace testsupport
