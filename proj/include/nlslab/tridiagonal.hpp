#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "nlslab/errors.hpp"

namespace nlslab {

/// Solves a tridiagonal system in place with the Thomas algorithm.
///
/// Row i reads lower[i] x[i-1] + diag[i] x[i] + upper[i] x[i+1] = rhs[i];
/// lower[0] and upper[n-1] are ignored. On return `rhs` holds x.
template <class T>
void solve_tridiagonal(std::span<const T> lower, std::span<const T> diag, std::span<const T> upper,
                       std::span<T> rhs) {
  const std::size_t n = diag.size();
  if (n == 0) return;
  std::vector<T> c_prime(n);

  T pivot = diag[0];
  if (std::abs(pivot) == 0.0) throw NumericError("tridiagonal solve: zero pivot");
  c_prime[0] = upper[0] / pivot;
  rhs[0] /= pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = diag[i] - lower[i] * c_prime[i - 1];
    if (std::abs(pivot) == 0.0) throw NumericError("tridiagonal solve: zero pivot");
    c_prime[i] = i + 1 < n ? upper[i] / pivot : T{};
    rhs[i] = (rhs[i] - lower[i] * rhs[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i > 0; --i) rhs[i - 1] -= c_prime[i - 1] * rhs[i];
}

}  // namespace nlslab
