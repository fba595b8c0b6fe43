#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nlslab/model.hpp"
#include "nlslab/tridiagonal.hpp"

namespace testsupport {

// Gauss-Legendre nodes and weights on [-1, 1] (Newton on P_n).
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) {
        x[i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        break;
      }
    }
  }
  return {x, w};
}

template <class F>
double gauss_integral(F&& f, double a, double b, int n = 40) {
  static thread_local std::vector<std::pair<int, std::pair<std::vector<double>, std::vector<double>>>> cache;
  const std::pair<std::vector<double>, std::vector<double>>* rule = nullptr;
  for (const auto& c : cache) {
    if (c.first == n) rule = &c.second;
  }
  if (!rule) {
    cache.emplace_back(n, gauss_legendre(n));
    rule = &cache.back().second;
  }
  const double h = 0.5 * (b - a), m = 0.5 * (a + b);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += rule->second[i] * f(m + h * rule->first[i]);
  return h * sum;
}

// int_0^1 t^{x-1} (1 - t^y) (1 - t)^{-3/2} dt computed directly.
// [0, 1/2]: binomial series of (1 - t)^{-3/2} integrated term by term.
// [1/2, 1]: t = 1 - u^2 removes the endpoint singularity; Gauss-Legendre in u on panels.
inline double h_direct(double x, double y) {
  double head = 0.0, coef = 1.0;
  for (int k = 0; k < 400; ++k) {
    const double a = x + k, b = x + y + k;
    const double term = coef * (std::pow(0.5, a) / a - std::pow(0.5, b) / b);
    head += term;
    if (k > 10 && std::abs(term) < 1e-18 * std::abs(head)) break;
    coef *= (1.5 + k) / (k + 1.0);
  }
  auto g = [x, y](double u) {
    const double u2 = u * u;
    const double lt = std::log1p(-u2);
    const double ratio = u2 == 0.0 ? y : -std::expm1(y * lt) / u2;
    return 2.0 * std::exp((x - 1.0) * lt) * ratio;
  };
  const double umax = std::sqrt(0.5);
  double tail = 0.0;
  const int panels = 8;
  for (int i = 0; i < panels; ++i) {
    tail += gauss_integral(g, umax * i / panels, umax * (i + 1) / panels, 30);
  }
  return head + tail;
}

// Explicit profile when q = 2p - 1.
inline double closed_form_profile(const nlslab::ModelParams& m, double omega, double x) {
  const double p = m.p();
  const double a = 2.0 * m.a_p() / (p + 1.0);
  const double b = m.a_q() / p;
  const double first = a / (2.0 * omega);
  const double second = std::sqrt(a * a / (4.0 * omega * omega) + b / omega);
  return std::pow(first + second * std::cosh((p - 1.0) * std::sqrt(omega) * x), -1.0 / (p - 1.0));
}

// Solution of -D2 psi + omega psi - a_p psi^p - a_q psi^q = 0 on the grid
// x_j = -L + j dx with psi = 0 at both ends, found by Newton on the even half.
inline std::vector<double> discrete_soliton(const nlslab::ModelParams& m, double omega,
                                            const std::vector<double>& guess, double dx) {
  const std::size_t n = guess.size();
  const std::size_t mid = n / 2;
  const std::size_t h = n - mid - 1;  // unknowns psi_mid .. psi_{n-2}
  std::vector<double> v(guess.begin() + static_cast<long>(mid), guess.end() - 1);
  const double inv = 1.0 / (dx * dx);
  const double p = m.p(), q = m.q();
  for (int it = 0; it < 50; ++it) {
    std::vector<double> lower(h), diag(h), upper(h), rhs(h);
    double norm = 0.0;
    for (std::size_t j = 0; j < h; ++j) {
      const double left = j == 0 ? v[1] : v[j - 1];
      const double right = j + 1 < h ? v[j + 1] : 0.0;
      const double r = -(left - 2.0 * v[j] + right) * inv + omega * v[j] -
                       m.a_p() * std::pow(v[j], p) - m.a_q() * std::pow(v[j], q);
      rhs[j] = -r;
      norm = std::max(norm, std::abs(r));
      diag[j] = 2.0 * inv + omega - p * m.a_p() * std::pow(v[j], p - 1.0) -
                q * m.a_q() * std::pow(v[j], q - 1.0);
      lower[j] = -inv;
      upper[j] = j == 0 ? -2.0 * inv : -inv;
    }
    nlslab::solve_tridiagonal<double>(lower, diag, upper, rhs);
    double step = 0.0;
    for (std::size_t j = 0; j < h; ++j) {
      v[j] = std::max(v[j] + rhs[j], 0.0);
      step = std::max(step, std::abs(rhs[j]));
    }
    if (step < 1e-14 * v[0]) {
      std::vector<double> full(n, 0.0);
      for (std::size_t j = 0; j < h; ++j) {
        full[mid + j] = v[j];
        full[mid - j] = v[j];
      }
      return full;
    }
  }
  throw std::runtime_error("discrete soliton Newton did not converge");
}

// S, U, SU, US or "multi" from a sequence of signs (zeros are ignored).
inline std::string sign_pattern(const std::vector<int>& signs) {
  std::string runs;
  for (int s : signs) {
    if (s == 0) continue;
    const char c = s > 0 ? 'S' : 'U';
    if (runs.empty() || runs.back() != c) runs += c;
  }
  if (runs.size() <= 2) return runs;
  return "multi";
}

// Frequencies spread over (0, omega_star): log-spaced towards 0, and when the window is
// bounded also log-spaced in distance to omega_star.
inline std::vector<double> scan_frequencies(const nlslab::ModelParams& m, int count) {
  const nlslab::FrequencyWindow win = nlslab::frequency_window(m);
  std::vector<double> out;
  if (!win.omega_star.is_finite()) {
    const double s = nlslab::omega_scale(m);
    for (int i = 0; i < count; ++i) out.push_back(s * std::pow(10.0, -6.0 + 12.0 * i / (count - 1)));
    return out;
  }
  const double ws = win.omega_star.value();
  const int lowers = count / 2, uppers = count - lowers;
  for (int i = 0; i < lowers; ++i) out.push_back(ws * std::pow(10.0, -6.0 + 5.7 * i / (lowers - 1)));
  for (int i = uppers - 1; i >= 0; --i) {
    out.push_back(ws * (1.0 - std::pow(10.0, -6.0 + 5.7 * i / (uppers - 1))));
  }
  return out;
}

}  // namespace testsupport
