#include "nlslab/quadrature.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <vector>

#include "nlslab/errors.hpp"

namespace nlslab::detail {
namespace {

// One abscissa pair at +/- t: the endpoint distance `small` (= s for -t and
// 1 - s for +t) and the Jacobian ds/dt, identical for both.
struct Node {
  double small;
  double weight;
};

Node node_at(double t) {
  const double u = 0.5 * std::numbers::pi * std::sinh(t);
  const double e = std::exp(-2.0 * u);
  const double small = e / (1.0 + e);  // 1 / (1 + exp(2u))
  const double large = 1.0 / (1.0 + e);
  return {small, std::numbers::pi * std::cosh(t) * small * large};
}

// Nodes are dropped once the endpoint distance is no longer a normal double.
constexpr double kMinSmall = std::numeric_limits<double>::min() * 1e10;
constexpr int kCachedLevels = 12;

const std::vector<Node>& level_nodes(int level) {
  static std::vector<Node> cache[kCachedLevels + 1];
  static std::once_flag flags[kCachedLevels + 1];
  std::call_once(flags[level], [level] {
    auto& nodes = cache[level];
    const double h = std::ldexp(1.0, -level);
    const int stride = level == 0 ? 1 : 2;
    for (long j = 1;; j += stride) {
      const Node n = node_at(static_cast<double>(j) * h);
      if (n.small < kMinSmall) break;
      nodes.push_back(n);
    }
  });
  return cache[level];
}

double level_sum(const SplitIntegrandRef& f, int level) {
  auto accumulate = [&f](const Node& n) {
    // Left abscissa s = small, right abscissa s = 1 - small.
    const double left = f(n.small, 1.0 - n.small);
    const double right = f(1.0 - n.small, n.small);
    return (left + right) * n.weight;
  };

  double sum = 0.0;
  if (level <= kCachedLevels) {
    for (const Node& n : level_nodes(level)) sum += accumulate(n);
  } else {
    const double h = std::ldexp(1.0, -level);
    for (long j = 1;; j += 2) {
      const Node n = node_at(static_cast<double>(j) * h);
      if (n.small < kMinSmall) break;
      sum += accumulate(n);
    }
  }
  return sum;
}

}  // namespace

double tanh_sinh_01(SplitIntegrandRef f, const QuadratureConfig& cfg) {
  constexpr int kMinLevel = 3;
  double sum = f(0.5, 0.5) * 0.25 * std::numbers::pi + level_sum(f, 0);
  double estimate = sum;
  double error = std::numeric_limits<double>::infinity();

  for (int level = 1; level <= cfg.max_refinement_level; ++level) {
    sum += level_sum(f, level);
    const double next = sum * std::ldexp(1.0, -level);
    if (!std::isfinite(next)) throw NumericError("integrate_01: non-finite integrand value");
    error = std::abs(next - estimate);
    estimate = next;
    if (level >= kMinLevel && error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(estimate))) {
      return estimate;
    }
  }
  throw AccuracyError(estimate, error);
}

}  // namespace nlslab::detail
