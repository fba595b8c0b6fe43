#pragma once

#include <concepts>
#include <type_traits>
#include <utility>

namespace nlslab {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_refinement_level = 12;
};

namespace detail {

// Non-owning reference to a callable double(double s, double one_minus_s).
class SplitIntegrandRef {
 public:
  template <class F>
  explicit SplitIntegrandRef(F& f)
      : obj_(static_cast<void*>(std::addressof(f))),
        call_([](void* o, double s, double c) { return (*static_cast<F*>(o))(s, c); }) {}

  double operator()(double s, double c) const { return call_(obj_, s, c); }

 private:
  void* obj_;
  double (*call_)(void*, double, double);
};

double tanh_sinh_01(SplitIntegrandRef f, const QuadratureConfig& cfg);

}  // namespace detail

/// Integrates f over (0,1) with the double-exponential (tanh-sinh) rule.
///
/// f may take either the abscissa s, or the pair (s, 1 - s); the second form
/// receives 1 - s computed without cancellation, which matters for integrands
/// with a singularity at s = 1. f is never evaluated at 0 or 1.
/// Throws AccuracyError when the tolerance is not met at the maximum level.
template <class F>
double integrate_01(F&& f, const QuadratureConfig& cfg = {}) {
  if constexpr (std::is_invocable_r_v<double, F&, double, double>) {
    return detail::tanh_sinh_01(detail::SplitIntegrandRef(f), cfg);
  } else {
    // Abscissas that round to 1 cannot be represented in this form and are dropped.
    auto split = [&f](double s, double) { return s < 1.0 ? static_cast<double>(f(s)) : 0.0; };
    return detail::tanh_sinh_01(detail::SplitIntegrandRef(split), cfg);
  }
}

}  // namespace nlslab
