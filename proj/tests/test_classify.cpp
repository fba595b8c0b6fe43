#include <cmath>

#include "doctest.h"
#include "nlslab/classify.hpp"
#include "nlslab/errors.hpp"
#include "nlslab/slope.hpp"
#include "support.hpp"

using namespace nlslab;

TEST_CASE("classification table") {
  CHECK(classify(ModelParams(1, 1, 3, 4)) == StabilityType::S);
  CHECK(classify(ModelParams(1, 1, 3, 5)) == StabilityType::S);
  CHECK(classify(ModelParams(1, 1, 5, 6)) == StabilityType::U);
  CHECK(classify(ModelParams(1, 1, 3, 6)) == StabilityType::SU);
  CHECK(classify(ModelParams(1, -1, 3, 4)) == StabilityType::S);
  CHECK(classify(ModelParams(1, -1, 5, 6)) == StabilityType::S);
  CHECK(classify(ModelParams(1, -1, 6, 7)) == StabilityType::US);
  CHECK(classify(ModelParams(-1, 1, 2, 3)) == StabilityType::S);
  CHECK(classify(ModelParams(-1, 1, 1.5, 4)) == StabilityType::S);
  CHECK(classify(ModelParams(-1, 1, 2, 4)) == StabilityType::US);
  CHECK(classify(ModelParams(-1, 1, 2, 5)) == StabilityType::U);
  CHECK(classify(ModelParams(-1, 1, 3, 7)) == StabilityType::U);
  CHECK_THROWS_AS(classify(ModelParams(-1, -1, 2, 3)), NoStandingWaves);
  CHECK(std::string(to_string(StabilityType::SU)) == "SU");
}

TEST_CASE("no sign change for the cubic-quartic model") {
  const auto r = find_omega_crit(ModelParams(-1, 1, 2, 3));
  CHECK(r.status == CriticalStatus::no_sign_change);
  CHECK(r.constant_sign == 1);
  CHECK_FALSE(r.point);
}

TEST_CASE("critical frequency of a US model") {
  const ModelParams m(-1, 1, 2, 4);
  const auto r = find_omega_crit(m);
  REQUIRE(r.status == CriticalStatus::critical);
  const CriticalPoint& c = *r.point;
  CHECK(c.omega_c > 0);
  CHECK(c.bracket_width <= 1e-8 * c.omega_c);
  CHECK(c.j_left < 0);
  CHECK(c.j_right > 0);
  CHECK(c.d2m_sign == 1);
  CHECK(slope(m, c.omega_c * (1 - 1e-6)).j_value < 0);
  CHECK(slope(m, c.omega_c * (1 + 1e-6)).j_value > 0);

  // d^2 M / d omega^2 = d J / d omega at the root
  const double h = 1e-4 * c.omega_c;
  const double fd = (slope(m, c.omega_c + h).j_value - slope(m, c.omega_c - h).j_value) / (2 * h);
  CHECK(c.d2m_value == doctest::Approx(fd).epsilon(1e-5));
}

TEST_CASE("critical frequency of an SU and a bounded-window US model") {
  const ModelParams su(1, 1, 3, 6);
  const auto r = find_omega_crit(su);
  REQUIRE(r.status == CriticalStatus::critical);
  CHECK(r.point->j_left > 0);
  CHECK(r.point->j_right < 0);
  CHECK(r.point->d2m_sign == -1);

  const ModelParams us(1, -1, 6, 7);
  const auto b = find_omega_crit(us);
  REQUIRE(b.status == CriticalStatus::critical);
  CHECK(b.point->omega_c < frequency_window(us).omega_star.value());
  CHECK(b.point->j_left < 0);
  CHECK(b.point->j_right > 0);
}

TEST_CASE("doubling cap for an always-unstable model") {
  const auto r = find_omega_crit(ModelParams(-1, 1, 2, 5.5));
  CHECK(r.status == CriticalStatus::cap_exceeded);
  CHECK(r.constant_sign == -1);
  CHECK(r.omega_reached > 1e10);
}

TEST_CASE("bisection tolerance is honoured") {
  CriticalSearchOptions opts;
  opts.rel_tol = 1e-4;
  const auto coarse = find_omega_crit(ModelParams(-1, 1, 2, 4), opts);
  const auto fine = find_omega_crit(ModelParams(-1, 1, 2, 4));
  REQUIRE(coarse.point);
  CHECK(coarse.point->bracket_width <= 1e-4 * coarse.point->omega_c);
  CHECK(coarse.point->omega_c == doctest::Approx(fine.point->omega_c).epsilon(2e-4));
}

TEST_CASE("regime gamma") {
  CHECK(regime_gamma(ModelParams(1, 1, 3, 6)) == 2.0);
  CHECK(regime_gamma(ModelParams(1, -1, 3, 4)) == 2.0);
  CHECK(regime_gamma(ModelParams(1, -1, 6, 7)) == 2.0);
  CHECK(regime_gamma(ModelParams(-1, 1, 2, 4)) == 2.5);
  CHECK(regime_gamma(ModelParams(-1, 1, 2, 2.5)) == doctest::Approx(2.5));
}

TEST_CASE("sampled sign pattern agrees with the classifier") {
  const ModelParams models[] = {ModelParams(-1, 1, 2, 3), ModelParams(-1, 1, 2, 4),
                                ModelParams(1, 1, 3, 6), ModelParams(1, -1, 6, 7),
                                ModelParams(1, 1, 6, 7)};
  for (const auto& m : models) {
    std::vector<int> signs;
    for (double omega : testsupport::scan_frequencies(m, 40)) {
      const double j = slope(m, omega).j_value;
      signs.push_back(j > 0 ? 1 : (j < 0 ? -1 : 0));
    }
    CHECK(testsupport::sign_pattern(signs) == to_string(classify(m)));
  }
}

TEST_CASE("lowest reliable frequency") {
  CHECK(lowest_reliable_omega(ModelParams(-1, 1, 2, 4)) > 0);
  CHECK(lowest_reliable_omega(ModelParams(1, 1, 2, 4)) <= 1e-8 * std::max(1.0, omega_scale(ModelParams(1, 1, 2, 4))));
}

TEST_CASE("critical frequency far below the lowest reliable frequency") {
  // Just above p = 7/3 the slope is positive at omega0 and turns negative near 1e-32.
  const ModelParams m(-1, 1, 2.34, 2.35);
  CHECK(slope(m, lowest_reliable_omega(m)).j_value > 0);
  const auto r = find_omega_crit(m);
  REQUIRE(r.status == CriticalStatus::critical);
  const double w = r.point->omega_c;
  CHECK(w < lowest_reliable_omega(m));
  CHECK(r.point->bracket_width <= 1e-8 * w);
  CHECK(slope(m, w * 0.99).j_value < 0);
  CHECK(slope(m, w * 1.01).j_value > 0);
}

TEST_CASE("second derivative at a root next to the lower end of the branch") {
  const auto r = find_omega_crit(ModelParams(-1, 1, 2.32, 2.38));
  REQUIRE(r.status == CriticalStatus::critical);
  CHECK(r.point->omega_c < 1e-20);
  CHECK(std::isfinite(r.point->d2m_value));
  CHECK(r.point->d2m_sign != 0);
}
