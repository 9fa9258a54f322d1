#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "waring/exponents.hpp"

using namespace waring;

TEST_CASE("root solver: defining equation residual and boundary value") {
  for (int k = 2; k <= 12; ++k) {
    CHECK(admissible_delta(k, 0.0) == static_cast<double>(k));
    for (int i = 1; i <= 60; ++i) {
      const double v = 0.05 * i * k;
      const double d = admissible_delta(k, v);
      const double residual = d * std::exp(d / k) - k * std::exp(1.0 - v / k);
      CHECK(std::abs(residual) < 1e-12);
      CHECK(d >= 0.0);
      CHECK(d <= static_cast<double>(k));
    }
  }
}

TEST_CASE("root solver: strictly decreasing in v") {
  for (int k : {2, 5, 10}) {
    double prev = admissible_delta(k, 0.0);
    for (int i = 1; i <= 200; ++i) {
      const double d = admissible_delta(k, 0.02 * i * k);
      CHECK(d < prev);
      prev = d;
    }
  }
}

TEST_CASE("step family: k below the cutoff, 0 at and beyond") {
  AdmissibleFamily fam = AdmissibleFamily::hua(3);
  CHECK(fam.delta(0.0) == 3.0);
  CHECK(fam.delta(7.999) == 3.0);
  CHECK(fam.delta(8.0) == 0.0);
  CHECK(fam.delta(100.0) == 0.0);
}

TEST_CASE("tau exact values for the step family") {
  TauResult t2 = tau(2, AdmissibleFamily::hua(2));
  REQUIRE(t2.exact.has_value());
  CHECK(*t2.exact == Rat(1, 8));
  CHECK(t2.value == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(t2.argmax_w == 2);

  TauResult t3 = tau(3, AdmissibleFamily::hua(3));
  REQUIRE(t3.exact.has_value());
  CHECK(*t3.exact == Rat(3, 64));
  CHECK(t3.argmax_w == 4);
}

TEST_CASE("tau(4) clears the floor constant by a razor-thin margin") {
  TauResult t4 = tau(4, AdmissibleFamily::eq42(4));
  const double floor4 = 1.0 / (kTauFloorC * 4.0);
  // Frozen from a 40-digit independent evaluation of the same optimisation:
  // the margin is ~2.4e-9, so the root solver must be near machine accurate.
  CHECK(t4.value == doctest::Approx(0.027691932154865775).epsilon(1e-12));
  CHECK(t4.value > floor4);
  CHECK(t4.value - floor4 < 1e-8);
  CHECK(t4.argmax_w == 4);
}

TEST_CASE("tau floor holds for every k with the per-k default family") {
  for (int k = 4; k <= 24; ++k) {
    TauResult t = tau(k, default_family(k));
    CHECK(t.value > 1.0 / (kTauFloorC * k));
  }
}

TEST_CASE("omega against tau: omega(k) < 2 tau(k) / k") {
  for (int k = 2; k <= 20; ++k) {
    const double t = tau(k, default_family(k)).value;
    CHECK(omega(k) < 2.0 * t / k);
  }
}

TEST_CASE("omega spot values") {
  CHECK(omega(2) == doctest::Approx(1.0 / (4.51396 * 4.0)).epsilon(1e-15));
  for (int k = 2; k <= 30; ++k) CHECK(omega(k) * kWeylD * k * k == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("delta_star: step family collapses to -t tau past the cutoff") {
  // k=2, s=20: the minimum sits at t = s - 2^k = 16 where Delta_{s-t} first
  // vanishes, giving -16 * (1/8) = -2.
  CHECK(delta_star(2, 20.0, AdmissibleFamily::hua(2)) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("delta_star never exceeds the t = 0 member") {
  for (int k : {2, 3, 4, 6}) {
    AdmissibleFamily fam = default_family(k);
    for (double s : {4.0, 10.0, 33.5}) {
      CHECK(delta_star(k, s, fam) <= fam.delta(s) + 1e-12);
    }
  }
}

TEST_CASE("fixed numeric constants check out") {
  ConstantCheckReport report = constant_checks();
  CHECK(report.ok);
  CHECK(report.lines.size() == 65);  // 1 + 63 + 1
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(admissible_delta(1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(admissible_delta(3, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(tau(1, AdmissibleFamily::hua(1)), std::invalid_argument);
  CHECK_THROWS_AS(delta_star(2, 1.0, AdmissibleFamily::hua(2)), std::invalid_argument);
}
