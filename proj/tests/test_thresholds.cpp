#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "waring/exponents.hpp"
#include "waring/thresholds.hpp"

using namespace waring;

namespace {

const ExponentGenerator kConst2 = [](long long) { return 2; };
const ExponentGenerator kConst3 = [](long long) { return 3; };
const ExponentGenerator kShifted = [](long long i) { return static_cast<int>(i + 1); };

}  // namespace

TEST_CASE("sufficiency scan, constant exponent 2: frozen answers") {
  ThresholdReport t = thm11_min_s(kConst2);
  REQUIRE(t.min_s.has_value());
  CHECK(*t.min_s == 13);  // (s-2)/2 > 2 log 2 + 1/2 + 3.20032 = 5.08661...
  CHECK(t.holds);

  ThresholdReport c = cor12_min_s(1, kConst2);
  REQUIRE(c.min_s.has_value());
  CHECK(*c.min_s == 13);  // s/2 >= 2 log 2 + 4.71 = 6.09629...
}

TEST_CASE("sufficiency scan, constant exponent 3") {
  ThresholdReport c = cor12_min_s(1, kConst3);
  REQUIRE(c.min_s.has_value());
  CHECK(*c.min_s == 21);  // s/3 >= 2 log 3 + 4.71 = 6.90722...
}

TEST_CASE("growing exponents k_i = i+1: frozen answer plus harmonic oracle") {
  ThresholdReport t = thm11_min_s(kShifted);
  REQUIRE(t.min_s.has_value());
  CHECK(*t.min_s == 480);
  // Independent oracle: direct partial sums of 1/(i+1) from i = 3.
  const double rhs = 2.0 * std::log(2.0) + 1.0 / 3.0 + 3.20032;
  double at_479 = 0, at_480 = 0;
  for (long long i = 3; i <= 480; ++i) {
    if (i <= 479) at_479 += 1.0 / (i + 1);
    at_480 += 1.0 / (i + 1);
  }
  CHECK(at_479 <= rhs);
  CHECK(at_480 > rhs);
}

TEST_CASE("minimality: the scan answer fails at s-1") {
  for (const auto* gen : {&kConst2, &kConst3, &kShifted}) {
    ThresholdReport t = thm11_min_s(*gen);
    REQUIRE(t.min_s.has_value());
    double sum = 0;
    for (long long i = 3; i < *t.min_s; ++i) sum += 1.0 / (*gen)(i);
    CHECK(sum <= t.rhs);
  }
}

TEST_CASE("cor12 with offset j sums from k_j") {
  // For j = 3 on k_i = i+1 the target is 2 log 4 + 4.71.
  ThresholdReport c = cor12_min_s(3, kShifted);
  REQUIRE(c.min_s.has_value());
  double sum = 0;
  const double rhs = 2.0 * std::log(4.0) + 4.71;
  long long s = 0;
  while (sum < rhs) {
    ++s;
    sum += 1.0 / (3 + s);  // k_{j+s-1} = (j+s-1) + 1
  }
  CHECK(*c.min_s == s);
}

TEST_CASE("generator validation") {
  ExponentGenerator bad = [](long long i) { return i == 5 ? 2 : 3; };
  CHECK_THROWS_AS(thm11_min_s(bad), std::invalid_argument);
}

TEST_CASE("variable-count bound: closed forms") {
  CHECK(thm13_bound(2, 1) == 900);
  CHECK(thm13_bound(2, 2) == 104976);  // 18^4 beats ceil(A(2)*27) = 227813
  CHECK(thm13_bound(3, 1) == 1600);
  // r = 1 collapses to 100 (k+1)^2 for every k.
  for (int k = 2; k <= 50; ++k) CHECK(thm13_bound(k, 1) == Int(100) * (k + 1) * (k + 1));
  CHECK_THROWS_AS(thm13_bound(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(thm13_bound(2, 0), std::invalid_argument);
}

TEST_CASE("fixed-sequence margin check: holds for long sequences only") {
  auto [big, margin_big] = eq49_check(ExponentSequence::constant(3, 60));
  CHECK(big.holds);
  CHECK(margin_big.delta > 0);
  CHECK(margin_big.weights.size() == 59);

  auto [small, margin_small] = eq49_check(ExponentSequence::constant(3, 8));
  CHECK(!small.holds);
  CHECK(margin_small.delta < 0);
}

TEST_CASE("eq49 margin internals: exact phi against a direct sum") {
  ExponentSequence ks({2, 3, 4, 5});
  auto [report, margin] = eq49_check(ks);
  CHECK(margin.phi1 == Rat(1, 3) + Rat(1, 4) + Rat(1, 5));
  CHECK(margin.omega_exp == doctest::Approx(1.0 / (kWeylD * 4.0)).epsilon(1e-15));
  CHECK(report.lhs == doctest::Approx(to_double(margin.phi1)).epsilon(1e-15));
}

TEST_CASE("progression margin: phi2 is the exact tail sum") {
  Theta2Margin m = theta2_margin(3, 1, 20);
  Rat expect = 0;
  for (long long i = 4; i <= 20; ++i) expect += Rat(1, static_cast<int>(3 + (i - 1)));
  CHECK(m.phi2 == expect);
  CHECK(m.passes == (2.0 * m.theta2 < m.bound));
  CHECK_THROWS_AS(theta2_margin(3, 1, 3), std::invalid_argument);
}

TEST_CASE("progression checks move the right way with s") {
  // eq55: the right side shrinks as s grows, so holding is monotone upward.
  bool seen_fail = false, seen_hold = false;
  for (long long s : {10LL, 100LL, 1000LL, 100000LL, 10000000LL}) {
    ThresholdReport r = eq55_check(3, 1, s);
    if (r.holds) seen_hold = true;
    else {
      CHECK(!seen_hold);  // no regression after it starts holding
      seen_fail = true;
    }
  }
  CHECK(seen_fail);
  CHECK(seen_hold);

  ThresholdReport lo = cor44_check(2, 1, 10);
  ThresholdReport hi = cor44_check(2, 1, 100000);
  CHECK(lo.lhs < hi.lhs);
}
