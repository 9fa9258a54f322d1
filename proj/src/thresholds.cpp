#include "waring/thresholds.hpp"

#include <cmath>
#include <stdexcept>

#include "waring/exponents.hpp"

namespace waring {

namespace {

void finish_report(ThresholdReport& r, bool strict) {
  r.margin = r.lhs - r.rhs;
  r.holds = strict ? r.margin > kComparisonSlack : r.margin > -kComparisonSlack;
  r.knife_edge = std::abs(r.margin) < 1e-9;
}

ThresholdReport scan_min_s(std::string rule, const ExponentGenerator& gen, long long scan_limit,
                           long long sum_start, double rhs, bool strict, long long s_floor) {
  ThresholdReport report;
  report.rule = std::move(rule);
  report.rhs = rhs;
  CompensatedReal lhs;
  int prev_k = 2;
  for (long long s = 1; s <= scan_limit; ++s) {
    const int k = gen(s);
    if (k < prev_k || k < 2)
      throw std::invalid_argument("exponent generator must yield nondecreasing values >= 2");
    prev_k = k;
    if (s >= sum_start) lhs.add(1.0 / k);
    if (s < s_floor) continue;
    report.lhs = lhs.value();
    finish_report(report, strict);
    if (report.holds) {
      report.min_s = s;
      return report;
    }
  }
  report.min_s.reset();
  report.holds = false;
  return report;
}

}  // namespace

ThresholdReport thm11_min_s(const ExponentGenerator& gen, long long scan_limit) {
  const int k1 = gen(1);
  const int k2 = gen(2);
  const double rhs = 2.0 * std::log(static_cast<double>(k1)) + 1.0 / k2 + 3.20032;
  return scan_min_s("thm11", gen, scan_limit, /*sum_start=*/3, rhs, /*strict=*/true,
                    /*s_floor=*/3);
}

ThresholdReport cor12_min_s(long long j, const ExponentGenerator& gen, long long scan_limit) {
  if (j < 1) throw std::invalid_argument("cor12_min_s: j must be >= 1");
  const int kj = gen(j);
  const double rhs = 2.0 * std::log(static_cast<double>(kj)) + 4.71;
  // Re-index so the scan sums 1/k_i from i = j upward; s counts terms.
  ExponentGenerator shifted = [&gen, j](long long s) { return gen(j + s - 1); };
  return scan_min_s("cor12", shifted, scan_limit, /*sum_start=*/1, rhs, /*strict=*/false,
                    /*s_floor=*/1);
}

std::pair<ThresholdReport, MinorArcMargin> eq49_check(const ExponentSequence& ks) {
  if (ks.size() < 2) throw std::invalid_argument("eq49_check: need s >= 2");
  ThresholdReport report;
  report.rule = "eq49";
  MinorArcMargin margin;
  margin.phi1 = 0;
  for (int i = 1; i < ks.size(); ++i) margin.phi1 += Rat(1, ks[i]);
  margin.phi1.canonicalize();
  const int k1 = ks[0];
  const int k2 = ks[1];
  report.lhs = to_double(margin.phi1);
  report.rhs = 2.0 * std::log(static_cast<double>(k1)) + 2.0 / k2 + 1.0 + std::log(2.0 * kWeylD);
  finish_report(report, /*strict=*/true);
  report.min_s = ks.size();

  margin.theta1 = std::exp(1.0 - to_double(margin.phi1) + 2.0 / k2);
  margin.omega_exp = 1.0 / (kWeylD * k1 * k1);
  margin.delta = (margin.omega_exp - 2.0 * margin.theta1) / 15.0;
  for (int i = 1; i < ks.size(); ++i)
    margin.weights.push_back(ks[i] * to_double(margin.phi1));
  return {report, margin};
}

Int thm13_bound(int k, int r) {
  if (k < 2) throw std::invalid_argument("thm13_bound: k must be >= 2");
  if (r < 1) throw std::invalid_argument("thm13_bound: r must be >= 1");
  // A(r) (k+1)^{r+1} as an exact rational; the bound on a variable count is
  // its ceiling.
  Rat a(ipow(Int(25), static_cast<unsigned long>(r)) *
            ipow(Int(r + 1), static_cast<unsigned long>(r + 1)),
        Int(r));
  a.canonicalize();
  Rat bound = a * Rat(ipow(Int(k + 1), static_cast<unsigned long>(r + 1)));
  Int result = ceil_rat(bound);
  if (r >= k) {
    Int alt = ipow(Int(6 * k + 6), static_cast<unsigned long>(2 * r));
    if (alt < result) result = alt;
  }
  return result;
}

ThresholdReport eq55_check(int k, int r, long long s) {
  if (k < 2 || r < 1 || s < 1) throw std::invalid_argument("eq55_check: need k >= 2, r >= 1, s >= 1");
  ThresholdReport report;
  report.rule = "eq55";
  const double kr1 = static_cast<double>(k) * (r + 1);
  report.lhs = 1.0 / (kWeylD * kr1);
  report.rhs = 2.0 * std::exp(1.0 + 2.0 / kr1) *
               std::pow(kr1 / (k + static_cast<double>(r) * s), 1.0 / r);
  finish_report(report, /*strict=*/true);
  report.min_s = s;
  return report;
}

ThresholdReport cor44_check(int k, int r, long long s) {
  if (k < 2 || r < 1 || s < 1)
    throw std::invalid_argument("cor44_check: need k >= 2, r >= 1, s >= 1");
  ThresholdReport report;
  report.rule = "cor44";
  report.lhs = std::log((k + static_cast<double>(r) * s) / (k + static_cast<double>(r))) / r;
  report.rhs = 2.0 * std::log(static_cast<double>(k)) + 2.0 / (k + r) + 1.0 +
               std::log(2.0 * kWeylD);
  finish_report(report, /*strict=*/false);
  report.min_s = s;
  return report;
}

Theta2Margin theta2_margin(int k, int r, long long s) {
  if (k < 2 || r < 1) throw std::invalid_argument("theta2_margin: need k >= 2, r >= 1");
  if (s <= k) throw std::invalid_argument("theta2_margin: need s > k");
  Theta2Margin m;
  m.phi2 = 0;
  for (long long i = k + 1; i <= s; ++i) {
    const long ki = static_cast<long>(k + static_cast<long long>(r) * (i - 1));
    m.phi2 += Rat(Int(1), Int(ki));
  }
  m.phi2.canonicalize();
  const double kr1 = static_cast<double>(k) * (r + 1);
  m.theta2 = std::exp(1.0 - to_double(m.phi2) + 2.0 / kr1);
  m.bound = 1.0 / (kWeylD * kr1);
  m.passes = 2.0 * m.theta2 < m.bound;
  return m;
}

}  // namespace waring
