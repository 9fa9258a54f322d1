#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "waring/core.hpp"

namespace waring {

// k_i for 1-based index i; must yield nondecreasing values >= 2.
using ExponentGenerator = std::function<int(long long)>;

inline constexpr long long kDefaultScanLimit = 10'000'000;

// Outcome of a sufficient-s scan or a single rule evaluation.
struct ThresholdReport {
  std::string rule;
  double lhs = 0;  // values at min_s (or at the evaluated s)
  double rhs = 0;
  std::optional<long long> min_s;  // empty: not found within scan limit
  double margin = 0;               // lhs - rhs
  bool holds = false;
  bool knife_edge = false;  // |margin| < 1e-9
};

// The quantities entering the minor-arc margin for an exponent sequence:
// Phi_1 = sum_{i>=2} 1/k_i, Theta_1 = e^{1 - Phi_1 + 2/k_2}, and the
// exponent delta = (1/15)(1/(D k_1^2) - 2 Theta_1).
struct MinorArcMargin {
  Rat phi1;
  double theta1 = 0;
  double omega_exp = 0;  // 1/(D k_1^2)
  double delta = 0;
  std::vector<double> weights;  // t_i = k_i * Phi_1, i = 2..s
};

// Smallest s <= scan_limit with  sum_{i=3}^s 1/k_i > 2 log k_1 + 1/k_2 + 3.20032.
ThresholdReport thm11_min_s(const ExponentGenerator& gen,
                            long long scan_limit = kDefaultScanLimit);

// Smallest s <= scan_limit with  sum_{i=j}^{j+s-1} 1/k_i >= 2 log k_j + 4.71.
ThresholdReport cor12_min_s(long long j, const ExponentGenerator& gen,
                            long long scan_limit = kDefaultScanLimit);

// Evaluate  sum_{i=2}^s 1/k_i > 2 log k_1 + 2/k_2 + 1 + log(2D)  for a fixed
// sequence, together with the associated minor-arc margin. The report holds
// exactly when the margin delta is positive.
std::pair<ThresholdReport, MinorArcMargin> eq49_check(const ExponentSequence& ks);

// ceil(A(r) (k+1)^{r+1}) with A(r) = 25^r (r+1)^{r+1} / r; when r >= k, the
// minimum of that and (6k+6)^{2r}.
Int thm13_bound(int k, int r);

// 2 e^{1+2/(k(r+1))} (k(r+1)/(k+rs))^{1/r}  <  1/(D k (r+1)).
ThresholdReport eq55_check(int k, int r, long long s);

// (1/r) log((k+rs)/(k+r)) >= 2 log k + 2/(k+r) + 1 + log(2D).
ThresholdReport cor44_check(int k, int r, long long s);

struct Theta2Margin {
  Rat phi2;           // sum_{i=k+1}^s 1/k_i, exact
  double theta2 = 0;  // e^{1 - Phi_2 + 2/(k(r+1))}
  double bound = 0;   // 1/(D k (r+1))
  bool passes = false;  // 2*Theta_2 < bound
};

Theta2Margin theta2_margin(int k, int r, long long s);

}  // namespace waring
