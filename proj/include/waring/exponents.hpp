#pragma once

#include <optional>
#include <string>
#include <vector>

#include "waring/numeric.hpp"

namespace waring {

// Constant from the Weyl exponent omega(k) = 1/(D k^2).
inline constexpr double kWeylD = 4.51396;

// Floor constant for tau(k) when k >= 4.
inline constexpr double kTauFloorC = 9.027901;

enum class FamilySource { Hua, WooleyEq42 };

// The unique positive root of  Delta * e^(Delta/k) = k * e^(1 - v/k).
// Bisection on [0, k] followed by Newton polish; residual < 1e-12.
double admissible_delta(int k, double v);

// A family of admissible exponents v -> Delta_v for a fixed k.
//   Hua:        Delta_v = k for v < 2^k, and 0 for v >= 2^k.
//   WooleyEq42: Delta_v is the root computed by admissible_delta.
struct AdmissibleFamily {
  int k;
  FamilySource source;

  double delta(double v) const;

  static AdmissibleFamily hua(int k) { return {k, FamilySource::Hua}; }
  static AdmissibleFamily eq42(int k) { return {k, FamilySource::WooleyEq42}; }
};

// Hua for k in {2, 3}, Eq42 otherwise (the split used to prove the uniform
// Weyl exponent bound).
AdmissibleFamily default_family(int k);

struct TauResult {
  double value = 0;
  long long argmax_w = 0;
  // Set for the Hua family, where the maximum is an exact rational k/4^k.
  std::optional<Rat> exact;
};

// tau(k) = max over natural w of (k - 2*Delta_{2w}) / (4 w^2). The scan
// stops once k/(4 w^2), an upper bound on every later term, falls below the
// current best.
TauResult tau(int k, const AdmissibleFamily& family);

// Delta_s^* = min over 0 <= t <= s-2 of (Delta_{s-t} - t*tau(k)), evaluated
// on the integer grid plus the endpoint, with a step-1/8 refinement pass
// around the discrete argmin.
double delta_star(int k, double s, const AdmissibleFamily& family);

double omega(int k);

struct ConstantCheckReport {
  bool ok = true;
  std::vector<std::string> lines;
};

// Self-test of the fixed numeric constants: 2eD < 25, 2^{1+1/r} e D < 35
// for 2 <= r <= 64, and C < 2D.
ConstantCheckReport constant_checks();

}  // namespace waring
