#pragma once

#include <numeric>
#include <vector>

#include "waring/numeric.hpp"

namespace waring {

// A nondecreasing tuple of exponents k_1 <= k_2 <= ... <= k_s, all >= 2,
// together with the derived scalars used throughout: theta = sum 1/k_i and
// the gcd of the exponents.
class ExponentSequence {
 public:
  explicit ExponentSequence(std::vector<int> ks);

  int size() const { return static_cast<int>(ks_.size()); }
  int at(int i) const { return ks_.at(i); }          // 0-based
  int operator[](int i) const { return ks_[i]; }
  const std::vector<int>& values() const { return ks_; }
  auto begin() const { return ks_.begin(); }
  auto end() const { return ks_.end(); }

  const Rat& theta() const { return theta_; }
  int gcd() const { return gcd_; }

  static ExponentSequence constant(int k, int s);

 private:
  std::vector<int> ks_;
  Rat theta_;
  int gcd_;
};

// Exponents in arithmetic progression: k_i = k + r*(i-1).
struct ProgressionSpec {
  int k;  // base exponent, >= 2
  int r;  // common difference, >= 0
  int s;  // length, >= 1
};

ExponentSequence expand_progression(const ProgressionSpec& spec);

// A representation problem instance: the exponents, the target n, and the
// smoothness parameter eta (eta = 1 means no smoothness restriction).
struct ProblemInstance {
  ExponentSequence exponents;
  Int n;
  double eta = 1.0;

  ProblemInstance(ExponentSequence ks, Int target, double eta_param = 1.0);

  // P_i = floor(n^{1/k_i}), computed by exact integer root.
  std::vector<Int> box_sizes() const;
};

}  // namespace waring
