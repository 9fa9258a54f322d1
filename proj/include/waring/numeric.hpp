#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace waring {

using Int = mpz_class;
using Rat = mpq_class;

// Floor of the k-th root, by binary search on arbitrary-precision integers.
// Exact: result r satisfies r^k <= n < (r+1)^k.
Int kth_root_floor(const Int& n, int k);

Int ipow(const Int& base, unsigned long exp);

// Smallest integer >= q.
Int ceil_rat(const Rat& q);

inline double to_double(const Rat& q) { return q.get_d(); }

// Slack used when comparing exact rationals against transcendental values.
inline constexpr double kComparisonSlack = 1e-12;

// Kahan-compensated accumulator for complex sums.
class CompensatedComplex {
 public:
  void add(std::complex<double> x) {
    add_part(x.real(), re_, re_c_);
    add_part(x.imag(), im_, im_c_);
  }
  std::complex<double> value() const { return {re_, im_}; }
  double compensation_bound() const { return std::abs(re_c_) + std::abs(im_c_); }

 private:
  static void add_part(double x, double& sum, double& c) {
    double y = x - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  double re_ = 0, im_ = 0, re_c_ = 0, im_c_ = 0;
};

// Kahan-compensated accumulator for real sums (used for long harmonic scans).
class CompensatedReal {
 public:
  void add(double x) {
    double y = x - c_;
    double t = sum_ + y;
    c_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0, c_ = 0;
};

}  // namespace waring
