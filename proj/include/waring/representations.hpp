#pragma once

#include <cstdint>
#include <vector>

#include "waring/core.hpp"
#include "waring/errors.hpp"

namespace waring {

enum class CountMethod { Naive, MeetInMiddle, Convolution };

struct CountResult {
  Int count;
  CountMethod method = CountMethod::Naive;
};

// Number of tuples (x_1, ..., x_s) of positive integers with
// sum_i x_i^{k_i} = n; when eta < 1 each x_i is additionally required to be
// P_i^eta-smooth with P_i = floor(n^{1/k_i}). All three methods count the
// same set; tests pin them against each other.
CountResult count_representations(const ProblemInstance& inst,
                                  CountMethod method = CountMethod::MeetInMiddle);

inline constexpr int64_t kDefaultWindowCap = int64_t{1} << 27;  // dp entries

// Counts for every n in [n_lo, n_lo + len), by iterated exact convolution
// over the variables. Counters are 64-bit with overflow detection. When
// eta < 1 the smoothness bound is taken from the top of the window.
std::vector<uint64_t> count_window(const ExponentSequence& ks, int64_t n_lo, int64_t len,
                                   double eta = 1.0, int64_t window_cap = kDefaultWindowCap);

struct ExceptionalScanResult {
  std::vector<int64_t> zeros;  // n in [1, limit] with no representation
  int64_t largest = 0;         // 0 when the zero set is empty
  int64_t limit = 0;
};

ExceptionalScanResult exceptional_scan(const ExponentSequence& ks, int64_t limit,
                                       double eta = 1.0);

struct WindowComparison {
  int64_t n_lo = 0;
  int64_t len = 0;
  double mean_ratio = 0;    // empirical / predicted, over n with predicted > 0
  double median_ratio = 0;
  double min_ratio = 0;
  double max_ratio = 0;
  int64_t compared = 0;
  std::vector<double> ratios;  // in n order
};

// Empirical window counts against the Gamma-term * truncated-singular-series
// prediction (sigma truncated at q <= sigma_X).
WindowComparison empirical_vs_prediction(const ExponentSequence& ks, int64_t n_lo, int64_t len,
                                         int64_t sigma_X, double eta = 1.0);

}  // namespace waring
