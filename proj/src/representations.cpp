#include "waring/representations.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "waring/local_density.hpp"
#include "waring/main_term.hpp"
#include "waring/smooth.hpp"

namespace waring {

namespace {

int64_t smooth_bound(int64_t P, double eta) {
  if (eta >= 1.0) return P;  // no restriction: everything <= P is P-smooth
  return std::max<int64_t>(
      2, static_cast<int64_t>(std::floor(std::pow(static_cast<double>(P), eta))));
}

// Admissible values x for one variable: positive, x^k <= n, smooth when
// eta < 1.
std::vector<int64_t> variable_range(int k, const Int& n, double eta) {
  Int p_box = kth_root_floor(n, k);
  if (!p_box.fits_slong_p())
    throw ResourceLimitError("variable range too large to enumerate");
  const int64_t P = p_box.get_si();
  std::vector<int64_t> xs;
  if (eta >= 1.0) {
    xs.resize(static_cast<size_t>(P));
    std::iota(xs.begin(), xs.end(), int64_t{1});
  } else {
    xs = sieve_smooth(P, smooth_bound(P, eta)).members;
  }
  return xs;
}

Int count_naive(const ProblemInstance& inst) {
  const auto& ks = inst.exponents;
  const int s = ks.size();
  Int total = 0;
  // Depth-first over x_1..x_{s-1}; the last variable is solved by an exact
  // root extraction (plus a smoothness check if required).
  std::vector<std::vector<int64_t>> ranges;
  for (int i = 0; i + 1 < s; ++i) ranges.push_back(variable_range(ks[i], inst.n, inst.eta));
  const int k_last = ks[s - 1];
  Int last_box = kth_root_floor(inst.n, k_last);
  const int64_t R_last =
      last_box.fits_slong_p() ? smooth_bound(last_box.get_si(), inst.eta) : 0;

  std::vector<int64_t> stack(static_cast<size_t>(s - 1));
  auto recurse = [&](auto&& self, int depth, const Int& remaining) -> void {
    if (depth == s - 1) {
      if (remaining < 1) return;
      Int root = kth_root_floor(remaining, k_last);
      if (ipow(root, static_cast<unsigned long>(k_last)) != remaining) return;
      if (inst.eta < 1.0 && !is_smooth(root.get_si(), R_last)) return;
      ++total;
      return;
    }
    for (int64_t x : ranges[static_cast<size_t>(depth)]) {
      Int pw = ipow(Int(x), static_cast<unsigned long>(ks[depth]));
      if (pw >= remaining) break;  // need >= 1 left for each later variable
      stack[static_cast<size_t>(depth)] = x;
      self(self, depth + 1, remaining - pw);
    }
  };
  recurse(recurse, 0, inst.n);
  return total;
}

Int count_mitm(const ProblemInstance& inst) {
  const auto& ks = inst.exponents;
  const int s = ks.size();
  if (s == 1) return count_naive(inst);
  std::vector<std::vector<int64_t>> ranges;
  for (int i = 0; i < s; ++i) ranges.push_back(variable_range(ks[i], inst.n, inst.eta));

  // Split so the two half products of range sizes are as balanced as
  // possible (the ranges are already sorted by the nondecreasing k_i, so the
  // prefix has the large ranges; scan all split points).
  double best_cost = std::numeric_limits<double>::infinity();
  int split = 1;
  for (int m = 1; m < s; ++m) {
    double left = 1, right = 1;
    for (int i = 0; i < m; ++i) left *= static_cast<double>(ranges[static_cast<size_t>(i)].size());
    for (int i = m; i < s; ++i)
      right *= static_cast<double>(ranges[static_cast<size_t>(i)].size());
    const double cost = left + right;
    if (cost < best_cost) {
      best_cost = cost;
      split = m;
    }
  }

  // Enumerate partial sums of the first half into a sum -> multiplicity map.
  std::map<Int, Int> half;
  auto fill = [&](auto&& self, int depth, const Int& acc) -> void {
    if (depth == split) {
      ++half[acc];
      return;
    }
    for (int64_t x : ranges[static_cast<size_t>(depth)]) {
      Int pw = ipow(Int(x), static_cast<unsigned long>(ks[depth]));
      Int next = acc + pw;
      if (next >= inst.n) break;  // every later variable contributes >= 1
      self(self, depth + 1, next);
    }
  };
  fill(fill, 0, Int(0));

  Int total = 0;
  auto probe = [&](auto&& self, int depth, const Int& acc) -> void {
    if (depth == s) {
      auto it = half.find(inst.n - acc);
      if (it != half.end()) total += it->second;
      return;
    }
    for (int64_t x : ranges[static_cast<size_t>(depth)]) {
      Int pw = ipow(Int(x), static_cast<unsigned long>(ks[depth]));
      Int next = acc + pw;
      if (next > inst.n) break;
      self(self, depth + 1, next);
    }
  };
  probe(probe, split, Int(0));
  return total;
}

void checked_add(uint64_t& dst, uint64_t inc) {
  if (__builtin_add_overflow(dst, inc, &dst))
    throw ResourceLimitError("representation counter overflowed 64 bits");
}

}  // namespace

std::vector<uint64_t> count_window(const ExponentSequence& ks, int64_t n_lo, int64_t len,
                                   double eta, int64_t window_cap) {
  if (n_lo < 1 || len < 1) throw std::invalid_argument("count_window: need n_lo >= 1, len >= 1");
  const int64_t n_hi = n_lo + len - 1;
  if (n_hi + 1 > window_cap)
    throw ResourceLimitError("count_window: dp table of " + std::to_string(n_hi + 1) +
                             " entries exceeds the cap");
  // dp over sums in [0, n_hi]; one convolution pass per variable.
  std::vector<uint64_t> dp(static_cast<size_t>(n_hi) + 1, 0);
  dp[0] = 1;
  for (int k : ks) {
    std::vector<uint64_t> next(dp.size(), 0);
    std::vector<int64_t> xs = variable_range(k, Int(n_hi), eta);
    for (int64_t x : xs) {
      Int pw_z = ipow(Int(x), static_cast<unsigned long>(k));
      if (pw_z > n_hi) break;
      const int64_t pw = pw_z.get_si();
      for (int64_t m = 0; m + pw <= n_hi; ++m) {
        if (dp[static_cast<size_t>(m)] == 0) continue;
        checked_add(next[static_cast<size_t>(m + pw)], dp[static_cast<size_t>(m)]);
      }
    }
    dp.swap(next);
  }
  return {dp.begin() + n_lo, dp.end()};
}

CountResult count_representations(const ProblemInstance& inst, CountMethod method) {
  CountResult result;
  result.method = method;
  switch (method) {
    case CountMethod::Naive:
      result.count = count_naive(inst);
      break;
    case CountMethod::MeetInMiddle:
      result.count = count_mitm(inst);
      break;
    case CountMethod::Convolution: {
      if (!inst.n.fits_slong_p())
        throw ResourceLimitError("convolution counting needs n to fit in 64 bits");
      const int64_t n = inst.n.get_si();
      result.count = Int(count_window(inst.exponents, n, 1, inst.eta).front());
      break;
    }
  }
  return result;
}

ExceptionalScanResult exceptional_scan(const ExponentSequence& ks, int64_t limit, double eta) {
  ExceptionalScanResult result;
  result.limit = limit;
  std::vector<uint64_t> counts = count_window(ks, 1, limit, eta);
  for (int64_t n = 1; n <= limit; ++n) {
    if (counts[static_cast<size_t>(n - 1)] == 0) {
      result.zeros.push_back(n);
      result.largest = n;
    }
  }
  return result;
}

WindowComparison empirical_vs_prediction(const ExponentSequence& ks, int64_t n_lo, int64_t len,
                                         int64_t sigma_X, double eta) {
  WindowComparison cmp;
  cmp.n_lo = n_lo;
  cmp.len = len;
  std::vector<uint64_t> counts = count_window(ks, n_lo, len, eta);
  SingularSeriesEvaluator sigma(ks, sigma_X);
  std::vector<double> ratios;
  double sum = 0;
  cmp.min_ratio = std::numeric_limits<double>::infinity();
  cmp.max_ratio = 0;
  for (int64_t n = n_lo; n < n_lo + len; ++n) {
    ProblemInstance inst(ks, Int(n), eta);
    Prediction pred = predict_count(inst, sigma.evaluate(Int(n)));
    if (!(pred.value > 0)) continue;
    const double ratio =
        static_cast<double>(counts[static_cast<size_t>(n - n_lo)]) / pred.value;
    ratios.push_back(ratio);
    cmp.ratios.push_back(ratio);
    sum += ratio;
    cmp.min_ratio = std::min(cmp.min_ratio, ratio);
    cmp.max_ratio = std::max(cmp.max_ratio, ratio);
  }
  cmp.compared = static_cast<int64_t>(ratios.size());
  if (!ratios.empty()) {
    cmp.mean_ratio = sum / static_cast<double>(ratios.size());
    std::nth_element(ratios.begin(), ratios.begin() + ratios.size() / 2, ratios.end());
    cmp.median_ratio = ratios[ratios.size() / 2];
  } else {
    cmp.min_ratio = 0;
  }
  return cmp;
}

}  // namespace waring
