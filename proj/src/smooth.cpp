#include "waring/smooth.hpp"

#include <algorithm>
#include <stdexcept>

namespace waring {

std::vector<int64_t> primes_up_to(int64_t limit) {
  std::vector<int64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
  for (int64_t i = 2; i <= limit; ++i) {
    if (composite[static_cast<size_t>(i)]) continue;
    primes.push_back(i);
    for (int64_t j = i * i; j <= limit; j += i) composite[static_cast<size_t>(j)] = true;
  }
  return primes;
}

bool SmoothSet::contains(int64_t n) const {
  return std::binary_search(members.begin(), members.end(), n);
}

namespace {

// Visit every R-smooth n in [1, P] in ascending order. Works one segment at
// a time: divide out all prime powers p^e with p <= R from each residual;
// n is smooth exactly when the residual reaches 1.
template <typename Visitor>
void for_each_smooth(int64_t P, int64_t R, int64_t segment_size, Visitor&& visit) {
  if (P < 1) throw std::invalid_argument("sieve_smooth: P must be >= 1");
  if (R < 2) throw std::invalid_argument("sieve_smooth: R must be >= 2");
  if (segment_size < 2) throw std::invalid_argument("sieve_smooth: segment size too small");
  const auto primes = primes_up_to(std::min(P, R));
  std::vector<int64_t> residual;
  for (int64_t lo = 1; lo <= P; lo += segment_size) {
    const int64_t hi = std::min(P + 1, lo + segment_size);  // segment [lo, hi)
    residual.assign(static_cast<size_t>(hi - lo), 0);
    for (int64_t n = lo; n < hi; ++n) residual[static_cast<size_t>(n - lo)] = n;
    for (int64_t p : primes) {
      for (int64_t m = ((lo + p - 1) / p) * p; m < hi; m += p) {
        int64_t& r = residual[static_cast<size_t>(m - lo)];
        while (r % p == 0) r /= p;
      }
    }
    for (int64_t n = lo; n < hi; ++n)
      if (residual[static_cast<size_t>(n - lo)] == 1) visit(n);
  }
}

}  // namespace

SmoothSet sieve_smooth(int64_t P, int64_t R, int64_t segment_size) {
  SmoothSet set;
  set.P = P;
  set.R = R;
  for_each_smooth(P, R, segment_size, [&](int64_t n) { set.members.push_back(n); });
  return set;
}

int64_t smooth_count(int64_t P, int64_t R, int64_t segment_size) {
  int64_t count = 0;
  for_each_smooth(P, R, segment_size, [&](int64_t) { ++count; });
  return count;
}

bool is_smooth(int64_t n, int64_t R) {
  if (n < 1) throw std::invalid_argument("is_smooth: n must be >= 1");
  for (int64_t p = 2; p * p <= n; p = (p == 2 ? 3 : p + 2)) {
    if (n % p != 0) continue;
    if (p > R) return false;
    while (n % p == 0) n /= p;
  }
  return n == 1 || n <= R;
}

double smooth_density(int64_t P, int64_t R) {
  return static_cast<double>(smooth_count(P, R)) / static_cast<double>(P);
}

}  // namespace waring
