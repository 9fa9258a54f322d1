#pragma once

#include <cstdint>
#include <vector>

namespace waring {

// The set of R-smooth integers in [1, P]: every prime divisor is <= R.
// 1 is always a member (vacuous condition). Immutable once built.
struct SmoothSet {
  int64_t P = 0;
  int64_t R = 0;
  std::vector<int64_t> members;  // ascending

  int64_t cardinality() const { return static_cast<int64_t>(members.size()); }
  bool contains(int64_t n) const;
  double density() const { return static_cast<double>(members.size()) / static_cast<double>(P); }
};

// Sieve by segmented residual division: identical output regardless of
// segment size, which is only a memory knob.
SmoothSet sieve_smooth(int64_t P, int64_t R, int64_t segment_size = int64_t{1} << 22);

// Count |A(P,R)| without materialising the member list.
int64_t smooth_count(int64_t P, int64_t R, int64_t segment_size = int64_t{1} << 22);

// True iff the largest prime factor of n is <= R (largest prime factor of 1
// is taken to be 1).
bool is_smooth(int64_t n, int64_t R);

// cardinality / P, the empirical surrogate for the smooth-density constant.
double smooth_density(int64_t P, int64_t R);

std::vector<int64_t> primes_up_to(int64_t limit);

}  // namespace waring
