#include "waring/numeric.hpp"

namespace waring {

Int kth_root_floor(const Int& n, int k) {
  if (n < 0) throw std::invalid_argument("kth_root_floor: n must be nonnegative");
  if (k < 1) throw std::invalid_argument("kth_root_floor: k must be positive");
  if (n <= 1 || k == 1) return n;
  Int lo = 1;
  Int hi = 2;
  while (ipow(hi, k) <= n) hi <<= 1;
  // Invariant: lo^k <= n < hi^k.
  while (hi - lo > 1) {
    Int mid = (lo + hi) >> 1;
    if (ipow(mid, k) <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

}  // namespace waring
