#include "waring/weyl.hpp"

#include "waring/exponents.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace waring {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

std::complex<double> unit_phase(double frac) {  // e(frac), frac in [0,1)
  return {std::cos(kTwoPi * frac), std::sin(kTwoPi * frac)};
}

// splitmix64; used to derive independent per-sample seeds.
uint64_t mix_seed(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

Rat frac_mod1(const Rat& x) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  Rat r = x - Rat(fl);
  r.canonicalize();
  return r;
}

BestApprox best_approx(const Rat& alpha, const Int& q_max) {
  if (q_max < 1) throw std::invalid_argument("best_approx: q_max must be >= 1");
  Int num = alpha.get_num(), den = alpha.get_den();
  // Continued-fraction convergents p_i/q_i of num/den.
  Int p_prev = 0, q_prev = 1;  // p_{-2}/q_{-2}
  Int p = 1, q = 0;            // p_{-1}/q_{-1}; p_0/q_0 lands on the first step
  bool have = false;
  while (den != 0) {
    Int a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int p_next = a * p + p_prev;
    Int q_next = a * q + q_prev;
    if (have && q_next > q_max) break;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    have = true;
    num = den;
    den = r;
  }
  BestApprox out;
  out.q = q;
  out.a = p;
  Rat err = Rat(q) * alpha - Rat(p);
  if (err < 0) err = -err;
  err.canonicalize();
  out.error = err;
  return out;
}

Rat canonical_alpha(double alpha, int64_t max_den) {
  Rat exact(alpha);  // doubles are exact dyadic rationals
  exact.canonicalize();
  Rat reduced = frac_mod1(exact);
  if (reduced.get_den() <= max_den) return reduced;
  BestApprox approx = best_approx(reduced, Int(max_den));
  Rat out(approx.a, approx.q);
  out.canonicalize();
  return frac_mod1(out);
}

ArcPoint lambda_height(const Rat& alpha, const Int& P, int k) {
  if (P < 1 || k < 1) throw std::invalid_argument("lambda_height: need P >= 1, k >= 1");
  ArcPoint point;
  point.alpha = alpha;
  point.P = P;
  point.k = k;
  const Int pk = ipow(P, static_cast<unsigned long>(k));
  // Dirichlet quality: largest convergent with q^2 <= P^k, so q <= P^{k/2}
  // and |q*alpha - a| <= P^{-k/2}.
  Int num = alpha.get_num(), den = alpha.get_den();
  Int p_prev = 0, q_prev = 1;
  Int p = 1, q = 0;
  bool have = false;
  while (den != 0) {
    Int a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int p_next = a * p + p_prev;
    Int q_next = a * q + q_prev;
    if (have && q_next * q_next > pk) break;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    have = true;
    num = den;
    den = r;
  }
  point.q = q;
  point.a = p;
  Rat err = Rat(q) * alpha - Rat(p);
  if (err < 0) err = -err;
  point.lambda_exact = Rat(q) + Rat(pk) * err;
  point.lambda_exact.canonicalize();
  point.lambda = to_double(point.lambda_exact);
  return point;
}

ArcLabel classify_arc(const Rat& alpha, const Int& P, int k, const Rat& Q) {
  if (Q < 1) throw std::invalid_argument("classify_arc: need Q >= 1");
  const Int pk = ipow(P, static_cast<unsigned long>(k));
  if (Rat(Q) * Q > Rat(pk)) throw std::invalid_argument("classify_arc: need Q <= P^{k/2}");
  ArcLabel label;
  label.Q = Q;
  Int q_cap;
  mpz_fdiv_q(q_cap.get_mpz_t(), Q.get_num().get_mpz_t(), Q.get_den().get_mpz_t());
  BestApprox approx = best_approx(frac_mod1(alpha), q_cap);
  // The convergent minimises |q*alpha - a| over q <= floor(Q); if even that
  // misses the width Q/P^k, no admissible (q, a) exists.
  if (approx.error * Rat(pk) <= Q) {
    label.major = true;
    label.q = approx.q;
    label.a = approx.a;
  }
  return label;
}

SumValue smooth_weyl_sum(const Rat& alpha, const SmoothSet& set, int k) {
  if (k < 1) throw std::invalid_argument("smooth_weyl_sum: k must be >= 1");
  const Rat a = frac_mod1(alpha);
  const Int& den_z = a.get_den();
  const Int& num_z = a.get_num();
  SumValue out;
  out.terms = set.cardinality();
  CompensatedComplex acc;
  const bool fast = den_z.fits_ulong_p() != 0;
  const uint64_t den_u = fast ? den_z.get_ui() : 0;
  const uint64_t num_u = fast ? num_z.get_ui() % std::max<uint64_t>(den_u, 1) : 0;
  for (int64_t x : set.members) {
    double frac;
    if (fast) {
      uint64_t r = mulmod_u64(num_u, powmod_u64(static_cast<uint64_t>(x),
                                                static_cast<uint64_t>(k), den_u),
                              den_u);
      frac = static_cast<double>(r) / static_cast<double>(den_u);
    } else {
      Int r = (num_z * ipow(Int(x), static_cast<unsigned long>(k))) % den_z;
      frac = to_double(Rat(r, den_z));
    }
    acc.add(unit_phase(frac));
  }
  out.value = acc.value();
  out.compensation_error = acc.compensation_bound();
  return out;
}

SumValue smooth_weyl_sum(const Rat& alpha, int64_t P, int64_t R, int k) {
  return smooth_weyl_sum(alpha, sieve_smooth(P, R), k);
}

std::complex<double> complete_sum(int64_t q, int64_t a, int k) {
  if (q < 1) throw std::invalid_argument("complete_sum: q must be >= 1");
  const uint64_t qu = static_cast<uint64_t>(q);
  const uint64_t au = static_cast<uint64_t>(((a % q) + q) % q);
  CompensatedComplex acc;
  for (int64_t t = 1; t <= q; ++t) {
    uint64_t r = mulmod_u64(au, powmod_u64(static_cast<uint64_t>(t),
                                           static_cast<uint64_t>(k), qu),
                            qu);
    acc.add(unit_phase(static_cast<double>(r) / static_cast<double>(qu)));
  }
  return acc.value();
}

std::complex<double> v_sum(double beta, int64_t n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("v_sum: need n >= 1, k >= 1");
  const double expo = -1.0 + 1.0 / k;
  CompensatedComplex acc;
  for (int64_t m = 1; m <= n; ++m) {
    long double phase = std::fmod(static_cast<long double>(beta) * m, 1.0L);
    if (phase < 0) phase += 1.0L;
    double w = std::pow(static_cast<double>(m), expo);
    acc.add(w * unit_phase(static_cast<double>(phase)));
  }
  std::complex<double> v = acc.value();
  return v / static_cast<double>(k);
}

WeylBoundDiagnostic weyl_bound_ratio(const Rat& alpha, int64_t P, int64_t R, int k) {
  SmoothSet set = sieve_smooth(P, R);
  return [&] {
    WeylBoundDiagnostic d;
    d.point = lambda_height(frac_mod1(alpha), Int(P), k);
    d.abs_f = std::abs(smooth_weyl_sum(alpha, set, k).value);
    const double lam = d.point.lambda;
    d.envelope = static_cast<double>(P) * std::pow(lam, -omega(k));
    d.ratio = d.abs_f / d.envelope;
    return d;
  }();
}

MinorArcScanResult minor_arc_sup_scan(int64_t P, int64_t R, int k, const Rat& Q,
                                      int64_t n_samples, uint64_t seed) {
  const Int pk = ipow(Int(P), static_cast<unsigned long>(k));
  if (Q < 1 || Rat(Q) * Q > Rat(pk))
    throw std::invalid_argument("minor_arc_sup_scan: need 1 <= Q <= P^{k/2}");
  MinorArcScanResult result;
  if (Rat(Q) * Q == Rat(pk)) {  // [0,1) = M(P^{k/2}): nothing to sample
    result.vacuous = true;
    return result;
  }
  SmoothSet set = sieve_smooth(P, R);
  const double omega_k = omega(k);
  result.bound =
      static_cast<double>(P) * std::pow(to_double(Q), -omega_k);
  for (int64_t i = 0; i < n_samples; ++i) {
    std::mt19937_64 rng(mix_seed(seed ^ mix_seed(static_cast<uint64_t>(i))));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Rat alpha;
    bool found = false;
    for (int tries = 0; tries < 1'000'000; ++tries) {
      alpha = canonical_alpha(unif(rng));
      if (!classify_arc(alpha, Int(P), k, Q).major) {
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("minor_arc_sup_scan: rejection sampling exhausted");
    WeylBoundDiagnostic d;
    d.point = lambda_height(alpha, Int(P), k);
    d.abs_f = std::abs(smooth_weyl_sum(alpha, set, k).value);
    const double lam = d.point.lambda;
    d.envelope = static_cast<double>(P) * std::pow(lam, -omega_k);
    d.ratio = d.abs_f / d.envelope;
    result.details.push_back(d);
    result.max_abs_f = std::max(result.max_abs_f, d.abs_f);
  }
  result.samples = n_samples;
  result.ratio = result.max_abs_f / result.bound;
  return result;
}

}  // namespace waring
