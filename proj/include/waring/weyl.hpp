#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "waring/numeric.hpp"
#include "waring/smooth.hpp"

namespace waring {

// Reduce x into [0, 1).
Rat frac_mod1(const Rat& x);

// Best rational approximation to alpha with denominator <= q_max, from the
// continued-fraction convergents: the returned q minimises |q*alpha - a|
// over 1 <= q <= q_max, and gcd(a, q) = 1.
struct BestApprox {
  Int q;
  Int a;
  Rat error;  // |q*alpha - a|, exact
};
BestApprox best_approx(const Rat& alpha, const Int& q_max);

// Canonicalise a floating alpha to an exact rational with denominator
// bounded by max_den (default 10^9). Arc classification works on the result
// so it is exactly reproducible.
Rat canonical_alpha(double alpha, int64_t max_den = 1'000'000'000);

// alpha with its Dirichlet approximation at quality P^{k/2} and the height
// lambda = q + P^k |q*alpha - a|.
struct ArcPoint {
  Rat alpha;
  Int q;
  Int a;
  Int P;
  int k = 0;
  Rat lambda_exact;
  double lambda = 0;
};

ArcPoint lambda_height(const Rat& alpha, const Int& P, int k);

struct ArcLabel {
  bool major = false;
  Int q;  // witness, valid when major
  Int a;
  Rat Q;
};

// Major iff there exist coprime (q, a) with q <= Q and |q*alpha - a| <= Q/P^k.
// Decided and verified in exact rational arithmetic.
ArcLabel classify_arc(const Rat& alpha, const Int& P, int k, const Rat& Q);

struct SumValue {
  std::complex<double> value;
  int64_t terms = 0;
  double compensation_error = 0;
};

// f(alpha; P, R) = sum over x in A(P, R) of e(alpha x^k). Phases are reduced
// mod 1 in exact rational arithmetic (x^k overflows a double mantissa long
// before P^k does any damage to the term count).
SumValue smooth_weyl_sum(const Rat& alpha, int64_t P, int64_t R, int k);

// Same sum restricted to an explicit member list (avoids re-sieving in scans).
SumValue smooth_weyl_sum(const Rat& alpha, const SmoothSet& set, int k);

// S(q, a) = sum_{t=1}^{q} e(a t^k / q).
std::complex<double> complete_sum(int64_t q, int64_t a, int k);

// v(beta) = (1/k) sum_{m<=n} m^{-1+1/k} e(beta m), truncated at n.
std::complex<double> v_sum(double beta, int64_t n, int k);

struct WeylBoundDiagnostic {
  ArcPoint point;
  double abs_f = 0;
  double envelope = 0;  // P * (lambda^{-1} + lambda P^{-k})^{omega(k)}
  double ratio = 0;
};

// Empirical ratio against the Weyl-type envelope; diagnostic only (the
// implied constant is unknown).
WeylBoundDiagnostic weyl_bound_ratio(const Rat& alpha, int64_t P, int64_t R, int k);

struct MinorArcScanResult {
  bool vacuous = false;  // minor arcs empty (Q = P^{k/2})
  double max_abs_f = 0;
  double bound = 0;  // P * Q^{-omega(k)}
  double ratio = 0;
  int64_t samples = 0;
  std::vector<WeylBoundDiagnostic> details;  // per-sample, in sample order
};

// Deterministic seeded rejection sample of minor-arc points; reports the
// maximum |f| and its ratio to P*Q^{-omega}.
MinorArcScanResult minor_arc_sup_scan(int64_t P, int64_t R, int k, const Rat& Q,
                                      int64_t n_samples, uint64_t seed);

}  // namespace waring
