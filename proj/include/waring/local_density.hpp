#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "waring/core.hpp"
#include "waring/errors.hpp"

namespace waring {

inline constexpr int64_t kDefaultModulusCap = 100'000;

// Exact count M_n(p^nu) of solutions of
//   x_1^{k_1} + ... + x_s^{k_s} == n (mod p^nu),  x_i in [1, p^nu],
// via per-variable power-residue histograms convolved over Z/p^nu.
Int count_congruence(const ExponentSequence& ks, const Int& n, int64_t p, int nu,
                     int64_t modulus_cap = kDefaultModulusCap);

// All residues at once: entry m of the result is M_m(p^nu).
std::vector<Int> count_congruence_all(const ExponentSequence& ks, int64_t p, int nu,
                                      int64_t modulus_cap = kDefaultModulusCap);

struct LocalFactorRow {
  int nu = 0;
  Int m_count;     // M_n(p^nu)
  Rat normalized;  // p^{(1-s)nu} M_n(p^nu)
  Int u;           // U_n(p^nu)
};

// The exact ladder for one prime. The reported chi_p is the last ladder
// value; stabilization is a heuristic flag, never a claim about the limit.
struct LocalFactorTable {
  int64_t p = 0;
  Int n;
  std::vector<LocalFactorRow> rows;  // nu = 0 .. nu_max
  double chi_estimate = 0;
  bool stabilized = false;
  int tail_start = 0;  // first nu with relative change < 1e-3, or nu_max+1
};

LocalFactorTable euler_factor(const ExponentSequence& ks, const Int& n, int64_t p, int nu_max,
                              int64_t modulus_cap = kDefaultModulusCap);

// U_n(p^V) from the M-ladder: p^V M_n(p^V) - p^{V+s-1} M_n(p^{V-1}).
// Extended to general q by multiplicativity.
Int u_n_exact(const ExponentSequence& ks, const Int& n, int64_t q,
              int64_t modulus_cap = kDefaultModulusCap);

// Complex-sum route: sum over a coprime to q of S_1...S_s e(-na/q).
std::complex<double> u_n_complex(const ExponentSequence& ks, const Int& n, int64_t q);

struct DualUn {
  Int exact;
  std::complex<double> approx;
};

// Both routes; throws IntegrityError if the complex evaluation does not
// round to the exact integer within 1e-6 * q^{s/2+1}.
DualUn u_n(const ExponentSequence& ks, const Int& n, int64_t q,
           int64_t modulus_cap = kDefaultModulusCap);

struct SingularSeriesResult {
  Rat exact;         // sum_{q<=X} q^{-s} U_n(q), exact
  double value = 0;
  double delta = 0;  // theta - 2, the reported tail exponent
  std::vector<std::pair<int64_t, double>> terms;  // (q, q^{-s} U_n(q))
  double last_block_max = 0;  // max |term| over q in (X/2, X]
};

// Truncated singular series via multiplicative assembly from prime-power
// tables. Requires theta > 2.
SingularSeriesResult singular_series(const ExponentSequence& ks, const Int& n, int64_t X,
                                     int64_t modulus_cap = kDefaultModulusCap);

// Bulk evaluator: precomputes U tables for every prime power <= X so the
// truncated series can be read off cheaply for many n (window statistics).
class SingularSeriesEvaluator {
 public:
  SingularSeriesEvaluator(ExponentSequence ks, int64_t X,
                          int64_t modulus_cap = kDefaultModulusCap);

  double evaluate(const Int& n) const;
  int64_t truncation() const { return X_; }

 private:
  ExponentSequence ks_;
  int64_t X_;
  // For q = 1..X with q a prime power p^v: U_n(p^v) indexed by n mod p^v.
  // Empty vector for q not a prime power.
  std::vector<std::vector<double>> prime_power_u_;
  std::vector<std::vector<int64_t>> factorizations_;  // prime-power parts of q
};

struct SolubilityCertificate {
  int64_t p = 0;
  int lambda = 0;  // p^lambda || gcd(k_1..k_s)
  int tau = 0;     // 1 for odd p, 2 for p = 2
  int j = 0;       // 0-based witness index with p^lambda || k_j
  Int modulus;     // p^{lambda+tau}
  std::vector<int64_t> solution;  // x_i in [1, p^{lambda+tau}], x_j a unit
};

// A concrete solution of the unit congruence mod p^{lambda+tau}. Under the
// hypotheses s >= 4 k_1 and theta > 2 a certificate always exists; failure
// to find one is reported as an IntegrityError.
SolubilityCertificate solve_unit_congruence(const ExponentSequence& ks, const Int& n, int64_t p);

struct PositivityRow {
  int64_t p = 0;
  double chi_p = 0;
  double lower_bound = 0;  // p^{-(lambda+tau)(s-1)}
  SolubilityCertificate certificate;
};

struct PositivityReport {
  double sigma_truncated = 0;     // Sigma(n; X)
  double chi_product = 0;         // prod_{p <= p_cut} chi_p
  double witness_lower_bound = 0; // prod_{p <= p_cut} p^{-(lambda+tau)(s-1)}
  std::vector<PositivityRow> rows;
};

PositivityReport sigma_positivity_report(const ExponentSequence& ks, const Int& n, int64_t X,
                                         int64_t p_cut = 13,
                                         int64_t modulus_cap = kDefaultModulusCap);

}  // namespace waring
