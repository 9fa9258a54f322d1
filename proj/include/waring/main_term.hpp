#pragma once

#include <cstdint>

#include "waring/core.hpp"

namespace waring {

// Gamma-product main term: prod_i Gamma(1 + 1/k_i) / Gamma(theta) * n^{theta-1}.
double gamma_main_term(const ExponentSequence& ks, const Int& n);

struct JIntegralResult {
  double value = 0;        // J(n; X), the truncated central integral
  double gamma_value = 0;  // the Gamma-product main term at the same n
  double ratio = 0;        // value / gamma_value
  double cut = 0;          // integration half-width X/n
  int64_t evaluations = 0;
  double tolerance = 0;    // relative tolerance actually requested
};

// J(n; X) = integral over |beta| <= X/n of prod_i v_i(beta) e(-beta n),
// where v_i(beta) = (1/k_i) sum_{m<=n} m^{-1+1/k_i} e(beta m). Evaluated by
// adaptive Simpson on [0, X/n] using conjugate symmetry; power weights are
// cached per distinct exponent.
JIntegralResult j_truncated(const ExponentSequence& ks, const Int& n, double X,
                            double tol = 1e-4);

// The full-circle value of the same integrand: by Fourier inversion it
// equals sum over m_1+...+m_s = n (m_i >= 1) of prod_i (1/k_i) m_i^{-1+1/k_i},
// computed exactly (up to double rounding) by iterated convolution. This is
// the limit of j_truncated as X -> n/2 and the reference for X-convergence
// tests.
double j_full_reference(const ExponentSequence& ks, const Int& n);

struct Prediction {
  double main_term = 0;  // Gamma product * n^{theta-1}
  double sigma = 0;      // truncated singular series, supplied by the caller
  double c_power = 0;    // smooth-density correction, exactly 1 when eta = 1
  double value = 0;      // product of the three
};

Prediction predict_count(const ProblemInstance& inst, double sigma);

}  // namespace waring
