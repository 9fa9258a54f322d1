#include "waring/main_term.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "waring/smooth.hpp"

namespace waring {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// One v_i evaluator with its weight table (1/k) m^{-1+1/k} for m = 1..n.
struct VKernel {
  int k;
  std::vector<double> weights;  // index m-1

  std::complex<double> eval(double beta) const {
    CompensatedComplex acc;
    for (size_t i = 0; i < weights.size(); ++i) {
      long double ph = std::fmod(static_cast<long double>(beta) * (i + 1), 1.0L);
      if (ph < 0) ph += 1.0L;
      const double f = static_cast<double>(ph);
      acc.add(weights[i] * std::complex<double>(std::cos(kTwoPi * f), std::sin(kTwoPi * f)));
    }
    return acc.value();
  }
};

}  // namespace

double gamma_main_term(const ExponentSequence& ks, const Int& n) {
  if (n < 1) throw std::invalid_argument("gamma_main_term: n must be >= 1");
  const double theta = to_double(ks.theta());
  double prod = 1.0;
  for (int k : ks) prod *= std::tgamma(1.0 + 1.0 / k);
  const double log_n = std::log(n.get_d());
  return prod / std::tgamma(theta) * std::exp((theta - 1.0) * log_n);
}

JIntegralResult j_truncated(const ExponentSequence& ks, const Int& n, double X, double tol) {
  if (n < 1 || X <= 0) throw std::invalid_argument("j_truncated: need n >= 1, X > 0");
  if (!n.fits_slong_p())
    throw std::invalid_argument("j_truncated: n too large for direct summation");
  const int64_t n_ll = n.get_si();

  // Shared weight tables per distinct exponent; the multiplicity is handled
  // by raising the corresponding v to its power.
  std::map<int, std::pair<VKernel, int>> kernels;  // k -> (kernel, multiplicity)
  for (int k : ks) {
    auto it = kernels.find(k);
    if (it == kernels.end()) {
      VKernel kern;
      kern.k = k;
      kern.weights.resize(static_cast<size_t>(n_ll));
      const double expo = -1.0 + 1.0 / k;
      for (int64_t m = 1; m <= n_ll; ++m)
        kern.weights[static_cast<size_t>(m - 1)] =
            std::pow(static_cast<double>(m), expo) / k;
      kernels.emplace(k, std::make_pair(std::move(kern), 1));
    } else {
      ++it->second.second;
    }
  }

  JIntegralResult result;
  result.cut = X / static_cast<double>(n_ll);
  result.tolerance = tol;

  // prod_i v_i(beta) e(-beta n) has conjugate symmetry in beta, so the
  // integral is twice the real part over [0, X/n].
  auto integrand = [&](double beta) {
    ++result.evaluations;
    std::complex<double> prod = 1.0;
    for (const auto& [k, entry] : kernels) {
      std::complex<double> v = entry.first.eval(beta);
      for (int rep = 0; rep < entry.second; ++rep) prod *= v;
    }
    long double ph = std::fmod(-static_cast<long double>(beta) * n_ll, 1.0L);
    if (ph < 0) ph += 1.0L;
    const double f = static_cast<double>(ph);
    prod *= std::complex<double>(std::cos(kTwoPi * f), std::sin(kTwoPi * f));
    return prod.real();
  };

  // Plain adaptive Simpson with a depth cap; eps is distributed over the
  // recursion in the usual halving pattern.
  std::function<double(double, double, double, double, double, double, double, int)> simpson =
      [&](double a, double b, double fa, double fm, double fb, double whole, double eps,
          int depth) -> double {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = integrand(lm), frm = integrand(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    return simpson(a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           simpson(m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
  };

  result.gamma_value = gamma_main_term(ks, n);
  // The phase e(-beta n) oscillates with period 1/n, so adaptivity alone can
  // alias: seed with base panels several times finer than the period before
  // refining each one.
  const int64_t base_panels = std::max<int64_t>(
      200, static_cast<int64_t>(std::ceil(8.0 * result.cut * static_cast<double>(n_ll))));
  const double h = result.cut / static_cast<double>(base_panels);
  CompensatedReal half_acc;
  double f_left = integrand(0.0);
  for (int64_t i = 0; i < base_panels; ++i) {
    const double a = static_cast<double>(i) * h;
    const double b = a + h;
    const double fb = integrand(b);
    const double fm = integrand(0.5 * (a + b));
    const double whole = h / 6.0 * (f_left + 4.0 * fm + fb);
    const double eps = tol * std::abs(result.gamma_value) / static_cast<double>(base_panels);
    half_acc.add(simpson(a, b, f_left, fm, fb, whole, eps, 12));
    f_left = fb;
  }
  result.value = 2.0 * half_acc.value();
  result.ratio = result.value / result.gamma_value;
  return result;
}

double j_full_reference(const ExponentSequence& ks, const Int& n) {
  if (n < 1) throw std::invalid_argument("j_full_reference: n must be >= 1");
  if (!n.fits_slong_p())
    throw std::invalid_argument("j_full_reference: n too large for convolution");
  const int64_t n_ll = n.get_si();
  // dp[m] = weighted count of m as a sum of the variables processed so far.
  std::vector<double> dp(static_cast<size_t>(n_ll) + 1, 0.0);
  dp[0] = 1.0;
  for (int k : ks) {
    std::vector<double> w(static_cast<size_t>(n_ll) + 1, 0.0);
    const double expo = -1.0 + 1.0 / k;
    for (int64_t m = 1; m <= n_ll; ++m)
      w[static_cast<size_t>(m)] = std::pow(static_cast<double>(m), expo) / k;
    std::vector<double> next(dp.size(), 0.0);
    for (int64_t m = 0; m < n_ll; ++m) {
      const double d = dp[static_cast<size_t>(m)];
      if (d == 0.0) continue;
      for (int64_t x = 1; m + x <= n_ll; ++x)
        next[static_cast<size_t>(m + x)] += d * w[static_cast<size_t>(x)];
    }
    dp.swap(next);
  }
  return dp[static_cast<size_t>(n_ll)];
}

Prediction predict_count(const ProblemInstance& inst, double sigma) {
  Prediction p;
  p.main_term = gamma_main_term(inst.exponents, inst.n);
  p.sigma = sigma;
  if (inst.eta >= 1.0) {
    p.c_power = 1.0;
  } else {
    p.c_power = 1.0;
    for (const Int& box : inst.box_sizes()) {
      if (!box.fits_slong_p())
        throw std::invalid_argument("predict_count: box size too large for density sieve");
      const int64_t P = box.get_si();
      const int64_t R = std::max<int64_t>(
          2, static_cast<int64_t>(std::floor(std::pow(static_cast<double>(P), inst.eta))));
      p.c_power *= smooth_density(P, R);
    }
  }
  p.value = p.main_term * p.sigma * p.c_power;
  return p;
}

}  // namespace waring
