#include "waring/exponents.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace waring {

double admissible_delta(int k, double v) {
  if (k < 2) throw std::invalid_argument("admissible_delta: k must be >= 2");
  if (v < 0) throw std::invalid_argument("admissible_delta: v must be >= 0");
  if (v == 0) return static_cast<double>(k);  // Delta = k solves k e = k e
  const double kd = static_cast<double>(k);
  const double rhs = kd * std::exp(1.0 - v / kd);
  auto g = [kd](double d) { return d * std::exp(d / kd); };
  // g is strictly increasing on [0, k] with g(0) = 0 and g(k) = k e >= rhs.
  double lo = 0.0, hi = kd;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * kd; ++it) {
    double mid = 0.5 * (lo + hi);
    (g(mid) < rhs ? lo : hi) = mid;
  }
  double d = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    double e = std::exp(d / kd);
    double f = d * e - rhs;
    double fp = e * (1.0 + d / kd);
    double step = f / fp;
    d -= step;
    if (d < 0) d = 0;
    if (std::abs(step) < 1e-17 * (1.0 + d)) break;
  }
  return d;
}

double AdmissibleFamily::delta(double v) const {
  switch (source) {
    case FamilySource::Hua:
      return v >= std::ldexp(1.0, k) ? 0.0 : static_cast<double>(k);
    case FamilySource::WooleyEq42:
      return admissible_delta(k, v);
  }
  throw std::logic_error("unknown family source");
}

AdmissibleFamily default_family(int k) {
  return k <= 3 ? AdmissibleFamily::hua(k) : AdmissibleFamily::eq42(k);
}

TauResult tau(int k, const AdmissibleFamily& family) {
  if (k < 2) throw std::invalid_argument("tau: k must be >= 2");
  TauResult result;
  result.value = -std::numeric_limits<double>::infinity();
  for (long long w = 1;; ++w) {
    const double cap = static_cast<double>(k) / (4.0 * static_cast<double>(w) * w);
    if (result.value > 0 && cap <= result.value) break;  // no later term can win
    const double term =
        (k - 2.0 * family.delta(2.0 * static_cast<double>(w))) / (4.0 * static_cast<double>(w) * w);
    if (term > result.value) {
      result.value = term;
      result.argmax_w = w;
    }
    if (w > (1LL << 40)) throw std::logic_error("tau: scan failed to terminate");
  }
  if (family.source == FamilySource::Hua) {
    // Maximum attained at w = 2^{k-1}, the first w with Delta_{2w} = 0.
    Rat exact(k, 1);
    exact /= ipow(Int(4), static_cast<unsigned long>(k));
    exact.canonicalize();
    result.exact = exact;
    result.value = exact.get_d();
    result.argmax_w = 1LL << (k - 1);
  }
  return result;
}

double delta_star(int k, double s, const AdmissibleFamily& family) {
  if (s < 2) throw std::invalid_argument("delta_star: s must be >= 2");
  const double tk = tau(k, family).value;
  auto value_at = [&](double t) { return family.delta(s - t) - t * tk; };
  double best_t = 0.0;
  double best = value_at(0.0);
  const double t_max = s - 2.0;
  for (double t = 1.0; t < t_max; t += 1.0) {
    double v = value_at(t);
    if (v < best) {
      best = v;
      best_t = t;
    }
  }
  if (double v = value_at(t_max); v < best) {
    best = v;
    best_t = t_max;
  }
  // Refinement near the discrete argmin; Delta_{s-t} is convex decreasing in
  // t for the Eq42 family, so a local pass suffices.
  for (double t = std::max(0.0, best_t - 1.0); t <= std::min(t_max, best_t + 1.0); t += 0.125) {
    if (double v = value_at(t); v < best) best = v;
  }
  return best;
}

double omega(int k) {
  if (k < 2) throw std::invalid_argument("omega: k must be >= 2");
  return 1.0 / (kWeylD * k * k);
}

ConstantCheckReport constant_checks() {
  ConstantCheckReport report;
  auto check = [&report](bool ok, const std::string& line) {
    report.ok = report.ok && ok;
    report.lines.push_back((ok ? "ok: " : "FAILED: ") + line);
  };
  const double e = std::exp(1.0);
  const double two_e_d = 2.0 * e * kWeylD;
  check(two_e_d < 25.0, "2eD = " + std::to_string(two_e_d) + " < 25");
  for (int r = 2; r <= 64; ++r) {
    const double v = std::pow(2.0, 1.0 + 1.0 / r) * e * kWeylD;
    check(v < 35.0, "2^{1+1/" + std::to_string(r) + "} eD = " + std::to_string(v) + " < 35");
  }
  check(kTauFloorC < 2.0 * kWeylD,
        "C = " + std::to_string(kTauFloorC) + " < 2D = " + std::to_string(2.0 * kWeylD));
  return report;
}

}  // namespace waring
