#include "waring/local_density.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "waring/weyl.hpp"

namespace waring {

namespace {

int64_t checked_prime_power(int64_t p, int nu, int64_t cap) {
  if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
  if (nu < 0) throw std::invalid_argument("nu must be >= 0");
  int64_t m = 1;
  for (int i = 0; i < nu; ++i) {
    if (m > cap / p)
      throw ResourceLimitError("modulus p^nu exceeds configured cap of " + std::to_string(cap));
    m *= p;
  }
  return m;
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = static_cast<uint64_t>((static_cast<unsigned __int128>(r) * base) % m);
    base = static_cast<uint64_t>((static_cast<unsigned __int128>(base) * base) % m);
    exp >>= 1;
  }
  return r;
}

// Histogram of t -> t^k mod m over t in [1, m].
std::vector<int64_t> power_histogram(int k, int64_t m) {
  std::vector<int64_t> hist(static_cast<size_t>(m), 0);
  for (int64_t t = 1; t <= m; ++t)
    ++hist[powmod(static_cast<uint64_t>(t), static_cast<uint64_t>(k),
                  static_cast<uint64_t>(m))];
  return hist;
}

std::vector<Int> cyclic_convolve(const std::vector<Int>& a, const std::vector<int64_t>& b) {
  const size_t m = a.size();
  std::vector<Int> out(m, Int(0));
  for (size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < m; ++j) {
      if (b[j] == 0) continue;
      size_t idx = i + j;
      if (idx >= m) idx -= m;
      out[idx] += a[i] * b[j];
    }
  }
  return out;
}

int64_t mod_small(const Int& n, int64_t m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), Int(m).get_mpz_t());
  return r.get_si();
}

struct PrimePower {
  int64_t p;
  int nu;
  int64_t value;
};

std::vector<PrimePower> factorize(int64_t q) {
  std::vector<PrimePower> out;
  for (int64_t p = 2; p * p <= q; p += (p == 2 ? 1 : 2)) {
    if (q % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (q % p == 0) {
      q /= p;
      ++pp.nu;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  if (q > 1) out.push_back({q, 1, q});
  return out;
}

}  // namespace

std::vector<Int> count_congruence_all(const ExponentSequence& ks, int64_t p, int nu,
                                      int64_t modulus_cap) {
  const int64_t m = checked_prime_power(p, nu, modulus_cap);
  std::vector<Int> counts(static_cast<size_t>(m), Int(0));
  counts[0] = 1;  // empty sum
  std::map<int, std::vector<int64_t>> hist_by_k;
  for (int k : ks) {
    auto it = hist_by_k.find(k);
    if (it == hist_by_k.end()) it = hist_by_k.emplace(k, power_histogram(k, m)).first;
    counts = cyclic_convolve(counts, it->second);
  }
  return counts;
}

Int count_congruence(const ExponentSequence& ks, const Int& n, int64_t p, int nu,
                     int64_t modulus_cap) {
  auto counts = count_congruence_all(ks, p, nu, modulus_cap);
  return counts[static_cast<size_t>(mod_small(n, static_cast<int64_t>(counts.size())))];
}

LocalFactorTable euler_factor(const ExponentSequence& ks, const Int& n, int64_t p, int nu_max,
                              int64_t modulus_cap) {
  if (ks.size() < 2) throw std::invalid_argument("euler_factor: need s >= 2");
  LocalFactorTable table;
  table.p = p;
  table.n = n;
  const int s = ks.size();
  Int prev_m = 1;
  for (int nu = 0; nu <= nu_max; ++nu) {
    LocalFactorRow row;
    row.nu = nu;
    row.m_count = count_congruence(ks, n, p, nu, modulus_cap);
    // p^{(1-s)nu} M = M / p^{(s-1)nu}
    row.normalized = Rat(row.m_count, ipow(Int(p), static_cast<unsigned long>((s - 1) * nu)));
    row.normalized.canonicalize();
    if (nu == 0) {
      row.u = 1;
    } else {
      row.u = ipow(Int(p), static_cast<unsigned long>(nu)) * row.m_count -
              ipow(Int(p), static_cast<unsigned long>(nu + s - 1)) * prev_m;
    }
    prev_m = row.m_count;
    table.rows.push_back(std::move(row));
  }
  table.chi_estimate = to_double(table.rows.back().normalized);
  table.tail_start = nu_max + 1;
  for (int nu = 1; nu <= nu_max; ++nu) {
    double prev = to_double(table.rows[static_cast<size_t>(nu - 1)].normalized);
    double cur = to_double(table.rows[static_cast<size_t>(nu)].normalized);
    double rel = std::abs(cur - prev) / std::max(std::abs(prev), 1e-30);
    if (rel < 1e-3) {
      table.tail_start = nu;
      table.stabilized = (nu == nu_max) || table.stabilized;
      break;
    }
  }
  if (nu_max >= 1) {
    double prev = to_double(table.rows[static_cast<size_t>(nu_max - 1)].normalized);
    double cur = to_double(table.rows[static_cast<size_t>(nu_max)].normalized);
    table.stabilized = std::abs(cur - prev) / std::max(std::abs(prev), 1e-30) < 1e-3;
  }
  return table;
}

Int u_n_exact(const ExponentSequence& ks, const Int& n, int64_t q, int64_t modulus_cap) {
  if (q < 1) throw std::invalid_argument("u_n: q must be >= 1");
  const int s = ks.size();
  Int result = 1;
  for (const PrimePower& pp : factorize(q)) {
    Int m_hi = count_congruence(ks, n, pp.p, pp.nu, modulus_cap);
    Int m_lo = count_congruence(ks, n, pp.p, pp.nu - 1, modulus_cap);
    Int u = ipow(Int(pp.p), static_cast<unsigned long>(pp.nu)) * m_hi -
            ipow(Int(pp.p), static_cast<unsigned long>(pp.nu + s - 1)) * m_lo;
    result *= u;
  }
  return result;
}

std::complex<double> u_n_complex(const ExponentSequence& ks, const Int& n, int64_t q) {
  if (q < 1) throw std::invalid_argument("u_n: q must be >= 1");
  const int64_t n_mod = mod_small(n, q);
  std::complex<double> total = 0;
  for (int64_t a = 1; a <= q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    std::complex<double> prod = 1;
    for (int k : ks) prod *= complete_sum(q, a, k);
    const double frac = static_cast<double>((n_mod * a) % q) / static_cast<double>(q);
    prod *= std::complex<double>(std::cos(-2.0 * std::numbers::pi * frac),
                                 std::sin(-2.0 * std::numbers::pi * frac));
    total += prod;
  }
  if (q == 1) total = 1;
  return total;
}

DualUn u_n(const ExponentSequence& ks, const Int& n, int64_t q, int64_t modulus_cap) {
  DualUn out;
  out.exact = u_n_exact(ks, n, q, modulus_cap);
  out.approx = u_n_complex(ks, n, q);
  const double tol =
      1e-6 * std::pow(static_cast<double>(q), static_cast<double>(ks.size()) / 2.0 + 1.0);
  const double exact_d = out.exact.get_d();
  if (std::abs(out.approx.real() - exact_d) > std::max(tol, 1e-6) ||
      std::abs(out.approx.imag()) > std::max(tol, 1e-6)) {
    throw IntegrityError("U_n dual-route disagreement at q = " + std::to_string(q));
  }
  return out;
}

SingularSeriesResult singular_series(const ExponentSequence& ks, const Int& n, int64_t X,
                                     int64_t modulus_cap) {
  if (ks.theta() <= 2)
    throw std::invalid_argument(
        "singular_series: requires theta = sum 1/k_i > 2 (series convergence)");
  if (X < 1) throw std::invalid_argument("singular_series: X must be >= 1");
  SingularSeriesResult result;
  result.delta = to_double(ks.theta()) - 2.0;
  result.exact = 0;
  std::map<int64_t, Int> u_cache;  // prime power -> U_n(p^nu)
  const int s = ks.size();
  for (int64_t q = 1; q <= X; ++q) {
    Int u = 1;
    for (const PrimePower& pp : factorize(q)) {
      auto it = u_cache.find(pp.value);
      if (it == u_cache.end())
        it = u_cache.emplace(pp.value, u_n_exact(ks, n, pp.value, modulus_cap)).first;
      u *= it->second;
    }
    Rat term(u, ipow(Int(q), static_cast<unsigned long>(s)));
    term.canonicalize();
    result.exact += term;
    const double term_d = to_double(term);
    result.terms.emplace_back(q, term_d);
    if (q > X / 2) result.last_block_max = std::max(result.last_block_max, std::abs(term_d));
  }
  result.exact.canonicalize();
  result.value = to_double(result.exact);
  return result;
}

SingularSeriesEvaluator::SingularSeriesEvaluator(ExponentSequence ks, int64_t X,
                                                 int64_t modulus_cap)
    : ks_(std::move(ks)), X_(X) {
  if (ks_.theta() <= 2)
    throw std::invalid_argument("singular series requires theta > 2");
  const int s = ks_.size();
  prime_power_u_.assign(static_cast<size_t>(X + 1), {});
  factorizations_.assign(static_cast<size_t>(X + 1), {});
  for (int64_t q = 2; q <= X; ++q) {
    auto pps = factorize(q);
    for (const auto& pp : pps) factorizations_[static_cast<size_t>(q)].push_back(pp.value);
    if (pps.size() != 1) continue;  // only prime powers carry a U table
    const auto& pp = pps[0];
    auto m_hi = count_congruence_all(ks_, pp.p, pp.nu, modulus_cap);
    auto m_lo = count_congruence_all(ks_, pp.p, pp.nu - 1, modulus_cap);
    const Int p_nu = ipow(Int(pp.p), static_cast<unsigned long>(pp.nu));
    const Int p_shift = ipow(Int(pp.p), static_cast<unsigned long>(pp.nu + s - 1));
    const int64_t lo_mod = pp.value / pp.p;
    std::vector<double> table(static_cast<size_t>(pp.value));
    for (int64_t r = 0; r < pp.value; ++r) {
      Int u = p_nu * m_hi[static_cast<size_t>(r)] -
              p_shift * m_lo[static_cast<size_t>(r % std::max<int64_t>(lo_mod, 1))];
      table[static_cast<size_t>(r)] = u.get_d();
    }
    prime_power_u_[static_cast<size_t>(q)] = std::move(table);
  }
}

double SingularSeriesEvaluator::evaluate(const Int& n) const {
  const int s = ks_.size();
  double total = 1.0;  // q = 1 term
  for (int64_t q = 2; q <= X_; ++q) {
    double u = 1.0;
    for (int64_t pp : factorizations_[static_cast<size_t>(q)])
      u *= prime_power_u_[static_cast<size_t>(pp)][static_cast<size_t>(mod_small(n, pp))];
    total += u / std::pow(static_cast<double>(q), static_cast<double>(s));
  }
  return total;
}

SolubilityCertificate solve_unit_congruence(const ExponentSequence& ks, const Int& n, int64_t p) {
  const int s = ks.size();
  if (s < 4 * ks[0])
    throw std::invalid_argument("solve_unit_congruence: requires s >= 4 k_1");
  if (ks.theta() <= 2)
    throw std::invalid_argument("solve_unit_congruence: requires theta > 2");
  SolubilityCertificate cert;
  cert.p = p;
  int d = ks.gcd();
  while (d % p == 0) {
    d /= static_cast<int>(p);
    ++cert.lambda;
  }
  cert.tau = (p == 2) ? 2 : 1;
  cert.j = -1;
  for (int i = 0; i < s; ++i) {
    int v = 0, k = ks[i];
    while (k % p == 0) {
      k /= static_cast<int>(p);
      ++v;
    }
    if (v == cert.lambda) {
      cert.j = i;
      break;
    }
  }
  int64_t m = 1;
  for (int i = 0; i < cert.lambda + cert.tau; ++i) m *= p;
  cert.modulus = m;

  // Per-variable value sets mod m, with a witness x for each value; the
  // witness slot j only ranges over units.
  const int64_t target = mod_small(n, m);
  std::vector<std::vector<int64_t>> witness(
      static_cast<size_t>(s), std::vector<int64_t>(static_cast<size_t>(m), -1));
  // reach[i][r]: some x_1..x_i sums to r; backpointer via witness[i].
  std::vector<std::vector<bool>> reach(static_cast<size_t>(s + 1),
                                       std::vector<bool>(static_cast<size_t>(m), false));
  reach[0][0] = true;
  std::vector<std::vector<int64_t>> choice(
      static_cast<size_t>(s), std::vector<int64_t>(static_cast<size_t>(m), -1));
  for (int i = 0; i < s; ++i) {
    for (int64_t x = 1; x <= m; ++x) {
      if (i == cert.j && std::gcd(x, static_cast<int64_t>(p)) != 1) continue;
      const int64_t v = static_cast<int64_t>(
          powmod(static_cast<uint64_t>(x), static_cast<uint64_t>(ks[i]),
                 static_cast<uint64_t>(m)));
      for (int64_t r = 0; r < m; ++r) {
        if (!reach[static_cast<size_t>(i)][static_cast<size_t>(r)]) continue;
        const int64_t nr = (r + v) % m;
        if (!reach[static_cast<size_t>(i + 1)][static_cast<size_t>(nr)]) {
          reach[static_cast<size_t>(i + 1)][static_cast<size_t>(nr)] = true;
          choice[static_cast<size_t>(i)][static_cast<size_t>(nr)] = x;
        }
      }
    }
  }
  if (!reach[static_cast<size_t>(s)][static_cast<size_t>(target)])
    throw IntegrityError("no unit-congruence certificate found at p = " + std::to_string(p) +
                         "; this contradicts the solubility hypotheses");
  cert.solution.assign(static_cast<size_t>(s), 0);
  int64_t r = target;
  for (int i = s - 1; i >= 0; --i) {
    const int64_t x = choice[static_cast<size_t>(i)][static_cast<size_t>(r)];
    cert.solution[static_cast<size_t>(i)] = x;
    const int64_t v = static_cast<int64_t>(
        powmod(static_cast<uint64_t>(x), static_cast<uint64_t>(ks[i]),
               static_cast<uint64_t>(m)));
    r = ((r - v) % m + m) % m;
  }
  return cert;
}

PositivityReport sigma_positivity_report(const ExponentSequence& ks, const Int& n, int64_t X,
                                         int64_t p_cut, int64_t modulus_cap) {
  PositivityReport report;
  report.sigma_truncated = singular_series(ks, n, X, modulus_cap).value;
  report.chi_product = 1.0;
  report.witness_lower_bound = 1.0;
  const int s = ks.size();
  for (int64_t p = 2; p <= p_cut; ++p) {
    bool prime = p >= 2;
    for (int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    PositivityRow row;
    row.p = p;
    row.certificate = solve_unit_congruence(ks, n, p);
    const int lt = row.certificate.lambda + row.certificate.tau;
    row.chi_p = euler_factor(ks, n, p, lt + 1, modulus_cap).chi_estimate;
    row.lower_bound = std::pow(static_cast<double>(p), -static_cast<double>(lt) * (s - 1));
    report.chi_product *= row.chi_p;
    report.witness_lower_bound *= row.lower_bound;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace waring
