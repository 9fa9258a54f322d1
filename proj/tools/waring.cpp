// Unified command-line front end. Exit codes: 0 success, 2 validation error,
// 3 resource-cap rejection, 4 integrity failure.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "waring/exponents.hpp"
#include "waring/local_density.hpp"
#include "waring/main_term.hpp"
#include "waring/representations.hpp"
#include "waring/smooth.hpp"
#include "waring/thresholds.hpp"
#include "waring/weyl.hpp"

using json = nlohmann::ordered_json;
using namespace waring;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Global {
  uint64_t seed = 0;
  int threads = 1;  // accepted for config echo; orchestration is sequential
  std::string out_dir = ".";
  std::string config_path;
  json config_echo = json::object();
};

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<int> parse_ks(const std::string& text) {
  std::vector<int> ks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    ks.push_back(std::stoi(item));
  }
  if (ks.empty()) throw std::invalid_argument("empty exponent list: " + text);
  return ks;
}

Rat parse_alpha(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return canonical_alpha(std::stod(text));
  Rat r(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
  r.canonicalize();
  return frac_mod1(r);
}

json base_artifact(const Global& g, const std::string& command, const json& params) {
  json config = params;
  config["seed"] = g.seed;
  config["threads"] = g.threads;
  if (!g.config_echo.empty()) config["config_file"] = g.config_echo;
  json art;
  art["toolkit_version"] = kVersion;
  art["command"] = command;
  art["config"] = config;
  art["config_hash"] = std::to_string(fnv1a(config.dump()));
  return art;
}

void emit(const Global& g, const json& artifact, const std::string& out_file) {
  const std::string text = artifact.dump(2) + "\n";
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::filesystem::path path = std::filesystem::path(g.out_dir) / out_file;
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open output file: " + path.string());
    f << text;
    std::cout << path.string() << "\n";
  }
}

json report_entry(const ThresholdReport& r) {
  json j;
  j["rule"] = r.rule;
  j["lhs"] = fmt17(r.lhs);
  j["rhs"] = fmt17(r.rhs);
  if (r.min_s) j["min_s"] = *r.min_s;
  j["margin"] = fmt17(r.margin);
  j["holds"] = r.holds;
  j["knife_edge"] = r.knife_edge;
  return j;
}

// ---- subcommand runners ---------------------------------------------------

int run_smooth(const Global& g, int64_t P, int64_t R, const std::string& emit_file) {
  SmoothSet set = sieve_smooth(P, R);
  if (!emit_file.empty()) {
    std::filesystem::path path = std::filesystem::path(g.out_dir) / emit_file;
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open output file: " + path.string());
    for (int64_t m : set.members) f << m << "\n";
  }
  json art = base_artifact(g, "smooth", {{"p", P}, {"r", R}});
  art["cardinality"] = set.cardinality();
  art["density"] = fmt17(set.density());
  emit(g, art, "");
  return 0;
}

int run_exponents(const Global& g, int k, const std::string& family_name,
                  std::optional<double> v, std::optional<double> s) {
  AdmissibleFamily family = family_name == "hua"    ? AdmissibleFamily::hua(k)
                            : family_name == "eq42" ? AdmissibleFamily::eq42(k)
                                                    : default_family(k);
  json art = base_artifact(g, "exponents", {{"k", k}, {"family", family_name}});
  TauResult t = tau(k, family);
  art["tau"] = fmt17(t.value);
  art["tau_argmax_w"] = t.argmax_w;
  if (t.exact) art["tau_exact"] = t.exact->get_str();
  art["omega"] = fmt17(omega(k));
  if (v) art["delta_v"] = fmt17(family.delta(*v));
  if (s) art["delta_star"] = fmt17(delta_star(k, *s, family));
  emit(g, art, "");
  return 0;
}

int run_thresholds(const Global& g, const std::string& rule, const std::string& ks_text,
                   std::optional<int> ks_constant, const std::string& progression,
                   long long j, long long s, long long scan_limit) {
  json params = {{"rule", rule}, {"ks", ks_text},         {"ks_constant", ks_constant ? json(*ks_constant) : json()},
                 {"j", j},       {"progression", progression}, {"s", s}};
  json art = base_artifact(g, "thresholds", params);

  auto make_generator = [&]() -> ExponentGenerator {
    if (ks_constant) {
      int k = *ks_constant;
      return [k](long long) { return k; };
    }
    if (!progression.empty()) {
      std::vector<int> kr = parse_ks(progression);
      if (kr.size() != 2) throw std::invalid_argument("--progression expects k,r");
      int k = kr[0], r = kr[1];
      return [k, r](long long i) { return static_cast<int>(k + r * (i - 1)); };
    }
    throw std::invalid_argument("rule " + rule + " needs --ks-constant or --progression");
  };

  if (rule == "thm11") {
    art["report"] = report_entry(thm11_min_s(make_generator(), scan_limit));
  } else if (rule == "cor12") {
    art["report"] = report_entry(cor12_min_s(j, make_generator(), scan_limit));
  } else if (rule == "eq49") {
    auto [report, margin] = eq49_check(ExponentSequence(parse_ks(ks_text)));
    art["report"] = report_entry(report);
    art["phi1"] = margin.phi1.get_str();
    art["theta1"] = fmt17(margin.theta1);
    art["delta"] = fmt17(margin.delta);
  } else if (rule == "thm13") {
    std::vector<int> kr = parse_ks(progression.empty() ? ks_text : progression);
    if (kr.size() != 2) throw std::invalid_argument("thm13 expects --progression k,r");
    art["bound"] = thm13_bound(kr[0], kr[1]).get_str();
  } else if (rule == "eq55" || rule == "cor44") {
    std::vector<int> kr = parse_ks(progression);
    if (kr.size() != 2 || s < 1)
      throw std::invalid_argument(rule + " expects --progression k,r and --s");
    art["report"] = report_entry(rule == "eq55" ? eq55_check(kr[0], kr[1], s)
                                                : cor44_check(kr[0], kr[1], s));
  } else {
    throw std::invalid_argument("unknown rule: " + rule);
  }
  emit(g, art, "");
  return 0;
}

int run_weyl_sum(const Global& g, const std::string& alpha_text, int64_t P, int64_t R, int k) {
  Rat alpha = parse_alpha(alpha_text);
  SumValue f = smooth_weyl_sum(alpha, P, R, k);
  ArcPoint pt = lambda_height(alpha, Int(P), k);
  json art = base_artifact(g, "weyl sum",
                           {{"alpha", alpha.get_str()}, {"p", P}, {"r", R}, {"k", k}});
  art["value_re"] = fmt17(f.value.real());
  art["value_im"] = fmt17(f.value.imag());
  art["abs"] = fmt17(std::abs(f.value));
  art["terms"] = f.terms;
  art["q"] = pt.q.get_str();
  art["a"] = pt.a.get_str();
  art["lambda"] = fmt17(pt.lambda);
  emit(g, art, "");
  return 0;
}

int run_weyl_scan(const Global& g, int64_t P, int64_t R, int k, const std::string& q_text,
                  int64_t samples, const std::string& out_csv) {
  Rat Q = parse_alpha(q_text);  // reuses fraction parsing; integers pass through
  if (Q == 0) Q = Rat(Int(q_text));
  MinorArcScanResult scan = minor_arc_sup_scan(P, R, k, Q, samples, g.seed);
  if (!out_csv.empty()) {
    std::filesystem::path path = std::filesystem::path(g.out_dir) / out_csv;
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open output file: " + path.string());
    f << "alpha_num,alpha_den,q,a,lambda,abs_f,envelope,ratio\n";
    for (const auto& d : scan.details) {
      f << d.point.alpha.get_num().get_str() << "," << d.point.alpha.get_den().get_str() << ","
        << d.point.q.get_str() << "," << d.point.a.get_str() << "," << fmt17(d.point.lambda)
        << "," << fmt17(d.abs_f) << "," << fmt17(d.envelope) << "," << fmt17(d.ratio) << "\n";
    }
  }
  json art = base_artifact(
      g, "weyl scan",
      {{"p", P}, {"r", R}, {"k", k}, {"q", q_text}, {"samples", samples}});
  art["vacuous"] = scan.vacuous;
  art["max_abs_f"] = fmt17(scan.max_abs_f);
  art["bound"] = fmt17(scan.bound);
  art["ratio"] = fmt17(scan.ratio);
  emit(g, art, "");
  return 0;
}

int run_sigma(const Global& g, const std::string& ks_text, int64_t n, int64_t X, int64_t pcut,
              const std::string& out_file) {
  ExponentSequence ks(parse_ks(ks_text));
  SingularSeriesResult series = singular_series(ks, Int(n), X);
  json art = base_artifact(g, "sigma",
                           {{"ks", parse_ks(ks_text)}, {"n", n}, {"x", X}, {"pcut", pcut}});
  art["value"] = fmt17(series.value);
  art["value_exact"] = series.exact.get_str();
  art["tail_exponent"] = fmt17(series.delta);
  art["last_block_max"] = fmt17(series.last_block_max);
  json terms = json::array();
  for (auto [q, term] : series.terms) terms.push_back({{"q", q}, {"term", fmt17(term)}});
  art["terms"] = terms;

  json ladders = json::array();
  json certs = json::array();
  for (int64_t p : primes_up_to(pcut)) {
    int lt = (p == 2 ? 3 : 2);  // lambda upper bound + tau, enough for a view
    LocalFactorTable t = euler_factor(ks, Int(n), p, lt + 1);
    json rows = json::array();
    for (const auto& row : t.rows)
      rows.push_back({{"nu", row.nu},
                      {"m", row.m_count.get_str()},
                      {"normalized", row.normalized.get_str()},
                      {"u", row.u.get_str()}});
    ladders.push_back({{"p", p},
                       {"rows", rows},
                       {"chi_estimate", fmt17(t.chi_estimate)},
                       {"stabilized", t.stabilized},
                       {"tail_start", t.tail_start}});
    if (ks.size() >= 4 * ks[0]) {
      SolubilityCertificate c = solve_unit_congruence(ks, Int(n), p);
      certs.push_back({{"p", p},
                       {"lambda", c.lambda},
                       {"tau", c.tau},
                       {"witness_index", c.j},
                       {"modulus", c.modulus.get_str()},
                       {"solution", c.solution}});
    }
  }
  art["ladders"] = ladders;
  art["certificates"] = certs;
  emit(g, art, out_file);
  return 0;
}

int run_predict(const Global& g, const std::string& ks_text, int64_t n, int64_t X, double eta) {
  ExponentSequence ks(parse_ks(ks_text));
  ProblemInstance inst(ks, Int(n), eta);
  double sigma = singular_series(ks, Int(n), X).value;
  Prediction p = predict_count(inst, sigma);
  json art = base_artifact(g, "predict",
                           {{"ks", parse_ks(ks_text)}, {"n", n}, {"x", X}, {"eta", eta}});
  art["main_term"] = fmt17(p.main_term);
  art["sigma"] = fmt17(p.sigma);
  art["c_power"] = fmt17(p.c_power);
  art["value"] = fmt17(p.value);
  emit(g, art, "");
  return 0;
}

int run_count(const Global& g, const std::string& ks_text, int64_t n, double eta,
              const std::string& method_name) {
  CountMethod method = method_name == "naive"  ? CountMethod::Naive
                       : method_name == "conv" ? CountMethod::Convolution
                                               : CountMethod::MeetInMiddle;
  ProblemInstance inst(ExponentSequence(parse_ks(ks_text)), Int(n), eta);
  CountResult r = count_representations(inst, method);
  json art = base_artifact(
      g, "count", {{"ks", parse_ks(ks_text)}, {"n", n}, {"eta", eta}, {"method", method_name}});
  art["count"] = r.count.get_str();
  emit(g, art, "");
  return 0;
}

int run_scan(const Global& g, const std::string& ks_text, int64_t n0, int64_t n1, double eta,
             const std::string& out_csv) {
  if (n1 < n0) throw std::invalid_argument("scan: need n1 >= n0");
  ExponentSequence ks(parse_ks(ks_text));
  std::vector<uint64_t> counts = count_window(ks, n0, n1 - n0 + 1, eta);
  if (!out_csv.empty()) {
    std::filesystem::path path = std::filesystem::path(g.out_dir) / out_csv;
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open output file: " + path.string());
    f << "n,count\n";
    for (int64_t n = n0; n <= n1; ++n) f << n << "," << counts[static_cast<size_t>(n - n0)] << "\n";
  }
  uint64_t total = 0;
  int64_t nonzero = 0;
  for (uint64_t c : counts) {
    total += c;
    nonzero += c > 0;
  }
  json art = base_artifact(
      g, "scan", {{"ks", parse_ks(ks_text)}, {"n0", n0}, {"n1", n1}, {"eta", eta}});
  art["total"] = total;
  art["nonzero"] = nonzero;
  emit(g, art, "");
  return 0;
}

int run_exceptions(const Global& g, const std::string& ks_text, int64_t limit, double eta) {
  ExponentSequence ks(parse_ks(ks_text));
  ExceptionalScanResult r = exceptional_scan(ks, limit, eta);
  json art = base_artifact(g, "exceptions",
                           {{"ks", parse_ks(ks_text)}, {"limit", limit}, {"eta", eta}});
  art["zeros"] = r.zeros;
  art["largest"] = r.largest;
  art["count"] = r.zeros.size();
  emit(g, art, "");
  return 0;
}

int run_report(const Global& g, const std::vector<std::string>& bundle) {
  if (bundle.empty()) throw std::invalid_argument("report: empty bundle");
  json combined = json::object();
  json first_ks;
  for (const std::string& file : bundle) {
    std::ifstream f(file);
    if (!f) throw std::invalid_argument("report: missing artifact " + file);
    json art = json::parse(f);
    if (art.contains("config") && art["config"].contains("ks")) {
      const json& ks = art["config"]["ks"];
      if (first_ks.is_null()) {
        first_ks = ks;
      } else if (first_ks != ks) {
        throw std::invalid_argument("report: mismatched ks across artifacts: " +
                                    first_ks.dump() + " vs " + ks.dump() + " in " + file);
      }
    }
    combined[art.value("command", file)] = art;
  }
  json art = base_artifact(g, "report", {{"bundle", bundle}});
  art["ks"] = first_ks;
  art["artifacts"] = combined;
  std::filesystem::path jpath = std::filesystem::path(g.out_dir) / "report.json";
  std::ofstream jf(jpath);
  jf << art.dump(2) << "\n";

  std::filesystem::path mpath = std::filesystem::path(g.out_dir) / "report.md";
  std::ofstream mf(mpath);
  mf << "# Instance report\n\n";
  if (!first_ks.is_null()) mf << "Exponents: " << first_ks.dump() << "\n\n";
  mf << "| artifact | key figures |\n|---|---|\n";
  for (auto& [name, a] : combined.items()) {
    std::string figures;
    for (const char* key : {"value", "count", "min_s", "mean_ratio", "cardinality", "largest"})
      if (a.contains(key)) figures += std::string(key) + "=" + a[key].dump() + " ";
    if (a.contains("report")) figures += "holds=" + a["report"]["holds"].dump();
    mf << "| " << name << " | " << figures << " |\n";
  }
  std::cout << jpath.string() << "\n" << mpath.string() << "\n";
  return 0;
}

int run_selftest(const Global& g) {
  int bad = 0;
  auto line = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "ok " : "FAIL ") << what << "\n";
    if (!ok) ++bad;
  };
  ConstantCheckReport checks = constant_checks();
  line(checks.ok, "fixed numeric constants");
  TauResult t2 = tau(2, AdmissibleFamily::hua(2));
  line(t2.exact && *t2.exact == Rat(1, 8), "tau(2) = 1/8 exact");
  TauResult t3 = tau(3, AdmissibleFamily::hua(3));
  line(t3.exact && *t3.exact == Rat(3, 64), "tau(3) = 3/64 exact");
  line(std::abs(gamma_main_term(ExponentSequence({2, 2}), Int(1)) - std::numbers::pi / 4.0) <
           1e-12,
       "Gamma(3/2)^2 = pi/4 to 1e-12");
  bool gauss = true;
  for (int64_t q : {3, 5, 7, 11, 13, 17, 19, 23}) {
    for (int64_t a = 1; a < q; ++a)
      gauss &= std::abs(std::abs(complete_sum(q, a, 2)) - std::sqrt(static_cast<double>(q))) < 1e-9;
  }
  line(gauss, "quadratic complete-sum magnitude sqrt(q)");
  bool ladder = true;
  ExponentSequence ks({2, 3, 4});
  for (int64_t p : {2, 3, 5}) {
    Rat lhs = 0;
    for (int nu = 0; nu <= 3; ++nu) {
      int64_t q = 1;
      for (int i = 0; i < nu; ++i) q *= p;
      Rat term(u_n_exact(ks, Int(7), q), ipow(Int(q), 3));
      term.canonicalize();
      lhs += term;
    }
    lhs.canonicalize();
    Rat rhs(count_congruence(ks, Int(7), p, 3), ipow(Int(p), 6));
    rhs.canonicalize();
    ladder &= lhs == rhs;
  }
  line(ladder, "aggregate ladder identity");
  bool dual = true;
  try {
    for (int64_t q = 1; q <= 40; ++q) u_n(ExponentSequence::constant(2, 5), Int(12345), q);
  } catch (const IntegrityError&) {
    dual = false;
  }
  line(dual, "dual-route aggregate agreement");
  (void)g;
  if (bad) {
    std::cout << bad << " selftest failure(s)\n";
    return 4;
  }
  std::cout << "selftest passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circle-method toolkit for representation counting by sums of powers"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--seed", g.seed, "seed for sampled scans");
  app.add_option("--threads", g.threads, "worker threads (echoed into artifacts)");
  app.add_option("--out-dir", g.out_dir, "directory for file artifacts");
  app.add_option("--config", g.config_path, "JSON config file, echoed into artifacts");

  // smooth
  int64_t sm_p = 0, sm_r = 0;
  std::string sm_emit;
  auto* smooth_cmd = app.add_subcommand("smooth", "sieve the R-smooth integers up to P");
  smooth_cmd->add_option("--p", sm_p, "upper bound P")->required();
  smooth_cmd->add_option("--r", sm_r, "smoothness bound R")->required();
  smooth_cmd->add_option("--emit", sm_emit, "CSV member list output");

  // exponents
  int ex_k = 0;
  std::string ex_family = "default";
  double ex_v = -1, ex_s = -1;
  auto* exp_cmd = app.add_subcommand("exponents", "admissible-exponent calculators");
  exp_cmd->add_option("--k", ex_k, "exponent k")->required();
  exp_cmd->add_option("--family", ex_family, "hua | eq42 | default");
  exp_cmd->add_option("--v", ex_v, "evaluate delta at v");
  exp_cmd->add_option("--s", ex_s, "evaluate delta_star at s");

  // thresholds
  std::string th_rule, th_ks, th_prog;
  int th_const = 0;
  long long th_j = 1, th_s = 0, th_limit = kDefaultScanLimit;
  auto* th_cmd = app.add_subcommand("thresholds", "sufficiency threshold rules");
  th_cmd->add_option("--rule", th_rule, "thm11 | cor12 | eq49 | thm13 | eq55 | cor44")->required();
  th_cmd->add_option("--ks", th_ks, "explicit exponents, comma separated");
  auto* th_const_opt = th_cmd->add_option("--ks-constant", th_const, "constant exponent sequence");
  th_cmd->add_option("--progression", th_prog, "progression spec k,r");
  th_cmd->add_option("--j", th_j, "start index for cor12");
  th_cmd->add_option("--s", th_s, "sequence length for eq55/cor44");
  th_cmd->add_option("--scan-limit", th_limit, "scan cutoff");

  // weyl
  auto* weyl_cmd = app.add_subcommand("weyl", "exponential sums and arc scans");
  weyl_cmd->require_subcommand(1);
  std::string wy_alpha, wy_q, wy_out;
  int64_t wy_p = 0, wy_r = 0, wy_samples = 100;
  int wy_k = 2;
  auto* wy_sum = weyl_cmd->add_subcommand("sum", "evaluate one smooth sum");
  wy_sum->add_option("--alpha", wy_alpha, "phase as N/D or decimal")->required();
  wy_sum->add_option("--p", wy_p, "box size P")->required();
  wy_sum->add_option("--r", wy_r, "smoothness bound R")->required();
  wy_sum->add_option("--k", wy_k, "exponent k")->required();
  auto* wy_scan = weyl_cmd->add_subcommand("scan", "sample the minor arcs");
  wy_scan->add_option("--p", wy_p, "box size P")->required();
  wy_scan->add_option("--r", wy_r, "smoothness bound R (default: P)");
  wy_scan->add_option("--k", wy_k, "exponent k");
  wy_scan->add_option("--q", wy_q, "arc cutoff Q")->required();
  wy_scan->add_option("--samples", wy_samples, "sample count");
  wy_scan->add_option("--out", wy_out, "CSV per-sample output");

  // sigma
  std::string sg_ks, sg_out;
  int64_t sg_n = 0, sg_x = 0, sg_pcut = 13;
  auto* sg_cmd = app.add_subcommand("sigma", "truncated singular series with ladders");
  sg_cmd->add_option("--ks", sg_ks, "exponents")->required();
  sg_cmd->add_option("--n", sg_n, "target n")->required();
  sg_cmd->add_option("--x", sg_x, "truncation X")->required();
  sg_cmd->add_option("--pcut", sg_pcut, "ladder prime cutoff");
  sg_cmd->add_option("--out", sg_out, "JSON output file");

  // predict
  std::string pr_ks;
  int64_t pr_n = 0, pr_x = 0;
  double pr_eta = 1.0;
  auto* pr_cmd = app.add_subcommand("predict", "assembled count prediction");
  pr_cmd->add_option("--ks", pr_ks, "exponents")->required();
  pr_cmd->add_option("--n", pr_n, "target n")->required();
  pr_cmd->add_option("--x", pr_x, "series truncation X")->required();
  pr_cmd->add_option("--eta", pr_eta, "smoothness parameter");

  // count
  std::string ct_ks, ct_method = "mitm";
  int64_t ct_n = 0;
  double ct_eta = 1.0;
  auto* ct_cmd = app.add_subcommand("count", "exact representation count");
  ct_cmd->add_option("--ks", ct_ks, "exponents")->required();
  ct_cmd->add_option("--n", ct_n, "target n")->required();
  ct_cmd->add_option("--eta", ct_eta, "smoothness parameter");
  ct_cmd->add_option("--method", ct_method, "naive | mitm | conv");

  // scan
  std::string sc_ks, sc_out;
  int64_t sc_n0 = 0, sc_n1 = 0;
  double sc_eta = 1.0;
  auto* sc_cmd = app.add_subcommand("scan", "counts over a window");
  sc_cmd->add_option("--ks", sc_ks, "exponents")->required();
  sc_cmd->add_option("--n0", sc_n0, "window start")->required();
  sc_cmd->add_option("--n1", sc_n1, "window end (inclusive)")->required();
  sc_cmd->add_option("--eta", sc_eta, "smoothness parameter");
  sc_cmd->add_option("--out", sc_out, "CSV output");

  // exceptions
  std::string xc_ks;
  int64_t xc_limit = 0;
  double xc_eta = 1.0;
  auto* xc_cmd = app.add_subcommand("exceptions", "numbers without representation");
  xc_cmd->add_option("--ks", xc_ks, "exponents")->required();
  xc_cmd->add_option("--limit", xc_limit, "scan limit")->required();
  xc_cmd->add_option("--eta", xc_eta, "smoothness parameter");

  // report
  std::vector<std::string> rp_bundle;
  auto* rp_cmd = app.add_subcommand("report", "combine prior artifacts");
  rp_cmd->add_option("--bundle", rp_bundle, "artifact JSON files")->expected(-1);

  auto* st_cmd = app.add_subcommand("selftest", "constant checks and exact identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!g.config_path.empty()) {
      std::ifstream cf(g.config_path);
      if (!cf) throw std::invalid_argument("cannot read config file: " + g.config_path);
      g.config_echo = json::parse(cf);
      if (g.config_echo.contains("seed")) g.seed = g.config_echo["seed"].get<uint64_t>();
    }
    if (smooth_cmd->parsed()) return run_smooth(g, sm_p, sm_r, sm_emit);
    if (exp_cmd->parsed())
      return run_exponents(g, ex_k, ex_family,
                           ex_v >= 0 ? std::optional<double>(ex_v) : std::nullopt,
                           ex_s >= 0 ? std::optional<double>(ex_s) : std::nullopt);
    if (th_cmd->parsed())
      return run_thresholds(g, th_rule, th_ks,
                            th_const_opt->count() ? std::optional<int>(th_const) : std::nullopt,
                            th_prog, th_j, th_s, th_limit);
    if (weyl_cmd->parsed()) {
      if (wy_sum->parsed()) return run_weyl_sum(g, wy_alpha, wy_p, wy_r, wy_k);
      if (wy_r == 0) wy_r = wy_p;
      return run_weyl_scan(g, wy_p, wy_r, wy_k, wy_q, wy_samples, wy_out);
    }
    if (sg_cmd->parsed()) return run_sigma(g, sg_ks, sg_n, sg_x, sg_pcut, sg_out);
    if (pr_cmd->parsed()) return run_predict(g, pr_ks, pr_n, pr_x, pr_eta);
    if (ct_cmd->parsed()) return run_count(g, ct_ks, ct_n, ct_eta, ct_method);
    if (sc_cmd->parsed()) return run_scan(g, sc_ks, sc_n0, sc_n1, sc_eta, sc_out);
    if (xc_cmd->parsed()) return run_exceptions(g, xc_ks, xc_limit, xc_eta);
    if (rp_cmd->parsed()) return run_report(g, rp_bundle);
    if (st_cmd->parsed()) return run_selftest(g);
  } catch (const IntegrityError& e) {
    std::cerr << json{{"error", e.what()}, {"exit", 4}}.dump() << "\n";
    return 4;
  } catch (const ResourceLimitError& e) {
    std::cerr << json{{"error", e.what()}, {"exit", 3}}.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}, {"exit", 2}}.dump() << "\n";
    return 2;
  }
  return 2;
}
