#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circnorm/circulant.hpp"
#include "circnorm/estimator.hpp"
#include "circnorm/norms.hpp"
#include "circnorm/verification.hpp"

namespace {

using namespace circnorm;

// 15 significant digits, '.' separator, no locale involvement
std::string fmt15(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 15);
  return std::string(buf, res.ptr);
}

PExponent parse_exponent(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (s == "inf") return PExponent::infinity();
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::invalid_argument("exponent must be a real number >= 1 or 'inf'");
  return PExponent::finite(v);
}

int run_exact(int n, double a, double b, const std::string& p_str) {
  const TwoParamCirculant c = make_two_param(n, a, b);
  const NormResult res = norm_p(c, parse_exponent(p_str));
  if (res.kind == NormResult::Kind::Exact)
    std::cout << "EXACT " << fmt15(res.value) << " (" << to_string(res.certificate) << ")\n";
  else
    std::cout << "INTERVAL [" << fmt15(res.lower) << ", " << fmt15(res.upper) << "] ("
              << to_string(res.certificate) << ")\n";
  return 0;
}

int run_estimate(const std::vector<double>& first_row, int n, double a, double b, bool family_set,
                 const std::string& p_str, int restarts, double tol, std::uint64_t seed,
                 bool print_witness) {
  if (first_row.empty() && !family_set)
    throw std::invalid_argument("estimate: provide either --first-row or --n/--a/--b");
  if (!first_row.empty() && family_set)
    throw std::invalid_argument("estimate: --first-row excludes --n/--a/--b");
  const Circulant c =
      first_row.empty() ? make_two_param(n, a, b).to_circulant() : Circulant(first_row);
  EstimatorOptions opts;
  opts.restarts = restarts;
  opts.tolerance = tol;
  opts.seed = seed;
  const EstimateReport rep = estimate_norm_p(c, parse_exponent(p_str), opts);
  std::cout << "value " << fmt15(rep.value) << "\n";
  std::cout << "converged " << (rep.converged ? "true" : "false") << "\n";
  std::cout << "iterations " << rep.iterations_used << "\n";
  std::cout << "restarts " << rep.restarts_run << "\n";
  if (print_witness) {
    std::cout << "witness ";
    for (std::size_t i = 0; i < rep.witness.size(); ++i)
      std::cout << (i ? "," : "") << fmt15(rep.witness[i]);
    std::cout << "\n";
  }
  return 0;
}

struct SweepRow {
  int n;
  double a, b, p;
  double lower, upper_thm4, upper_thm5, upper_combined, estimate, gap_ratio;
  std::string certificate;
};

SweepRow compute_row(const TwoParamCirculant& c, double pv) {
  const PExponent p = PExponent::finite(pv);
  const NormResult res = norm_p(c, p);
  const double norm2 = exact_norm_2(c).value;
  const double inf_norm = norm_1_inf(c);
  SweepRow row;
  row.n = c.n;
  row.a = c.diag;
  row.b = c.off_diag;
  row.p = pv;
  row.lower = res.lower;
  row.upper_thm4 = std::pow(static_cast<double>(c.n), 0.5 - 1.0 / pv) * norm2;
  row.upper_thm5 = std::pow(norm2, 2.0 / pv) * std::pow(inf_norm, 1.0 - 2.0 / pv);
  row.upper_combined = res.upper;
  row.estimate = estimate_norm_p(c.to_circulant(), p).value;
  row.gap_ratio = row.lower > 0.0 ? row.upper_combined / row.lower : 1.0;
  row.certificate = to_string(res.certificate);
  return row;
}

int run_sweep(int n, double a, double b, double p_min, double p_max, int p_steps,
              const std::string& format) {
  if (p_min < 2.0) throw std::invalid_argument("sweep: --p-min must be >= 2");
  if (p_max < p_min) throw std::invalid_argument("sweep: --p-max must be >= --p-min");
  if (p_steps < 1) throw std::invalid_argument("sweep: --p-steps must be >= 1");
  if (format != "csv" && format != "json")
    throw std::invalid_argument("sweep: --format must be csv or json");
  const TwoParamCirculant c = make_two_param(n, a, b);

  std::vector<double> grid;
  if (p_steps == 1) {
    grid.push_back(p_min);
  } else {
    const double log_step = (std::log(p_max) - std::log(p_min)) / (p_steps - 1);
    for (int i = 0; i < p_steps; ++i) grid.push_back(p_min * std::exp(i * log_step));
    grid.front() = p_min;
    grid.back() = p_max;
  }

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double pv : grid) rows.push_back(compute_row(c, pv));

  if (format == "csv") {
    std::cout << "n,a,b,p,lower,upper_thm4,upper_thm5,upper_combined,estimate,gap_ratio,"
                 "certificate\n";
    for (const SweepRow& r : rows) {
      std::cout << r.n << ',' << fmt15(r.a) << ',' << fmt15(r.b) << ',' << fmt15(r.p) << ','
                << fmt15(r.lower) << ',' << fmt15(r.upper_thm4) << ',' << fmt15(r.upper_thm5)
                << ',' << fmt15(r.upper_combined) << ',' << fmt15(r.estimate) << ','
                << fmt15(r.gap_ratio) << ',' << r.certificate << "\n";
    }
  } else {
    std::cout << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const SweepRow& r = rows[i];
      std::cout << "  {\"n\": " << r.n << ", \"a\": " << fmt15(r.a) << ", \"b\": " << fmt15(r.b)
                << ", \"p\": " << fmt15(r.p) << ", \"lower\": " << fmt15(r.lower)
                << ", \"upper_thm4\": " << fmt15(r.upper_thm4) << ", \"upper_thm5\": "
                << fmt15(r.upper_thm5) << ", \"upper_combined\": " << fmt15(r.upper_combined)
                << ", \"estimate\": " << fmt15(r.estimate) << ", \"gap_ratio\": "
                << fmt15(r.gap_ratio) << ", \"certificate\": \"" << r.certificate << "\"}"
                << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    std::cout << "]\n";
  }
  return 0;
}

int run_verify(int max_n, std::uint64_t seed, int cases) {
  VerifyOptions opts;
  opts.max_n = max_n;
  opts.seed = seed;
  opts.cases = cases;
  const std::vector<SuiteResult> results = run_verification(opts);
  int failing_suites = 0;
  int total_cases = 0;
  for (const SuiteResult& s : results) {
    total_cases += s.cases;
    const bool ok = s.failures == 0;
    if (!ok) ++failing_suites;
    std::cout << s.name;
    for (std::size_t i = s.name.size(); i < 26; ++i) std::cout << ' ';
    std::cout << "cases=" << s.cases << " failures=" << s.failures << (ok ? " PASS" : " FAIL")
              << "\n";
    for (const std::string& d : s.details) std::cout << "  " << d << "\n";
  }
  if (failing_suites == 0) {
    std::cout << "verify: PASS (" << results.size() << " suites, " << total_cases << " cases)\n";
    return 0;
  }
  std::cout << "verify: FAIL (" << failing_suites << " of " << results.size()
            << " suites failing)\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced p-norms of circulant matrices: closed forms, certified bounds, and "
               "independent estimators"};
  app.require_subcommand(1);

  auto* exact = app.add_subcommand("exact", "Closed-form norm value or certified interval");
  int ex_n = 0;
  double ex_a = 0.0, ex_b = 0.0;
  std::string ex_p;
  exact->add_option("--n", ex_n, "dimension")->required();
  exact->add_option("--a", ex_a, "diagonal value")->required();
  exact->add_option("--b", ex_b, "off-diagonal value (>= 0)")->required();
  exact->add_option("--p", ex_p, "exponent in [1, inf]; 'inf' spells infinity")->required();

  auto* estimate = app.add_subcommand("estimate", "Dual power iteration lower-bound estimate");
  std::vector<double> es_row;
  int es_n = 0;
  double es_a = 0.0, es_b = 0.0;
  std::string es_p;
  int es_restarts = 16;
  double es_tol = 1e-12;
  std::uint64_t es_seed = 0;
  bool es_witness = false;
  auto* es_row_opt =
      estimate->add_option("--first-row", es_row, "comma-separated first row of any circulant")
          ->delimiter(',');
  auto* es_n_opt = estimate->add_option("--n", es_n, "dimension");
  auto* es_a_opt = estimate->add_option("--a", es_a, "diagonal value");
  auto* es_b_opt = estimate->add_option("--b", es_b, "off-diagonal value (>= 0)");
  estimate->add_option("--p", es_p, "exponent in [1, inf]")->required();
  estimate->add_option("--restarts", es_restarts, "random restarts on top of deterministic starts");
  estimate->add_option("--tol", es_tol, "relative convergence tolerance");
  estimate->add_option("--seed", es_seed, "seed for the random restarts");
  estimate->add_flag("--witness", es_witness, "also print the witness direction");
  es_row_opt->excludes(es_n_opt)->excludes(es_a_opt)->excludes(es_b_opt);

  auto* sweep = app.add_subcommand("sweep", "Bounds and estimates over a geometric exponent grid");
  int sw_n = 0, sw_steps = 0;
  double sw_a = 0.0, sw_b = 0.0, sw_pmin = 0.0, sw_pmax = 0.0;
  std::string sw_format = "csv";
  sweep->add_option("--n", sw_n, "dimension")->required();
  sweep->add_option("--a", sw_a, "diagonal value")->required();
  sweep->add_option("--b", sw_b, "off-diagonal value (>= 0)")->required();
  sweep->add_option("--p-min", sw_pmin, "smallest exponent (>= 2)")->required();
  sweep->add_option("--p-max", sw_pmax, "largest exponent")->required();
  sweep->add_option("--p-steps", sw_steps, "number of grid points")->required();
  sweep->add_option("--format", sw_format, "csv or json");

  auto* verify = app.add_subcommand("verify", "Run every module's randomized invariant suite");
  int vf_max_n = 16;
  std::uint64_t vf_seed = 0;
  int vf_cases = 200;
  verify->add_option("--max-n", vf_max_n, "largest dimension drawn (<= 256)");
  verify->add_option("--seed", vf_seed, "seed for case generation");
  verify->add_option("--cases", vf_cases, "randomized case count");

  int exit_code = 0;
  exact->callback([&]() { exit_code = run_exact(ex_n, ex_a, ex_b, ex_p); });
  estimate->callback([&]() {
    const bool family_set = es_n_opt->count() || es_a_opt->count() || es_b_opt->count();
    exit_code = run_estimate(es_row, es_n, es_a, es_b, family_set, es_p, es_restarts, es_tol,
                             es_seed, es_witness);
  });
  sweep->callback(
      [&]() { exit_code = run_sweep(sw_n, sw_a, sw_b, sw_pmin, sw_pmax, sw_steps, sw_format); });
  verify->callback([&]() { exit_code = run_verify(vf_max_n, vf_seed, vf_cases); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
