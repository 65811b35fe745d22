#include "circnorm/verification.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "circnorm/circulant.hpp"
#include "circnorm/dft.hpp"
#include "circnorm/estimator.hpp"
#include "circnorm/norms.hpp"

namespace circnorm {

namespace {

constexpr int kMaxDetails = 5;

std::uint64_t suite_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double urand(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int irand(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Circulant random_circulant(std::mt19937_64& rng, int n, double amp = 10.0) {
  std::vector<double> row(static_cast<std::size_t>(n));
  for (double& v : row) v = urand(rng, -amp, amp);
  return Circulant(std::move(row));
}

Circulant random_symmetric_circulant(std::mt19937_64& rng, int n, double amp = 10.0) {
  std::vector<double> row(static_cast<std::size_t>(n));
  row[0] = urand(rng, -amp, amp);
  for (int j = 1; 2 * j <= n; ++j) {
    const double v = urand(rng, -amp, amp);
    row[static_cast<std::size_t>(j)] = v;
    row[static_cast<std::size_t>(n - j)] = v;
  }
  return Circulant(std::move(row));
}

TwoParamCirculant random_two_param(std::mt19937_64& rng, int n, int diag_sign, double amp = 8.0) {
  double diag = 0.0;
  if (diag_sign < 0)
    diag = urand(rng, -amp, -1e-3);
  else if (diag_sign > 0)
    diag = urand(rng, 0.0, amp);
  else
    diag = urand(rng, -amp, amp);
  return make_two_param(n, diag, urand(rng, 0.0, amp));
}

void fail(SuiteResult& suite, const std::string& msg) {
  ++suite.failures;
  if (static_cast<int>(suite.details.size()) < kMaxDetails) suite.details.push_back(msg);
}

std::string describe(const TwoParamCirculant& c) {
  std::ostringstream os;
  os << std::setprecision(17) << "n=" << c.n << " a=" << c.diag << " b=" << c.off_diag;
  return os.str();
}

SuiteResult suite_eigenvalue_oracle(const VerifyOptions& opts) {
  SuiteResult suite{"eigenvalue_oracle"};
  std::mt19937_64 rng(suite_seed(opts.seed, 1));
  const int top = std::min(opts.max_n, 64);
  for (int i = 0; i < opts.cases; ++i) {
    ++suite.cases;
    const int n = irand(rng, 1, top);
    const Circulant c = random_circulant(rng, n);
    double max_coeff = 0.0;
    for (double v : c.first_row()) max_coeff = std::max(max_coeff, std::abs(v));
    const double tol = 1e-9 * n * std::max(max_coeff, 1e-3);

    const Spectrum direct = eigenvalues_direct(c);
    const Spectrum fast = eigenvalues_fft(c);
    const UnitaryFactor f = dft_matrix(n);
    const ComplexMatrix diag_form = f.entries * to_complex(dense(c)) * f.adjoint();
    const std::vector<Complex> via_factor = diagonal(diag_form);

    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      const std::size_t ks = static_cast<std::size_t>(k);
      worst = std::max(worst, std::abs(direct.eigenvalues[ks] - via_factor[ks]));
      worst = std::max(worst, std::abs(direct.eigenvalues[ks] - fast.eigenvalues[ks]));
    }
    if (worst > tol) {
      std::ostringstream os;
      os << std::setprecision(17) << "n=" << n << ": eigenvalue mismatch " << worst
         << " beyond " << tol;
      fail(suite, os.str());
    }
  }
  return suite;
}

SuiteResult suite_spectrum_closed_form(const VerifyOptions& opts) {
  SuiteResult suite{"spectrum_closed_form"};
  std::mt19937_64 rng(suite_seed(opts.seed, 2));
  for (int i = 0; i < opts.cases; ++i) {
    ++suite.cases;
    const int n = irand(rng, 1, std::min(opts.max_n, 64));
    const TwoParamCirculant c = random_two_param(rng, n, 0);
    const Spectrum closed = two_param_spectrum(c);
    const Spectrum general = eigenvalues(c.to_circulant());
    const double tol = 1e-10 * (std::abs(c.diag) + c.n * c.off_diag) + 1e-30;

    std::vector<double> lhs, rhs;
    for (const Complex& v : closed.eigenvalues) lhs.push_back(std::abs(v));
    for (const Complex& v : general.eigenvalues) rhs.push_back(std::abs(v));
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    double worst = std::abs(closed.max_abs - general.max_abs);
    for (std::size_t k = 0; k < lhs.size(); ++k)
      worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
    if (worst > tol) fail(suite, describe(c) + ": spectrum magnitude mismatch");
  }
  return suite;
}

SuiteResult suite_factorization(const VerifyOptions& opts) {
  SuiteResult suite{"factorization"};
  std::mt19937_64 rng(suite_seed(opts.seed, 3));
  std::vector<int> sizes;
  for (int n = 1; n <= std::min(opts.max_n, 64); ++n) sizes.push_back(n);
  if (opts.max_n > 64) {
    sizes.push_back(100);
    if (opts.max_n != 100) sizes.push_back(opts.max_n);
  }
  for (int n : sizes) {
    ++suite.cases;
    const Circulant c = random_circulant(rng, n);
    double max_coeff = 0.0;
    for (double v : c.first_row()) max_coeff = std::max(max_coeff, std::abs(v));
    const double tol = 1e-10 * (1.0 + max_coeff) * n;

    const FactorizationReport report = verify_factorization(c);
    if (report.shift_residual > tol || report.power_sum_residual > tol ||
        report.diagonalization_residual > tol) {
      std::ostringstream os;
      os << std::setprecision(17) << "n=" << n << ": residuals " << report.shift_residual << " "
         << report.power_sum_residual << " " << report.diagonalization_residual << " beyond "
         << tol;
      fail(suite, os.str());
      continue;
    }

    // P^n = identity, exactly: permutation entries stay 0/1 under products
    const RealMatrix p = shift_matrix(n);
    RealMatrix power = RealMatrix::identity(n);
    for (int j = 0; j < n; ++j) power = power * p;
    if (!(power == RealMatrix::identity(n))) {
      std::ostringstream os;
      os << "n=" << n << ": shift matrix to the n-th power is not the identity";
      fail(suite, os.str());
      continue;
    }

    // Plancherel: applying F preserves the Euclidean norm
    const UnitaryFactor f = dft_matrix(n);
    std::vector<Complex> x(static_cast<std::size_t>(n));
    for (Complex& v : x) v = Complex(urand(rng, -5.0, 5.0), urand(rng, -5.0, 5.0));
    double before = 0.0, after = 0.0;
    const std::vector<Complex> fx = f.apply(x);
    for (int k = 0; k < n; ++k) {
      before += std::norm(x[static_cast<std::size_t>(k)]);
      after += std::norm(fx[static_cast<std::size_t>(k)]);
    }
    before = std::sqrt(before);
    after = std::sqrt(after);
    if (std::abs(before - after) > 1e-12 * std::max(1.0, before)) {
      std::ostringstream os;
      os << std::setprecision(17) << "n=" << n << ": Plancherel violated, " << before << " vs "
         << after;
      fail(suite, os.str());
    }
  }
  return suite;
}

SuiteResult suite_matvec_paths(const VerifyOptions& opts) {
  SuiteResult suite{"matvec_paths"};
  std::mt19937_64 rng(suite_seed(opts.seed, 4));
  for (int n = 1; n <= std::min(opts.max_n, 64); ++n) {
    ++suite.cases;
    const Circulant c = random_circulant(rng, n);
    std::vector<double> x(static_cast<std::size_t>(n));
    for (double& v : x) v = urand(rng, -10.0, 10.0);
    const std::vector<double> direct = matvec_direct(c, x);
    const std::vector<double> fast = matvec_fft(c, x);
    double ref = 1.0, diff = 0.0;
    for (int j = 0; j < n; ++j) {
      ref = std::max(ref, std::abs(direct[static_cast<std::size_t>(j)]));
      diff = std::max(diff, std::abs(direct[static_cast<std::size_t>(j)] -
                                     fast[static_cast<std::size_t>(j)]));
    }
    if (diff > 1e-10 * ref) {
      std::ostringstream os;
      os << std::setprecision(17) << "n=" << n << ": product paths differ by " << diff;
      fail(suite, os.str());
    }
  }
  return suite;
}

SuiteResult suite_norm_dispatch(const VerifyOptions& opts) {
  SuiteResult suite{"norm_dispatch"};
  std::mt19937_64 rng(suite_seed(opts.seed, 5));
  for (int i = 0; i < opts.cases; ++i) {
    ++suite.cases;
    const int n = irand(rng, 1, opts.max_n);
    const TwoParamCirculant c = random_two_param(rng, n, 0);
    const double scale = tolerance_scale(c);

    const double spectral = exact_norm_2(c).value;
    const double oracle = eigenvalues(c.to_circulant()).max_abs;
    if (std::abs(spectral - oracle) > 1e-12 * scale) {
      fail(suite, describe(c) + ": spectral norm disagrees with the spectrum oracle");
      continue;
    }

    const RealMatrix a = dense(c.to_circulant());
    if (!(a == transpose(a))) {
      fail(suite, describe(c) + ": dense matrix is not symmetric");
      continue;
    }

    if (c.diag < 0.0 && n >= 2) {
      bool bad = false;
      for (double pv : {2.5, 4.0, 8.0}) {
        const BoundDetails bd = bound_details(c, PExponent::finite(pv));
        if (bd.thm5 > bd.thm4 + 1e-12) {
          fail(suite, describe(c) + ": interpolated bound exceeds the scaled bound");
          bad = true;
          break;
        }
      }
      if (bad) continue;

      for (double pv : {4.0, 8.0}) {
        const NormResult at_p = norm_p(c, PExponent::finite(pv));
        const NormResult at_q = norm_p(c, PExponent::finite(pv).conjugate());
        if (at_p.certificate != at_q.certificate || at_p.kind != at_q.kind ||
            std::abs(at_p.lower - at_q.lower) > 1e-13 * scale ||
            std::abs(at_p.upper - at_q.upper) > 1e-13 * scale) {
          fail(suite, describe(c) + ": conjugate exponents returned different results");
          break;
        }
      }
    }
  }
  return suite;
}

SuiteResult suite_sandwich(const VerifyOptions& opts) {
  SuiteResult suite{"sandwich"};
  std::mt19937_64 rng(suite_seed(opts.seed, 6));
  const int count = std::max(10, opts.cases / 4);
  const int top = std::max(2, opts.max_n);
  for (int i = 0; i < count; ++i) {
    ++suite.cases;
    const int n = irand(rng, 2, top);
    const TwoParamCirculant c = random_two_param(rng, n, -1);
    const double scale = tolerance_scale(c);
    for (double pv : {2.5, 3.0, 4.0, 8.0}) {
      const NormResult res = norm_p(c, PExponent::finite(pv));
      const double est = estimate_norm_p(c.to_circulant(), PExponent::finite(pv)).value;
      if (res.lower - est > 1e-12 * scale || est > res.upper + 1e-8 * scale) {
        std::ostringstream os;
        os << describe(c) << std::setprecision(17) << " p=" << pv << ": estimate " << est
           << " outside [" << res.lower << ", " << res.upper << "]";
        fail(suite, os.str());
        break;
      }
    }
  }
  return suite;
}

SuiteResult suite_witness_ratios(const VerifyOptions& opts) {
  SuiteResult suite{"witness_ratios"};
  std::mt19937_64 rng(suite_seed(opts.seed, 7));
  const std::vector<PExponent> exps{PExponent::finite(2.0), PExponent::finite(3.0),
                                    PExponent::finite(4.5), PExponent::infinity()};
  const int top = std::max(2, opts.max_n);
  for (int i = 0; i < opts.cases; ++i) {
    ++suite.cases;
    const int n = irand(rng, 2, top);
    const TwoParamCirculant c = random_two_param(rng, n, -1);
    const Circulant full = c.to_circulant();
    const double alpha = -c.diag;
    const double wide_claim = std::abs(-alpha + (n - 1) * c.off_diag);
    const double narrow_claim = alpha + c.off_diag;

    std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
    std::vector<double> narrow(static_cast<std::size_t>(n), 0.0);
    narrow[0] = -1.0;
    narrow[1] = 1.0;

    bool ok = true;
    for (const PExponent& p : exps) {
      const double r_ones =
          vector_norm(matvec(full, ones), p) / vector_norm(ones, p);
      const double r_narrow =
          vector_norm(matvec(full, narrow), p) / vector_norm(narrow, p);
      if (std::abs(r_ones - wide_claim) > 1e-10 * std::max(1.0, wide_claim) ||
          std::abs(r_narrow - narrow_claim) > 1e-10 * std::max(1.0, narrow_claim)) {
        ok = false;
        break;
      }
    }
    const LambdaMax lm = lambda_max_abs(c);
    const std::vector<double> w = witness_vector(c, PExponent::finite(3.0));
    const double r_w = vector_norm(matvec(full, w), PExponent::finite(3.0)) /
                       vector_norm(w, PExponent::finite(3.0));
    if (std::abs(r_w - lm.value) > 1e-10 * std::max(1.0, lm.value)) ok = false;
    if (!ok) fail(suite, describe(c) + ": proof vector ratio does not match its claim");
  }
  return suite;
}

SuiteResult suite_exactness_nonneg(const VerifyOptions& opts) {
  SuiteResult suite{"exactness_nonneg"};
  std::mt19937_64 rng(suite_seed(opts.seed, 8));
  const int count = std::max(10, opts.cases / 4);
  for (int i = 0; i < count; ++i) {
    ++suite.cases;
    const int n = irand(rng, 1, opts.max_n);
    const TwoParamCirculant c = random_two_param(rng, n, +1);
    const double expected = c.diag + (n - 1) * c.off_diag;
    bool ok = true;
    for (double pv : {2.0, 2.5, 3.0, 4.0, 8.0, 16.0}) {
      const double est = estimate_norm_p(c.to_circulant(), PExponent::finite(pv)).value;
      if (std::abs(est - expected) > 1e-6 * std::max(1.0, expected)) {
        ok = false;
        break;
      }
    }
    // p = 64 stands in for infinity, with the tolerance widened accordingly
    const double est64 = estimate_norm_p(c.to_circulant(), PExponent::finite(64.0)).value;
    if (std::abs(est64 - expected) > 1e-4 * std::max(1.0, expected)) ok = false;
    if (!ok) fail(suite, describe(c) + ": estimator misses the exact non-negative value");
  }
  return suite;
}

SuiteResult suite_duality_estimates(const VerifyOptions& opts) {
  SuiteResult suite{"duality_estimates"};
  std::mt19937_64 rng(suite_seed(opts.seed, 9));
  const int count = std::max(5, opts.cases / 8);
  const int top = std::max(2, opts.max_n);
  for (int i = 0; i < count; ++i) {
    ++suite.cases;
    const int n = irand(rng, 2, top);
    const Circulant c = random_symmetric_circulant(rng, n);
    for (double pv : {3.0, 4.0, 8.0}) {
      const DualityReport rep = check_duality(c, pv);
      if (!rep.passed) {
        std::ostringstream os;
        os << std::setprecision(17) << "n=" << n << " p=" << pv << ": estimates "
           << rep.estimate_p << " vs " << rep.estimate_q << " differ by " << rep.difference;
        fail(suite, os.str());
        break;
      }
    }
  }
  return suite;
}

SuiteResult suite_monotonicity(const VerifyOptions& opts) {
  SuiteResult suite{"monotonicity"};
  std::mt19937_64 rng(suite_seed(opts.seed, 10));
  const int count = std::max(5, opts.cases / 8);
  const std::vector<double> grid{2.0, 2.5, 3.0, 4.0, 6.0, 8.0, 12.0, 16.0};
  for (int i = 0; i < count; ++i) {
    ++suite.cases;
    const int n = irand(rng, 1, opts.max_n);
    const TwoParamCirculant c = random_two_param(rng, n, 0);
    const MonotonicityReport rep = check_monotonicity(c.to_circulant(), grid);
    if (!rep.passed) fail(suite, describe(c) + ": " + rep.detail);
  }
  return suite;
}

SuiteResult suite_boundary_branches(const VerifyOptions& opts) {
  SuiteResult suite{"boundary_branches"};
  for (int n = 3; n <= std::min(opts.max_n, 24); ++n) {
    ++suite.cases;
    const long long t = 1 + (n % 3);
    // 2|a| = (n-2) b with a = -(n-2) t and b = 2t; both branch values are n*t
    const long long alpha = (n - 2) * t;
    const long long wide_branch = -alpha + (n - 1) * 2 * t;
    const long long narrow_branch = alpha + 2 * t;
    if (wide_branch != narrow_branch) {
      fail(suite, "n=" + std::to_string(n) + ": integer branch values differ");
      continue;
    }
    const TwoParamCirculant c =
        make_two_param(n, -static_cast<double>(alpha), static_cast<double>(2 * t));
    const double fw = -std::abs(c.diag) + (n - 1) * c.off_diag;
    const double fn = std::abs(c.diag) + c.off_diag;
    if (std::abs(fw - fn) > 1e-12) {
      fail(suite, describe(c) + ": floating branch values differ at the boundary");
      continue;
    }
    const LambdaMax lm = lambda_max_abs(c);
    if (lm.regime != Regime::Boundary) {
      fail(suite, describe(c) + ": boundary case not flagged as BOUNDARY");
      continue;
    }
    const double est = estimate_norm_p(c.to_circulant(), PExponent::finite(2.0)).value;
    if (std::abs(est - lm.value) > 1e-7 * std::max(1.0, lm.value))
      fail(suite, describe(c) + ": spectral estimate misses the boundary value");
  }
  // the n = 2 degenerate split: WIDE only at a = 0
  ++suite.cases;
  if (lambda_max_abs(make_two_param(2, 0.0, 3.0)).regime != Regime::Boundary ||
      lambda_max_abs(make_two_param(2, -1.0, 3.0)).regime != Regime::Narrow)
    fail(suite, "n=2: degenerate regime split misclassified");
  return suite;
}

SuiteResult suite_brute_force_agreement(const VerifyOptions& opts) {
  SuiteResult suite{"brute_force_agreement"};
  for (int n : {1, 2, 3}) {
    for (double diag : {-2.0, 1.0}) {
      for (double pv : {2.0, 3.0}) {
        ++suite.cases;
        const TwoParamCirculant c = make_two_param(n, diag, 1.0);
        const double bf = brute_force_norm_p(c.to_circulant(), PExponent::finite(pv), 10000);
        const double est = estimate_norm_p(c.to_circulant(), PExponent::finite(pv)).value;
        if (std::abs(bf - est) > 1e-3 * tolerance_scale(c)) {
          std::ostringstream os;
          os << describe(c) << std::setprecision(17) << " p=" << pv << ": brute force " << bf
             << " vs estimate " << est;
          fail(suite, os.str());
        }
      }
    }
  }
  (void)opts;
  return suite;
}

SuiteResult suite_reproducibility(const VerifyOptions& opts) {
  SuiteResult suite{"reproducibility"};
  std::mt19937_64 rng(suite_seed(opts.seed, 11));
  for (int i = 0; i < 3; ++i) {
    ++suite.cases;
    const int n = irand(rng, 2, std::max(2, opts.max_n));
    const TwoParamCirculant c = random_two_param(rng, n, 0);
    EstimatorOptions eopts;
    eopts.seed = opts.seed + static_cast<std::uint64_t>(i);
    const EstimateReport first = estimate_norm_p(c.to_circulant(), PExponent::finite(3.0), eopts);
    const EstimateReport second = estimate_norm_p(c.to_circulant(), PExponent::finite(3.0), eopts);
    if (first.value != second.value || first.witness != second.witness ||
        first.iterations_used != second.iterations_used)
      fail(suite, describe(c) + ": repeated runs with one seed differ");
  }
  return suite;
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& opts) {
  if (opts.max_n < 1 || opts.max_n > 256)
    throw std::invalid_argument("run_verification: max_n must be in [1, 256]");
  if (opts.cases < 1) throw std::invalid_argument("run_verification: cases must be >= 1");

  std::vector<SuiteResult> results;
  results.push_back(suite_eigenvalue_oracle(opts));
  results.push_back(suite_spectrum_closed_form(opts));
  results.push_back(suite_factorization(opts));
  results.push_back(suite_matvec_paths(opts));
  results.push_back(suite_norm_dispatch(opts));
  results.push_back(suite_sandwich(opts));
  results.push_back(suite_witness_ratios(opts));
  results.push_back(suite_exactness_nonneg(opts));
  results.push_back(suite_duality_estimates(opts));
  results.push_back(suite_monotonicity(opts));
  results.push_back(suite_boundary_branches(opts));
  results.push_back(suite_brute_force_agreement(opts));
  results.push_back(suite_reproducibility(opts));
  return results;
}

}  // namespace circnorm
