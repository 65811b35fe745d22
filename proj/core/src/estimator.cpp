#include "circnorm/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace circnorm {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

void normalize_p(std::vector<double>& x, PExponent p) {
  const double nrm = vector_norm(x, p);
  if (nrm == 0.0) throw std::invalid_argument("normalize_p: zero vector");
  for (double& v : x) v /= nrm;
}

// sign(v_i) |v_i|^expo, computed on v / max|v| so large exponents cannot
// overflow; the caller renormalizes, which absorbs the dropped factor.
std::vector<double> signed_power_scaled(const std::vector<double>& v, double expo) {
  double m = 0.0;
  for (double vi : v) m = std::max(m, std::abs(vi));
  std::vector<double> w(v.size(), 0.0);
  if (m == 0.0) return w;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double r = std::abs(v[i]) / m;
    if (r == 0.0) continue;
    w[i] = std::copysign(std::pow(r, expo), v[i]);
  }
  return w;
}

struct RestartOutcome {
  double value = 0.0;
  std::vector<double> witness;
  int iterations = 0;
  bool converged = false;
};

RestartOutcome run_dual_iteration(const Circulant& c, const Circulant& ct, double p,
                                  std::vector<double> x, int max_iterations, double tolerance) {
  const double q = p / (p - 1.0);
  RestartOutcome out;
  double prev = -1.0;
  for (int it = 1; it <= max_iterations; ++it) {
    out.iterations = it;
    const std::vector<double> y = matvec(c, x);
    const double val = vector_norm(y, PExponent::finite(p));
    if (val == 0.0) {
      out.converged = true;  // direction in the kernel; nothing to improve here
      break;
    }
    if (prev >= 0.0 && std::abs(val - prev) <= tolerance * val) {
      out.converged = true;
      break;
    }
    prev = val;
    const std::vector<double> z = signed_power_scaled(y, p - 1.0);
    std::vector<double> w = matvec(ct, z);
    if (std::all_of(w.begin(), w.end(), [](double v) { return v == 0.0; })) {
      out.converged = true;
      break;
    }
    x = signed_power_scaled(w, q - 1.0);
    normalize_p(x, PExponent::finite(p));
  }
  // Recompute from the final direction so value and witness always match.
  out.value = vector_norm(matvec(c, x), PExponent::finite(p));
  out.witness = std::move(x);
  return out;
}

EstimateReport exact_column_sum(const Circulant& c) {
  const int n = c.size();
  double best = -1.0;
  int best_col = 0;
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::abs(c.entry(i, j));
    if (s > best) {
      best = s;
      best_col = j;
    }
  }
  std::vector<double> witness(static_cast<std::size_t>(n), 0.0);
  witness[static_cast<std::size_t>(best_col)] = 1.0;
  return EstimateReport{best, std::move(witness), 0, true, 0};
}

EstimateReport exact_row_sum(const Circulant& c) {
  const int n = c.size();
  double best = -1.0;
  int best_row = 0;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += std::abs(c.entry(i, j));
    if (s > best) {
      best = s;
      best_row = i;
    }
  }
  std::vector<double> witness(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    witness[static_cast<std::size_t>(j)] = c.entry(best_row, j) < 0.0 ? -1.0 : 1.0;
  const double value = vector_norm(matvec(c, witness), PExponent::infinity());
  return EstimateReport{value, std::move(witness), 0, true, 0};
}

void validate(const EstimatorOptions& opts) {
  if (opts.restarts < 1) throw std::invalid_argument("estimator: restarts must be >= 1");
  if (opts.max_iterations < 1) throw std::invalid_argument("estimator: max_iterations must be >= 1");
  if (!(opts.tolerance > 0.0)) throw std::invalid_argument("estimator: tolerance must be positive");
}

}  // namespace

EstimateReport estimate_norm_p(const Circulant& c, PExponent p, const EstimatorOptions& opts) {
  validate(opts);
  if (p.value() == 1.0) return exact_column_sum(c);
  if (p.is_infinite()) return exact_row_sum(c);

  const int n = c.size();
  const double pv = p.value();
  const Circulant ct = transpose(c);

  std::vector<std::vector<double>> starts;
  starts.push_back(std::vector<double>(static_cast<std::size_t>(n), 1.0));
  if (n > 1) {
    std::vector<double> alt(static_cast<std::size_t>(n), 0.0);
    alt[0] = -1.0;
    alt[1] = 1.0;
    starts.push_back(std::move(alt));
  }
  for (const std::vector<double>& s : opts.extra_starts) {
    if (static_cast<int>(s.size()) != n)
      throw std::invalid_argument("estimator: extra start of wrong dimension");
    bool nonzero = false;
    for (double v : s) {
      if (!std::isfinite(v)) throw std::invalid_argument("estimator: extra start not finite");
      nonzero = nonzero || v != 0.0;
    }
    if (!nonzero) throw std::invalid_argument("estimator: extra start is zero");
    starts.push_back(s);
  }
  for (int r = 0; r < opts.restarts; ++r) {
    std::mt19937_64 rng(mix_seed(opts.seed, static_cast<std::uint64_t>(r)));
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> x(static_cast<std::size_t>(n));
    bool nonzero = false;
    while (!nonzero) {
      for (double& v : x) v = dist(rng);
      for (double v : x) nonzero = nonzero || std::abs(v) > 1e-12;
    }
    starts.push_back(std::move(x));
  }

  RestartOutcome best;
  best.value = -1.0;
  for (std::vector<double>& s : starts) {
    normalize_p(s, p);
    RestartOutcome o = run_dual_iteration(c, ct, pv, std::move(s), opts.max_iterations,
                                          opts.tolerance);
    if (o.value > best.value) best = std::move(o);
  }
  return EstimateReport{best.value, std::move(best.witness), best.iterations, best.converged,
                        static_cast<int>(starts.size())};
}

namespace {

double direction_ratio(const Circulant& c, PExponent p, const std::vector<double>& x) {
  const double den = vector_norm(x, p);
  if (den == 0.0) return 0.0;
  return vector_norm(matvec(c, x), p) / den;
}

// Pattern search over directions: nudge one coordinate at a time with a
// shrinking step, keeping whatever improves the ratio.
double refine_direction(const Circulant& c, PExponent p, std::vector<double> x, double& best_val) {
  const std::size_t n = x.size();
  for (double step = 0.5; step > 1e-10; step *= 0.5) {
    bool improved = true;
    int sweeps = 0;
    while (improved && sweeps++ < 60) {
      improved = false;
      for (std::size_t i = 0; i < n; ++i) {
        for (double s : {step, -step}) {
          std::vector<double> cand = x;
          cand[i] += s;
          const double v = direction_ratio(c, p, cand);
          if (v > best_val) {
            best_val = v;
            x = std::move(cand);
            improved = true;
          }
        }
      }
    }
  }
  return best_val;
}

}  // namespace

double brute_force_norm_p(const Circulant& c, PExponent p, int resolution, std::uint64_t seed) {
  const int n = c.size();
  if (n > 4) throw std::invalid_argument("brute_force_norm_p: only n <= 4 is supported");
  if (resolution < 1) throw std::invalid_argument("brute_force_norm_p: resolution must be >= 1");

  if (n == 1) return std::abs(c.first_row()[0]);

  double best_val = 0.0;
  std::vector<double> best_x;

  if (n == 2) {
    for (int i = 0; i < resolution; ++i) {
      const double theta = std::numbers::pi * static_cast<double>(i) / resolution;
      const std::vector<double> x{std::cos(theta), std::sin(theta)};
      const double v = direction_ratio(c, p, x);
      if (v > best_val) {
        best_val = v;
        best_x = x;
      }
    }
  } else if (n == 3) {
    const int m = std::max(8, static_cast<int>(std::sqrt(static_cast<double>(resolution))));
    for (int i = 0; i <= m; ++i) {
      const double theta = std::numbers::pi * static_cast<double>(i) / m;
      for (int j = 0; j < m; ++j) {
        const double phi = std::numbers::pi * static_cast<double>(j) / m;
        const std::vector<double> x{std::sin(theta) * std::cos(phi),
                                    std::sin(theta) * std::sin(phi), std::cos(theta)};
        const double v = direction_ratio(c, p, x);
        if (v > best_val) {
          best_val = v;
          best_x = x;
        }
      }
    }
  } else {
    std::mt19937_64 rng(mix_seed(seed, 0));
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < resolution; ++i) {
      std::vector<double> x(4);
      double norm2 = 0.0;
      for (double& v : x) {
        v = gauss(rng);
        norm2 += v * v;
      }
      if (norm2 < 1e-24) continue;
      const double v = direction_ratio(c, p, x);
      if (v > best_val) {
        best_val = v;
        best_x = std::move(x);
      }
    }
  }

  if (best_x.empty()) return best_val;  // zero matrix
  return refine_direction(c, p, std::move(best_x), best_val);
}

MonotonicityReport check_monotonicity(const Circulant& c, const std::vector<double>& p_grid,
                                      const EstimatorOptions& opts) {
  if (p_grid.empty()) throw std::invalid_argument("check_monotonicity: empty grid");
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    if (p_grid[i] < 2.0)
      throw std::invalid_argument("check_monotonicity: exponents must be >= 2");
    if (i > 0 && p_grid[i] <= p_grid[i - 1])
      throw std::invalid_argument("check_monotonicity: grid must be strictly ascending");
  }
  MonotonicityReport report;
  report.passed = true;
  report.grid = p_grid;
  const double slack = 5e-7 * tolerance_scale(c);
  for (double p : p_grid)
    report.estimates.push_back(estimate_norm_p(c, PExponent::finite(p), opts).value);
  for (std::size_t i = 1; i < report.estimates.size(); ++i) {
    if (report.estimates[i] < report.estimates[i - 1] - slack) {
      report.passed = false;
      std::ostringstream os;
      os << "estimate at p=" << p_grid[i] << " (" << report.estimates[i]
         << ") dropped below p=" << p_grid[i - 1] << " (" << report.estimates[i - 1]
         << ") beyond slack " << slack;
      report.detail = os.str();
      break;
    }
  }
  return report;
}

DualityReport check_duality(const Circulant& c, double p, const EstimatorOptions& opts) {
  if (!is_symmetric(c))
    throw std::invalid_argument("check_duality: requires a symmetric circulant");
  if (!(p > 2.0) || !std::isfinite(p))
    throw std::invalid_argument("check_duality: requires finite p > 2");
  const PExponent pe = PExponent::finite(p);
  const PExponent qe = pe.conjugate();
  EstimateReport rp = estimate_norm_p(c, pe, opts);
  EstimateReport rq = estimate_norm_p(c, qe, opts);
  const double tol = 1e-5 * tolerance_scale(c);

  // If x has ratio r at one exponent then Psi(Ax) has ratio >= r at the
  // conjugate one (Hoelder equality against Ax plus symmetry), so handing
  // witnesses across can only raise whichever side got stuck.
  const auto dual_start = [&c](const std::vector<double>& w, double expo) {
    return signed_power_scaled(matvec(c, w), expo - 1.0);
  };
  const auto is_zero = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
  };
  for (int round = 0; round < 3 && std::abs(rp.value - rq.value) > tol; ++round) {
    EstimatorOptions warm = opts;
    warm.restarts = 1;
    bool moved = false;
    std::vector<double> sq = dual_start(rp.witness, pe.value());
    if (!is_zero(sq)) {
      warm.extra_starts = {std::move(sq)};
      EstimateReport wq = estimate_norm_p(c, qe, warm);
      if (wq.value > rq.value) {
        rq = std::move(wq);
        moved = true;
      }
    }
    std::vector<double> sp = dual_start(rq.witness, qe.value());
    if (!is_zero(sp)) {
      warm.extra_starts = {std::move(sp)};
      EstimateReport wp = estimate_norm_p(c, pe, warm);
      if (wp.value > rp.value) {
        rp = std::move(wp);
        moved = true;
      }
    }
    if (!moved) break;
  }

  const double diff = std::abs(rp.value - rq.value);
  return DualityReport{diff <= tol, p, qe.value(), rp.value, rq.value, diff, tol};
}

}  // namespace circnorm
