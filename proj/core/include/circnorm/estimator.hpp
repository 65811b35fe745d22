#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circnorm/circulant.hpp"
#include "circnorm/norms.hpp"

namespace circnorm {

struct EstimatorOptions {
  int restarts = 16;          // random starts on top of the two deterministic ones
  int max_iterations = 10000;
  double tolerance = 1e-12;   // relative change of ||Ax||_p between sweeps
  std::uint64_t seed = 0;
  std::vector<std::vector<double>> extra_starts;  // warm starts, tried before the random ones
};

struct EstimateReport {
  double value;                  // ||A w||_p for the returned unit witness w; never above the norm
  std::vector<double> witness;   // unit p-norm
  int iterations_used;           // iterations of the restart that won
  bool converged;                // whether that restart hit the tolerance
  int restarts_run;
};

/// Lower-bound estimate of the induced p-norm by dual power iteration:
/// x <- Phi_p(A^T Psi_p(A x)) with Psi_p(v)_i = sign(v_i)|v_i|^{p-1} and
/// Phi_p the unit-p-norm maximizer of the dual pairing. Starts from the
/// all-ones vector, from [-1, 1, 0, ..., 0], and from seeded random
/// directions; keeps the best value found (ties to the earliest start).
/// p = 1 and p = inf are answered exactly by column and row sums.
/// Deterministic: identical inputs and seed give identical reports.
EstimateReport estimate_norm_p(const Circulant& c, PExponent p,
                               const EstimatorOptions& opts = {});

/// Grid search over unit-p-norm directions with local refinement. Only for
/// n <= 4; the result is a valid lower bound that converges to the norm as
/// resolution grows.
double brute_force_norm_p(const Circulant& c, PExponent p, int resolution,
                          std::uint64_t seed = 0);

struct MonotonicityReport {
  bool passed;
  std::vector<double> grid;
  std::vector<double> estimates;
  std::string detail;  // first violation, when any
};

/// Estimates along an ascending grid of exponents >= 2 and checks the
/// values never decrease beyond a 5e-7 * scale slack.
MonotonicityReport check_monotonicity(const Circulant& c, const std::vector<double>& p_grid,
                                      const EstimatorOptions& opts = {});

struct DualityReport {
  bool passed;
  double p;
  double q;
  double estimate_p;
  double estimate_q;
  double difference;
  double tolerance;
};

/// For a symmetric circulant the norm at p and at the conjugate exponent
/// agree; checks the two estimates within 1e-5 * scale. When they disagree,
/// each side is re-run from the other side's witness pushed through the
/// duality map x -> Psi(Ax), which can only raise the estimates, before the
/// final comparison.
DualityReport check_duality(const Circulant& c, double p, const EstimatorOptions& opts = {});

}  // namespace circnorm
