#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circnorm/circulant.hpp"

namespace circnorm {

/// Holder exponent in [1, inf]. Infinity is a first-class value.
class PExponent {
 public:
  static PExponent finite(double p);
  static PExponent infinity();

  double value() const { return value_; }
  bool is_infinite() const;
  PExponent conjugate() const;

  bool operator==(const PExponent&) const = default;

 private:
  explicit PExponent(double v) : value_(v) {}
  double value_;
};

PExponent conjugate_exponent(PExponent p);

/// ||y||_p, overflow-safe (largest entry factored out before powering).
double vector_norm(std::span<const double> y, PExponent p);

/// Which branch of the negative-diagonal norm formula applies:
/// WIDE when 2|diag| < (n-2) off_diag, NARROW when >, BOUNDARY at equality.
enum class Regime { Wide, Narrow, Boundary };

enum class Certificate {
  Inspection,
  Lemma1Case1,
  Lemma1Case2,
  Thm2Case1,
  Thm2Case2,
  Thm3,
  Thm4,
  Thm5,
  RemarkNonneg,
};

const char* to_string(Regime r);
const char* to_string(Certificate c);

struct NormResult {
  enum class Kind { Exact, Interval };

  Kind kind;
  double value;  // for Exact results; equals lower = upper
  double lower;
  double upper;
  Certificate certificate;
  std::optional<std::vector<double>> witness;  // achieves `lower` when present
};

/// Common scale for relative comparisons: 1 + |diag| + n * off_diag.
double tolerance_scale(const TwoParamCirculant& c);
/// General-circulant variant: 1 + sum_j |a_j|.
double tolerance_scale(const Circulant& c);

/// Exact value of the 1-norm and the infinity-norm: |diag| + (n-1) off_diag.
double norm_1_inf(const TwoParamCirculant& c);

struct LambdaMax {
  double value;
  Regime regime;
};

/// Largest eigenvalue magnitude of the two-parameter family in closed form,
/// together with the branch that produced it.
LambdaMax lambda_max_abs(const TwoParamCirculant& c);

/// Spectral norm; equals lambda_max_abs because the family is symmetric.
NormResult exact_norm_2(const TwoParamCirculant& c);

/// For diag >= 0 the induced p-norm is diag + (n-1) off_diag for every
/// p in [1, inf]; the all-ones vector attains it.
NormResult exact_norm_p_nonneg(const TwoParamCirculant& c, PExponent p);

/// Any circulant with non-negative entries has induced p-norm sum_j a_j.
NormResult general_nonneg_circulant_norm(const Circulant& c, PExponent p);

struct BoundDetails {
  double lower;  // the spectral norm
  double thm4;   // n^{1/2 - 1/p} * lower
  double thm5;   // lower^{2/p} * (inf-norm)^{1 - 2/p}
};

/// The two upper bounds for diag < 0 and finite p >= 2, before taking min.
BoundDetails bound_details(const TwoParamCirculant& c, PExponent p);

/// Certified interval for diag < 0 and finite p >= 2. Collapses to the
/// exact spectral norm at p = 2.
NormResult bounds_p(const TwoParamCirculant& c, PExponent p);

/// Norm-attaining direction for diag < 0: all-ones in the WIDE regime,
/// [-1, 1, 0, ..., 0] in the NARROW regime and at the BOUNDARY.
/// Its p-norm ratio equals lambda_max_abs for every p.
std::vector<double> witness_vector(const TwoParamCirculant& c, PExponent p);

/// Full dispatch: inspection for p in {1, inf} and n = 1, the exact value
/// for diag >= 0 or p = 2, duality-mapped certified bounds otherwise.
NormResult norm_p(const TwoParamCirculant& c, PExponent p);

}  // namespace circnorm
