#include "circnorm/dft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace circnorm {

namespace {

constexpr int kDenseGuard = 4096;

std::vector<Complex> unit_roots(int n) {
  std::vector<Complex> roots(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m)
    roots[static_cast<std::size_t>(m)] =
        std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
  return roots;
}

// M * diag(d), i.e. column k scaled by d[k]
ComplexMatrix scale_columns(const ComplexMatrix& m, const std::vector<Complex>& d) {
  ComplexMatrix out = m;
  for (int i = 0; i < out.rows(); ++i)
    for (int k = 0; k < out.cols(); ++k) out(i, k) *= d[static_cast<std::size_t>(k)];
  return out;
}

}  // namespace

UnitaryFactor dft_matrix(int n) {
  if (n < 1) throw std::invalid_argument("dft_matrix: dimension must be positive");
  const std::vector<Complex> roots = unit_roots(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix f(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const long long idx = (static_cast<long long>(j) * k) % n;
      f(j, k) = std::conj(roots[static_cast<std::size_t>(idx)]) * scale;
    }
  }
  return UnitaryFactor{n, std::move(f)};
}

RealMatrix shift_matrix(int n) {
  if (n < 1) throw std::invalid_argument("shift_matrix: dimension must be positive");
  RealMatrix p(n, n);
  for (int r = 0; r < n; ++r) p(r, (r + 1) % n) = 1.0;
  return p;
}

FactorizationReport verify_factorization(const Circulant& c) {
  const int n = c.size();
  if (n > kDenseGuard)
    throw std::length_error("verify_factorization: limited to n <= 4096");

  const UnitaryFactor f = dft_matrix(n);
  const ComplexMatrix f_adj = f.adjoint();
  const std::vector<Complex> roots = unit_roots(n);
  const RealMatrix p = shift_matrix(n);

  // P = F* Omega F
  const ComplexMatrix p_rebuilt = scale_columns(f_adj, roots) * f.entries;
  const double shift_residual = max_abs_diff(to_complex(p), p_rebuilt);

  // A = sum_j a_{j+1} P^j, with the powers built by repeated multiplication
  const RealMatrix a = dense(c);
  RealMatrix power = RealMatrix::identity(n);
  RealMatrix sum(n, n);
  for (int j = 0; j < n; ++j) {
    const double coeff = c.first_row()[static_cast<std::size_t>(j)];
    for (int r = 0; r < n; ++r)
      for (int col = 0; col < n; ++col) sum(r, col) += coeff * power(r, col);
    if (j + 1 < n) power = power * p;
  }
  const double power_sum_residual = max_abs_diff(a, sum);

  // A = F* Lambda F
  const Spectrum lam = eigenvalues(c);
  const ComplexMatrix a_rebuilt = scale_columns(f_adj, lam.eigenvalues) * f.entries;
  const double diagonalization_residual = max_abs_diff(to_complex(a), a_rebuilt);

  return FactorizationReport{shift_residual, power_sum_residual, diagonalization_residual};
}

}  // namespace circnorm
