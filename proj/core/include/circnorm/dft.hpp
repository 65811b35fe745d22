#pragma once

#include <vector>

#include "circnorm/circulant.hpp"
#include "circnorm/matrix.hpp"

namespace circnorm {

/// The unitary DFT matrix F with F[j][k] = omega^{-jk} / sqrt(n),
/// omega = exp(2*pi*i/n). Every circulant diagonalizes as F* Lambda F.
struct UnitaryFactor {
  int n;
  ComplexMatrix entries;

  ComplexMatrix adjoint() const { return circnorm::adjoint(entries); }
  std::vector<Complex> apply(const std::vector<Complex>& x) const { return entries * x; }
};

UnitaryFactor dft_matrix(int n);

/// Cyclic shift permutation: ones on the superdiagonal plus one at (n-1, 0).
/// Equals the circulant with first row [0, 1, 0, ..., 0]; at n = 1 it is [1].
RealMatrix shift_matrix(int n);

/// Max-entry residuals of the three factorization identities.
struct FactorizationReport {
  double shift_residual;            // || P - F* Omega F ||_max, Omega = diag(omega^k)
  double power_sum_residual;        // || A - sum_j a_{j+1} P^j ||_max
  double diagonalization_residual;  // || A - F* Lambda F ||_max
};

/// Materializes everything dense, so the same n <= 4096 guard applies.
FactorizationReport verify_factorization(const Circulant& c);

}  // namespace circnorm
