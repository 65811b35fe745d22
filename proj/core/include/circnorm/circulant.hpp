#pragma once

#include <span>
#include <vector>

#include "circnorm/matrix.hpp"

namespace circnorm {

/// Real circulant matrix, stored as its first row. Row r is the cyclic
/// right shift of row r-1, so entry (r, c) is first_row[(c - r) mod n].
class Circulant {
 public:
  explicit Circulant(std::vector<double> first_row);

  int size() const { return static_cast<int>(first_row_.size()); }
  const std::vector<double>& first_row() const { return first_row_; }
  double entry(int row, int col) const;

 private:
  std::vector<double> first_row_;
};

/// The two-parameter family: diag on the diagonal, off_diag (>= 0)
/// everywhere else. Degenerates to the 1x1 matrix [diag] at n = 1.
struct TwoParamCirculant {
  int n;
  double diag;
  double off_diag;

  Circulant to_circulant() const;
};

TwoParamCirculant make_two_param(int n, double diag, double off_diag);

struct Spectrum {
  explicit Spectrum(std::vector<Complex> values);

  std::vector<Complex> eigenvalues;
  double max_abs;  // always recomputed from the list
};

/// Direct summation lambda_k = sum_j a_{j+1} omega^{jk}, O(n^2).
Spectrum eigenvalues_direct(const Circulant& c);
/// Same values through the fast transform.
Spectrum eigenvalues_fft(const Circulant& c);
/// Dispatches: direct summation up to n = 64, fast transform beyond.
Spectrum eigenvalues(const Circulant& c);

/// Closed form for the two-parameter family: lambda_0 = diag + (n-1) off_diag
/// and lambda_k = diag - off_diag for every k >= 1.
Spectrum two_param_spectrum(const TwoParamCirculant& c);

std::vector<double> matvec_direct(const Circulant& c, std::span<const double> x);
std::vector<double> matvec_fft(const Circulant& c, std::span<const double> x);
/// Direct product up to n = 64, diagonalized fast path beyond.
std::vector<double> matvec(const Circulant& c, std::span<const double> x);

/// The transpose is circulant again, with the tail of the first row reversed.
Circulant transpose(const Circulant& c);

bool is_symmetric(const Circulant& c);

/// Materializes the full matrix. Guarded at n <= 4096.
RealMatrix dense(const Circulant& c);

}  // namespace circnorm
