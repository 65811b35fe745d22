#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace circnorm {

using Complex = std::complex<double>;

/// Dense row-major matrix. Just enough for the DFT factorization checks;
/// not a general linear-algebra type.
template <typename T>
class Matrix {
 public:
  Matrix(int rows, int cols, T fill = T{})
      : rows_(checked_dim(rows)),
        cols_(checked_dim(cols)),
        data_(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_), fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool operator==(const Matrix&) const = default;

 private:
  static int checked_dim(int d) {
    if (d < 1) throw std::invalid_argument("Matrix: dimensions must be positive");
    return d;
  }

  int rows_;
  int cols_;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("Matrix multiply: dimension mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;  // permutation and diagonal factors are mostly zeros
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw std::invalid_argument("Matrix apply: dimension mismatch");
  std::vector<T> y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    T acc{};
    for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

inline ComplexMatrix to_complex(const RealMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = Complex(a(i, j), 0.0);
  return out;
}

template <typename T>
double max_abs(const Matrix<T>& a) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

template <typename T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

template <typename T>
std::vector<T> diagonal(const Matrix<T>& a) {
  const int n = std::min(a.rows(), a.cols());
  std::vector<T> d(n);
  for (int i = 0; i < n; ++i) d[i] = a(i, i);
  return d;
}

}  // namespace circnorm
