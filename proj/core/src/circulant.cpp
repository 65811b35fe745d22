#include "circnorm/circulant.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "circnorm/fft.hpp"

namespace circnorm {

namespace {

// Direct summation and the O(n^2) product stay the default up to this size.
constexpr int kDirectPathLimit = 64;
constexpr int kDenseGuard = 4096;

}  // namespace

Circulant::Circulant(std::vector<double> first_row) : first_row_(std::move(first_row)) {
  if (first_row_.empty()) throw std::invalid_argument("Circulant: first row must be non-empty");
  for (double v : first_row_)
    if (!std::isfinite(v)) throw std::invalid_argument("Circulant: coefficients must be finite");
}

double Circulant::entry(int row, int col) const {
  const int n = size();
  int d = (col - row) % n;
  if (d < 0) d += n;
  return first_row_[static_cast<std::size_t>(d)];
}

Circulant TwoParamCirculant::to_circulant() const {
  std::vector<double> row(static_cast<std::size_t>(n), off_diag);
  row[0] = diag;
  return Circulant(std::move(row));
}

TwoParamCirculant make_two_param(int n, double diag, double off_diag) {
  if (n < 1) throw std::invalid_argument("make_two_param: dimension must be positive");
  if (!std::isfinite(diag) || !std::isfinite(off_diag))
    throw std::invalid_argument("make_two_param: parameters must be finite");
  if (off_diag < 0)
    throw std::invalid_argument("make_two_param: off-diagonal value must be non-negative");
  return TwoParamCirculant{n, diag, off_diag};
}

Spectrum::Spectrum(std::vector<Complex> values) : eigenvalues(std::move(values)), max_abs(0.0) {
  for (const Complex& v : eigenvalues) max_abs = std::max(max_abs, std::abs(v));
}

Spectrum eigenvalues_direct(const Circulant& c) {
  const int n = c.size();
  const std::vector<double>& row = c.first_row();
  std::vector<Complex> roots(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m)
    roots[static_cast<std::size_t>(m)] =
        std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
  std::vector<Complex> lambda(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Complex acc{};
    for (int j = 0; j < n; ++j) {
      const long long idx = (static_cast<long long>(j) * k) % n;
      acc += row[static_cast<std::size_t>(j)] * roots[static_cast<std::size_t>(idx)];
    }
    lambda[static_cast<std::size_t>(k)] = acc;
  }
  return Spectrum(std::move(lambda));
}

Spectrum eigenvalues_fft(const Circulant& c) {
  fft::CVec data(c.first_row().begin(), c.first_row().end());
  return Spectrum(fft::transform(std::move(data), +1));
}

Spectrum eigenvalues(const Circulant& c) {
  return c.size() <= kDirectPathLimit ? eigenvalues_direct(c) : eigenvalues_fft(c);
}

Spectrum two_param_spectrum(const TwoParamCirculant& c) {
  std::vector<Complex> lambda(static_cast<std::size_t>(c.n));
  lambda[0] = Complex(c.diag + (c.n - 1) * c.off_diag, 0.0);
  for (int k = 1; k < c.n; ++k)
    lambda[static_cast<std::size_t>(k)] = Complex(c.diag - c.off_diag, 0.0);
  return Spectrum(std::move(lambda));
}

std::vector<double> matvec_direct(const Circulant& c, std::span<const double> x) {
  const int n = c.size();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("matvec: vector length does not match matrix size");
  const std::vector<double>& row = c.first_row();
  std::vector<double> y(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    double acc = 0.0;
    // entry (r, j) = row[(j - r) mod n]; split at j = r to avoid the modulo
    for (int j = r; j < n; ++j) acc += row[static_cast<std::size_t>(j - r)] * x[static_cast<std::size_t>(j)];
    for (int j = 0; j < r; ++j) acc += row[static_cast<std::size_t>(j - r + n)] * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(r)] = acc;
  }
  return y;
}

std::vector<double> matvec_fft(const Circulant& c, std::span<const double> x) {
  const int n = c.size();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("matvec: vector length does not match matrix size");
  fft::CVec lambda(c.first_row().begin(), c.first_row().end());
  lambda = fft::transform(std::move(lambda), +1);
  fft::CVec spectrum_side(x.begin(), x.end());
  spectrum_side = fft::transform(std::move(spectrum_side), -1);
  for (int k = 0; k < n; ++k)
    spectrum_side[static_cast<std::size_t>(k)] *= lambda[static_cast<std::size_t>(k)];
  spectrum_side = fft::transform(std::move(spectrum_side), +1);
  std::vector<double> y(static_cast<std::size_t>(n));
  const double scale = 1.0 / static_cast<double>(n);
  for (int j = 0; j < n; ++j) y[static_cast<std::size_t>(j)] = spectrum_side[static_cast<std::size_t>(j)].real() * scale;
  return y;
}

std::vector<double> matvec(const Circulant& c, std::span<const double> x) {
  return c.size() <= kDirectPathLimit ? matvec_direct(c, x) : matvec_fft(c, x);
}

Circulant transpose(const Circulant& c) {
  const std::vector<double>& row = c.first_row();
  const std::size_t n = row.size();
  std::vector<double> out(n);
  out[0] = row[0];
  for (std::size_t j = 1; j < n; ++j) out[j] = row[n - j];
  return Circulant(std::move(out));
}

bool is_symmetric(const Circulant& c) {
  const std::vector<double>& row = c.first_row();
  const std::size_t n = row.size();
  for (std::size_t j = 1; 2 * j < n + 1; ++j)
    if (row[j] != row[n - j]) return false;
  return true;
}

RealMatrix dense(const Circulant& c) {
  const int n = c.size();
  if (n > kDenseGuard)
    throw std::length_error("dense: materialization limited to n <= 4096");
  RealMatrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < n; ++j) a(r, j) = c.entry(r, j);
  return a;
}

}  // namespace circnorm
