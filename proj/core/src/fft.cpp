#include "circnorm/fft.hpp"

#include <bit>
#include <cstddef>
#include <numbers>
#include <utility>

namespace circnorm::fft {

namespace {

constexpr double kPi = std::numbers::pi;

void bit_reverse(CVec& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j |= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

// In-place radix-2 transform, a.size() a power of two, unnormalized.
void radix2(CVec& a, int sign) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  bit_reverse(a);
  // One table of n/2 roots; each stage strides through it. Computing every
  // root with polar keeps the phase error at a few ulp regardless of n.
  CVec roots(n / 2);
  const double base = sign * 2.0 * kPi / static_cast<double>(n);
  for (std::size_t k = 0; k < n / 2; ++k)
    roots[k] = std::polar(1.0, base * static_cast<double>(k));
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex w = roots[k * stride];
        Complex& lo = a[start + k];
        Complex& hi = a[start + k + len / 2];
        const Complex t = w * hi;
        hi = lo - t;
        lo += t;
      }
    }
  }
}

// Chirp transform for arbitrary n. Writing jk = (j^2 + k^2 - (k-j)^2)/2
// turns the transform into a linear convolution with the chirp
// u_m = exp(sign*pi*i*m^2/n), evaluated by zero-padded radix-2 passes.
CVec bluestein(const CVec& x, int sign) {
  const std::size_t n = x.size();
  const std::size_t padded = std::bit_ceil(2 * n - 1);
  const long long two_n = 2LL * static_cast<long long>(n);
  CVec u(n);
  for (std::size_t m = 0; m < n; ++m) {
    // m^2 mod 2n keeps the phase argument small and the chirp exact
    const long long sq = (static_cast<long long>(m) * static_cast<long long>(m)) % two_n;
    u[m] = std::polar(1.0, sign * kPi * static_cast<double>(sq) / static_cast<double>(n));
  }
  CVec a(padded), b(padded);
  for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * u[j];
  b[0] = std::conj(u[0]);
  for (std::size_t m = 1; m < n; ++m) {
    b[m] = std::conj(u[m]);
    b[padded - m] = std::conj(u[m]);
  }
  radix2(a, -1);
  radix2(b, -1);
  for (std::size_t i = 0; i < padded; ++i) a[i] *= b[i];
  radix2(a, +1);
  CVec out(n);
  const double scale = 1.0 / static_cast<double>(padded);
  for (std::size_t k = 0; k < n; ++k) out[k] = u[k] * a[k] * scale;
  return out;
}

}  // namespace

CVec transform(CVec data, int sign) {
  if (data.size() <= 1) return data;
  if (std::has_single_bit(data.size())) {
    radix2(data, sign);
    return data;
  }
  return bluestein(data, sign);
}

CVec forward(CVec data) { return transform(std::move(data), -1); }

CVec inverse(CVec data) {
  const double n = static_cast<double>(data.size());
  CVec out = transform(std::move(data), +1);
  for (Complex& v : out) v /= n;
  return out;
}

}  // namespace circnorm::fft
