#pragma once

#include <complex>
#include <vector>

namespace circnorm::fft {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

/// Unnormalized discrete Fourier transform of any length,
/// X_k = sum_j x_j exp(sign * 2*pi*i*j*k / n).
/// Power-of-two lengths run radix-2 in place; everything else goes through
/// a Bluestein chirp convolution, so the cost is O(n log n) for all n.
CVec transform(CVec data, int sign);

/// X_k = sum_j x_j exp(-2*pi*i*j*k / n)
CVec forward(CVec data);

/// x_j = (1/n) sum_k X_k exp(+2*pi*i*j*k / n)
CVec inverse(CVec data);

}  // namespace circnorm::fft
