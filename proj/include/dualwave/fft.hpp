#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace dualwave {

/// In-place radix-2 FFT, unnormalized: out[a] = sum_b in[b] e^{sign*2i*pi*a*b/n}.
/// n must be a power of two. Butterfly order is fixed, so results are
/// bit-reproducible.
void fft_radix2(std::complex<double>* data, std::size_t n, int sign);

namespace serial {

/// Reference O(n^2) DFT with the same convention as fft_radix2. Kept as the
/// independent check for the fast path and exercised by the benchmark.
std::vector<std::complex<double>> dft(const std::complex<double>* in,
                                      std::size_t n, int sign);

}  // namespace serial

}  // namespace dualwave
