#include "dualwave/fft.hpp"

#include <cmath>
#include <numbers>

namespace dualwave {

using cd = std::complex<double>;

void fft_radix2(cd* data, std::size_t n, int sign) {
  if (n < 2) return;
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  // twiddle table w[k] = e^{sign * 2 pi i k / n}, k < n/2
  const double dir = sign >= 0 ? 1.0 : -1.0;
  const std::size_t half_n = n >> 1;
  std::vector<cd> w(half_n);
  const double base = dir * 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t k = 0; k < half_n; ++k)
    w[k] = std::polar(1.0, base * static_cast<double>(k));

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const cd u = data[i + j];
        const cd v = data[i + j + half] * w[j * stride];
        data[i + j] = u + v;
        data[i + j + half] = u - v;
      }
    }
  }
}

namespace serial {

std::vector<cd> dft(const cd* in, std::size_t n, int sign) {
  std::vector<cd> out(n, cd{0.0, 0.0});
  const double dir = sign >= 0 ? 1.0 : -1.0;
  for (std::size_t a = 0; a < n; ++a) {
    cd acc{0.0, 0.0};
    for (std::size_t b = 0; b < n; ++b) {
      const double ang = dir * 2.0 * std::numbers::pi *
                         static_cast<double>(a) * static_cast<double>(b) /
                         static_cast<double>(n);
      acc += in[b] * std::polar(1.0, ang);
    }
    out[a] = acc;
  }
  return out;
}

}  // namespace serial

}  // namespace dualwave
