#include "altes/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace altes {

namespace {

void bit_reverse_permute(std::vector<cplx>& x) {
  const std::size_t n = x.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
}

// sign = -1 forward, +1 inverse (un-normalized)
void transform(std::vector<cplx>& x, double sign) {
  const std::size_t n = x.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft: length must be a power of two");
  if (n == 1) return;

  bit_reverse_permute(x);

  // table[t] = exp(sign*j*2*pi*t/n), t < n/2
  std::vector<cplx> table(n / 2);
  for (std::size_t t = 0; t < n / 2; ++t) {
    const double ang = sign * 2.0 * kPi * static_cast<double>(t) / static_cast<double>(n);
    table[t] = cplx(std::cos(ang), std::sin(ang));
  }

  for (std::size_t half = 1; half < n; half <<= 1) {
    const std::size_t stride = n / (2 * half);  // table stride for this stage
    for (std::size_t start = 0; start < n; start += 2 * half) {
      for (std::size_t k = 0; k < half; ++k) {
        const cplx w = table[k * stride];
        const cplx u = x[start + k];
        const cplx v = x[start + k + half] * w;
        x[start + k] = u + v;
        x[start + k + half] = u - v;
      }
    }
  }
}

}  // namespace

void fft_inplace(std::vector<cplx>& x) { transform(x, -1.0); }

void ifft_inplace(std::vector<cplx>& x) {
  transform(x, +1.0);
  const double inv = 1.0 / static_cast<double>(x.size());
  for (auto& v : x) v *= inv;
}

std::vector<cplx> fft(std::vector<cplx> x) {
  fft_inplace(x);
  return x;
}

std::vector<cplx> ifft(std::vector<cplx> x) {
  ifft_inplace(x);
  return x;
}

}  // namespace altes
