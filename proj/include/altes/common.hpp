#pragma once

#include <complex>
#include <cstddef>
#include <numbers>

namespace altes {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// -40 dB magnitude cutoff used for bandwidth and delay-spread definitions.
inline constexpr double kDefaultKcLevel = 0.01;

constexpr bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Smallest power of two >= n (n >= 1).
constexpr std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace altes
