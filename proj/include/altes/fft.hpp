#pragma once

#include <vector>

#include "altes/common.hpp"

namespace altes {

// Iterative radix-2 transforms for power-of-two lengths. Twiddles are taken
// from a directly evaluated table (one sin/cos per factor, no recurrences),
// keeping roundoff near machine precision for the sizes used here (<= 2^16).

/// In-place forward DFT, no normalization. Length must be a power of two.
void fft_inplace(std::vector<cplx>& x);

/// In-place inverse DFT with 1/N normalization. Length must be a power of two.
void ifft_inplace(std::vector<cplx>& x);

std::vector<cplx> fft(std::vector<cplx> x);
std::vector<cplx> ifft(std::vector<cplx> x);

}  // namespace altes
