#pragma once
// Thin wrapper over FFTW double-precision complex transforms with a plan
// cache.  Transforms are unnormalized; sign -1 applies exp(-2*pi*i*n*j/N).

#include "clifft/algebra.hpp"

namespace clifft {

/// In-place 1-D complex FFT of contiguous data, length n, sign in {-1, +1}.
void fft_inplace(cplx* data, int n, int sign);

}  // namespace clifft
