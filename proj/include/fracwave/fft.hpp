#pragma once

#include "fracwave/types.hpp"

namespace fracwave {

/// Unnormalized forward DFT: X_m = sum_j x_j exp(-2*pi*i*j*m/N).
CVec dft(const CVec& x);
CVec dft(const Vec& x);

/// Inverse of dft(): x_j = (1/N) sum_m X_m exp(+2*pi*i*j*m/N).
CVec idft(const CVec& X);
/// Inverse transform of conjugate-symmetric data; imaginary residue is dropped.
Vec idft_real(const CVec& X);

}  // namespace fracwave
