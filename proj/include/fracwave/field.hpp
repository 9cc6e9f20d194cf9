#pragma once

#include "fracwave/grid.hpp"

namespace fracwave {

/// Sampled real periodic function together with its Fourier coefficients.
///
/// Coefficients follow the normalization
///   fhat(k) = (1/sqrt(2T)) * integral_{-T}^{T} f(x) exp(-i*pi*k*x/T) dx,
/// discretized with the rectangle rule, so Parseval is literal:
///   sum_k |fhat(k)|^2 = ||f||_{L2}^2.
/// Coefficients are stored in slot order (slot m <-> wavenumber k(m)) and are
/// computed eagerly, which keeps fields immutable and freely shareable.
struct RealField {
  Grid grid;
  Vec values;
  CVec coeffs;
};

struct ComplexField {
  Grid grid;
  CVec values;
  CVec coeffs;
};

RealField make_field(const Grid& grid, Vec values);
ComplexField make_field(const Grid& grid, CVec values);
RealField field_from_coeffs(const Grid& grid, const CVec& coeffs);
ComplexField complex_field_from_coeffs(const Grid& grid, const CVec& coeffs);

/// Paper-normalized coefficients of raw samples (forward transform).
CVec transform(const Grid& grid, const Vec& values);
CVec transform(const Grid& grid, const CVec& values);
Vec inverse_transform(const CVec& coeffs, const Grid& grid);
CVec inverse_transform_complex(const CVec& coeffs, const Grid& grid);

/// Conversions between normalized coefficients and raw DFT slots; the raw
/// layout is what the evolution hot loops operate on.
CVec coeffs_to_raw_dft(const CVec& coeffs, const Grid& grid);
CVec raw_dft_to_coeffs(const CVec& raw, const Grid& grid);

}  // namespace fracwave
