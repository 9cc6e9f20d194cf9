#pragma once

#include "fracwave/field.hpp"

namespace fracwave {

/// Multiplier (pi*|k|/T)^alpha of the fractional operator on slot m.
/// The Nyquist mode is retained (the symbol is even in k).
Vec symbol_values(const Grid& grid, double alpha);

/// Apply the fractional operator: coefficient-wise multiplication by
/// (pi*|k|/T)^alpha; k = 0 maps to zero. Real input gives real output.
RealField apply_symbol(const RealField& f, double alpha);
ComplexField apply_symbol(const ComplexField& f, double alpha);

/// Spectral first derivative, multiplier i*pi*k/T per mode. The Nyquist
/// mode is zeroed: its odd multiplier has no symmetric partner, and zeroing
/// it keeps d/dx real-to-real.
RealField derivative(const RealField& f);
ComplexField derivative(const ComplexField& f);

double inner_l2(const RealField& f, const RealField& g);
Complex inner_l2(const ComplexField& f, const ComplexField& g);
double norm_l2(const RealField& f);
double norm_l2(const ComplexField& f);

/// Sobolev norm with weights (1+k^2)^s on the normalized coefficients.
double norm_sobolev(const RealField& f, double s);
double norm_sobolev(const ComplexField& f, double s);
/// Homogeneous seminorm ||Lambda^beta f||_{L2}.
double seminorm_fractional(const RealField& f, double beta);

/// 2/3-rule dealiasing: zero every mode with |k| > N/3. Idempotent.
RealField dealias(const RealField& f);
ComplexField dealias(const ComplexField& f);

/// Symmetric-decreasing rearrangement on the periodic cell: sort samples
/// descending, put the largest at x = 0, then alternate right/left outward;
/// the smallest lands at x = -T. Value multiset is preserved exactly, and
/// the arrangement is a fixed point on already bell-shaped data.
RealField decreasing_rearrangement(const RealField& f);
Vec rearrange_values(const Vec& v);

/// Translate by a grid-aligned number of spacings (index rotation, exact).
RealField shift_grid(const RealField& f, int steps);
/// Spectral translation f(. - y) for arbitrary y.
RealField shift_spectral(const RealField& f, double y);

/// Bell-shape test: even about x = 0 and non-increasing in |x|, with
/// absolute slack `tol`.
bool is_bell_shaped(const RealField& f, double tol);

}  // namespace fracwave
