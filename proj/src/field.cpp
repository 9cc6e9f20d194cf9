#include "fracwave/field.hpp"

#include "fracwave/fft.hpp"

namespace fracwave {

namespace {

// Slot phase (-1)^k linking the DFT (indexed from x = -T) to coefficients of
// exp(i*pi*k*x/T).
double slot_sign(int k) { return (std::abs(k) % 2 == 0) ? 1.0 : -1.0; }

void check_length(const Grid& grid, Eigen::Index len, const char* what) {
  if (len != grid.n)
    throw std::invalid_argument(std::string(what) + ": length does not match grid");
}

}  // namespace

CVec raw_dft_to_coeffs(const CVec& raw, const Grid& grid) {
  check_length(grid, raw.size(), "raw_dft_to_coeffs");
  const double scale = std::sqrt(2.0 * grid.half_period) / grid.n;
  CVec c(grid.n);
  for (int m = 0; m < grid.n; ++m) c[m] = raw[m] * (scale * slot_sign(grid.wavenumbers[m]));
  return c;
}

CVec coeffs_to_raw_dft(const CVec& coeffs, const Grid& grid) {
  check_length(grid, coeffs.size(), "coeffs_to_raw_dft");
  const double scale = grid.n / std::sqrt(2.0 * grid.half_period);
  CVec raw(grid.n);
  for (int m = 0; m < grid.n; ++m) raw[m] = coeffs[m] * (scale * slot_sign(grid.wavenumbers[m]));
  return raw;
}

CVec transform(const Grid& grid, const Vec& values) {
  check_length(grid, values.size(), "transform");
  return raw_dft_to_coeffs(dft(values), grid);
}

CVec transform(const Grid& grid, const CVec& values) {
  check_length(grid, values.size(), "transform");
  return raw_dft_to_coeffs(dft(values), grid);
}

Vec inverse_transform(const CVec& coeffs, const Grid& grid) {
  return idft_real(coeffs_to_raw_dft(coeffs, grid));
}

CVec inverse_transform_complex(const CVec& coeffs, const Grid& grid) {
  return idft(coeffs_to_raw_dft(coeffs, grid));
}

RealField make_field(const Grid& grid, Vec values) {
  check_length(grid, values.size(), "make_field");
  RealField f;
  f.grid = grid;
  f.coeffs = transform(grid, values);
  f.values = std::move(values);
  return f;
}

ComplexField make_field(const Grid& grid, CVec values) {
  check_length(grid, values.size(), "make_field");
  ComplexField f;
  f.grid = grid;
  f.coeffs = transform(grid, values);
  f.values = std::move(values);
  return f;
}

RealField field_from_coeffs(const Grid& grid, const CVec& coeffs) {
  RealField f;
  f.grid = grid;
  f.values = inverse_transform(coeffs, grid);
  f.coeffs = coeffs;
  return f;
}

ComplexField complex_field_from_coeffs(const Grid& grid, const CVec& coeffs) {
  ComplexField f;
  f.grid = grid;
  f.values = inverse_transform_complex(coeffs, grid);
  f.coeffs = coeffs;
  return f;
}

}  // namespace fracwave
