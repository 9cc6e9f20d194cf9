#include "fracwave/spectral.hpp"

#include <algorithm>

namespace fracwave {

Vec symbol_values(const Grid& grid, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("symbol_values: alpha must be positive");
  Vec s(grid.n);
  for (int m = 0; m < grid.n; ++m) {
    const int k = grid.wavenumbers[m];
    s[m] = k == 0 ? 0.0 : std::pow(kPi * std::abs(k) / grid.half_period, alpha);
  }
  return s;
}

namespace {

CVec scaled_coeffs(const Grid& grid, const CVec& coeffs, const Vec& mult) {
  CVec out(grid.n);
  for (int m = 0; m < grid.n; ++m) out[m] = coeffs[m] * mult[m];
  return out;
}

Vec derivative_multiplier_imag(const Grid& grid) {
  // i*pi*k/T stored as the imaginary part; Nyquist zeroed.
  Vec s(grid.n);
  for (int m = 0; m < grid.n; ++m) {
    const int k = grid.wavenumbers[m];
    s[m] = (k == grid.n / 2) ? 0.0 : kPi * k / grid.half_period;
  }
  return s;
}

}  // namespace

RealField apply_symbol(const RealField& f, double alpha) {
  return field_from_coeffs(f.grid, scaled_coeffs(f.grid, f.coeffs, symbol_values(f.grid, alpha)));
}

ComplexField apply_symbol(const ComplexField& f, double alpha) {
  return complex_field_from_coeffs(f.grid,
                                   scaled_coeffs(f.grid, f.coeffs, symbol_values(f.grid, alpha)));
}

RealField derivative(const RealField& f) {
  const Vec s = derivative_multiplier_imag(f.grid);
  CVec c(f.grid.n);
  for (int m = 0; m < f.grid.n; ++m) c[m] = f.coeffs[m] * Complex(0.0, s[m]);
  return field_from_coeffs(f.grid, c);
}

ComplexField derivative(const ComplexField& f) {
  const Vec s = derivative_multiplier_imag(f.grid);
  CVec c(f.grid.n);
  for (int m = 0; m < f.grid.n; ++m) c[m] = f.coeffs[m] * Complex(0.0, s[m]);
  return complex_field_from_coeffs(f.grid, c);
}

double inner_l2(const RealField& f, const RealField& g) {
  if (!f.grid.same_as(g.grid)) throw std::invalid_argument("inner_l2: grid mismatch");
  return f.grid.weight() * f.values.dot(g.values);
}

Complex inner_l2(const ComplexField& f, const ComplexField& g) {
  if (!f.grid.same_as(g.grid)) throw std::invalid_argument("inner_l2: grid mismatch");
  Complex acc = 0.0;
  for (int j = 0; j < f.grid.n; ++j) acc += f.values[j] * std::conj(g.values[j]);
  return f.grid.weight() * acc;
}

double norm_l2(const RealField& f) { return std::sqrt(std::max(0.0, inner_l2(f, f))); }

double norm_l2(const ComplexField& f) {
  return std::sqrt(std::max(0.0, f.grid.weight() * f.values.squaredNorm()));
}

namespace {
template <class Field>
double sobolev_sq(const Field& f, double s) {
  double acc = 0.0;
  for (int m = 0; m < f.grid.n; ++m) {
    const double k2 = double(f.grid.wavenumbers[m]) * f.grid.wavenumbers[m];
    acc += std::pow(1.0 + k2, s) * std::norm(f.coeffs[m]);
  }
  return acc;
}
}  // namespace

double norm_sobolev(const RealField& f, double s) { return std::sqrt(sobolev_sq(f, s)); }
double norm_sobolev(const ComplexField& f, double s) { return std::sqrt(sobolev_sq(f, s)); }

double seminorm_fractional(const RealField& f, double beta) {
  const Vec s = symbol_values(f.grid, beta);
  double acc = 0.0;
  for (int m = 0; m < f.grid.n; ++m) acc += s[m] * s[m] * std::norm(f.coeffs[m]);
  return std::sqrt(acc);
}

namespace {
template <class Field, class Maker>
Field dealias_impl(const Field& f, Maker maker) {
  CVec c = f.coeffs;
  for (int m = 0; m < f.grid.n; ++m)
    if (3 * std::abs(f.grid.wavenumbers[m]) > f.grid.n) c[m] = 0.0;
  return maker(f.grid, c);
}
}  // namespace

RealField dealias(const RealField& f) {
  return dealias_impl(f, [](const Grid& g, const CVec& c) { return field_from_coeffs(g, c); });
}

ComplexField dealias(const ComplexField& f) {
  return dealias_impl(f,
                      [](const Grid& g, const CVec& c) { return complex_field_from_coeffs(g, c); });
}

Vec rearrange_values(const Vec& v) {
  const int n = int(v.size());
  Vec sorted = v;
  std::sort(sorted.data(), sorted.data() + n, std::greater<double>());
  Vec out(n);
  const int c = n / 2;
  out[c] = sorted[0];
  for (int m = 1; m < n / 2; ++m) {
    out[c + m] = sorted[2 * m - 1];
    out[c - m] = sorted[2 * m];
  }
  out[0] = sorted[n - 1];
  return out;
}

RealField decreasing_rearrangement(const RealField& f) {
  return make_field(f.grid, rearrange_values(f.values));
}

RealField shift_grid(const RealField& f, int steps) {
  const int n = f.grid.n;
  Vec out(n);
  for (int j = 0; j < n; ++j) out[j] = f.values[((j - steps) % n + n) % n];
  return make_field(f.grid, out);
}

RealField shift_spectral(const RealField& f, double y) {
  CVec c(f.grid.n);
  for (int m = 0; m < f.grid.n; ++m) {
    const double phase = -kPi * f.grid.wavenumbers[m] * y / f.grid.half_period;
    c[m] = f.coeffs[m] * std::polar(1.0, phase);
  }
  return field_from_coeffs(f.grid, c);
}

bool is_bell_shaped(const RealField& f, double tol) {
  const int n = f.grid.n;
  const int c = n / 2;
  for (int m = 1; m < n / 2; ++m) {
    if (std::abs(f.values[(c + m) % n] - f.values[(c - m + n) % n]) > tol) return false;
  }
  double prev = f.values[c];
  for (int m = 1; m <= n / 2; ++m) {
    const double right = f.values[(c + m) % n];
    const double left = f.values[(c - m + n) % n];
    const double lvl = 0.5 * (right + left);
    if (lvl > prev + tol) return false;
    prev = std::min(prev, lvl);
  }
  return true;
}

}  // namespace fracwave
