#pragma once

#include "fracwave/types.hpp"

namespace fracwave {

/// Uniform periodic collocation grid on [-T, T] with N points.
///
/// Nodes are x_j = -T + 2*T*j/N, j = 0..N-1, so node 0 sits at -T and x = 0
/// is node N/2. Coefficient slot m of the discrete transform carries the
/// integer wavenumber k(m) = m for m <= N/2 and m - N otherwise, i.e.
/// k ranges over {-N/2+1, ..., N/2} with the Nyquist mode at +N/2.
struct Grid {
  int n = 0;
  double half_period = 0.0;
  Vec nodes;
  IVec wavenumbers;

  double spacing() const { return 2.0 * half_period / n; }
  /// Quadrature weight of the rectangle rule, exact for band-limited data.
  double weight() const { return 2.0 * half_period / n; }

  bool same_as(const Grid& other) const {
    return n == other.n && half_period == other.half_period;
  }
};

/// Wavenumber carried by coefficient slot `m` on an N-point grid.
inline int slot_wavenumber(int m, int n) { return m <= n / 2 ? m : m - n; }

Grid make_grid(int n_points, double half_period);

}  // namespace fracwave
