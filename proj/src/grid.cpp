#include "fracwave/grid.hpp"

namespace fracwave {

Grid make_grid(int n_points, double half_period) {
  if (n_points < 8 || n_points % 2 != 0)
    throw std::invalid_argument("make_grid: n_points must be even and >= 8");
  if (!(half_period > 0.0))
    throw std::invalid_argument("make_grid: half_period must be positive");
  Grid g;
  g.n = n_points;
  g.half_period = half_period;
  g.nodes.resize(n_points);
  g.wavenumbers.resize(n_points);
  const double h = 2.0 * half_period / n_points;
  for (int j = 0; j < n_points; ++j) {
    g.nodes[j] = -half_period + h * j;
    g.wavenumbers[j] = slot_wavenumber(j, n_points);
  }
  return g;
}

}  // namespace fracwave
