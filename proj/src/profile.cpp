#include "fracwave/profile.hpp"

#include "fracwave/fft.hpp"
#include "fracwave/parallel.hpp"

#include <Eigen/QR>

#include <cmath>
#include <random>

namespace fracwave {

double energy(const RealField& phi, double a, double alpha) {
  const Vec sym = symbol_values(phi.grid, alpha);
  double disp = 0.0;
  for (int m = 0; m < phi.grid.n; ++m) disp += sym[m] * std::norm(phi.coeffs[m]);
  double cub = 0.0, mass = 0.0;
  for (int j = 0; j < phi.grid.n; ++j) {
    const double av = std::abs(phi.values[j]);
    cub += av * av * av;
    mass += av;
  }
  const double w = phi.grid.weight();
  return 0.5 * disp - cub * w / 3.0 + a * mass * w;
}

RealField sphere_project(const RealField& phi, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("sphere_project: lambda must be positive");
  const double nrm = norm_l2(phi);
  if (!(nrm > 0.0)) throw IllPosedError("sphere_project: zero input field");
  return make_field(phi.grid, Vec(std::sqrt(lambda) / nrm * phi.values));
}

double omega_from_energy(const RealField& phi, double a, double lambda, double alpha) {
  const Vec sym = symbol_values(phi.grid, alpha);
  double disp = 0.0;
  for (int m = 0; m < phi.grid.n; ++m) disp += sym[m] * std::norm(phi.coeffs[m]);
  const double w = phi.grid.weight();
  double cub = 0.0, mass = 0.0;
  for (int j = 0; j < phi.grid.n; ++j) {
    cub += phi.values[j] * phi.values[j] * phi.values[j];
    mass += phi.values[j];
  }
  return (cub * w - disp - a * mass * w) / lambda;
}

double omega_from_mass(const RealField& phi, double a, double lambda) {
  const double mean = phi.grid.weight() * phi.values.sum();
  const double scale = 2.0 * phi.grid.half_period * (1.0 + phi.values.cwiseAbs().maxCoeff());
  if (std::abs(mean) < 1e-13 * scale)
    throw IllPosedError("omega_from_mass: vanishing mean");
  return (lambda - 2.0 * phi.grid.half_period * a) / mean;
}

double residual(const RealField& phi, double omega, double a, double alpha) {
  const RealField lap = apply_symbol(phi, alpha);
  double acc = 0.0;
  for (int j = 0; j < phi.grid.n; ++j) {
    const double r = lap.values[j] + omega * phi.values[j] - phi.values[j] * phi.values[j] + a;
    acc += r * r;
  }
  return std::sqrt(acc * phi.grid.weight());
}

RealField constrained_gradient(const RealField& phi, double a, double alpha, double lambda) {
  const double omega = omega_from_energy(phi, a, lambda, alpha);
  const RealField lap = apply_symbol(phi, alpha);
  Vec g(phi.grid.n);
  for (int j = 0; j < phi.grid.n; ++j)
    g[j] = lap.values[j] - phi.values[j] * phi.values[j] + a + omega * phi.values[j];
  return make_field(phi.grid, g);
}

namespace {

// Sign-aware tangent gradient used inside the descent: handles the |phi|
// terms away from the positive cone. Coincides with constrained_gradient on
// nonnegative fields.
Vec descent_gradient(const RealField& phi, double a, double alpha, double lambda) {
  const RealField lap = apply_symbol(phi, alpha);
  const double w = phi.grid.weight();
  Vec g(phi.grid.n);
  for (int j = 0; j < phi.grid.n; ++j) {
    const double v = phi.values[j];
    const double sgn = v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0);
    g[j] = lap.values[j] - std::abs(v) * v + a * sgn;
  }
  const double ip = w * g.dot(phi.values);
  g -= (ip / lambda) * phi.values;
  return g;
}

struct DescentResult {
  RealField phi;
  double energy = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

DescentResult descend(RealField phi, double lambda, double a, double alpha,
                      const SolverOptions& opts) {
  const Grid& grid = phi.grid;
  const double w = grid.weight();
  const Vec sym = symbol_values(grid, alpha);
  const double step0 = opts.step_rule == StepRule::Fixed && opts.fixed_step > 0
                           ? opts.fixed_step
                           : 1.0 / (1.0 + std::pow(kPi / grid.half_period, alpha));
  double E = energy(phi, a, alpha);
  double gn = 0.0;
  int accepted = 0;
  DescentResult out;
  for (int it = 0; it < opts.max_iters; ++it) {
    Vec g = descent_gradient(phi, a, alpha, lambda);
    gn = std::sqrt(w * g.squaredNorm());
    if (!std::isfinite(gn)) throw NumericalError("minimize: NaN in gradient");
    if (gn <= opts.grad_tol * (1.0 + std::sqrt(lambda))) {
      out.converged = true;
      out.iterations = it;
      break;
    }
    Vec d = g;
    if (opts.precondition) {
      CVec gc = dft(g);
      for (int m = 0; m < grid.n; ++m) gc[m] /= 1.0 + sym[m];
      d = idft_real(gc);
      const double ip = w * d.dot(phi.values);
      d -= (ip / lambda) * phi.values;
    }
    const double slope = w * g.dot(d);
    if (slope <= 0) {  // preconditioner produced a non-descent direction; fall back
      d = g;
    }
    double step = step0;
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt) {
      RealField cand = sphere_project(make_field(grid, Vec(phi.values - step * d)), lambda);
      const double Ec = energy(cand, a, alpha);
      if (std::isfinite(Ec) && Ec <= E - 1e-4 * step * std::max(slope, 0.0)) {
        phi = std::move(cand);
        E = Ec;
        moved = true;
        break;
      }
      if (opts.step_rule == StepRule::Fixed) break;
      step *= 0.5;
    }
    if (!moved) {
      out.iterations = it;
      break;  // line search stalled at roundoff level
    }
    ++accepted;
    if (opts.rearrange_every > 0 && accepted % opts.rearrange_every == 0) {
      Vec clipped = phi.values.cwiseMax(0.0);
      if (clipped.maxCoeff() > 0) {
        RealField cand = sphere_project(make_field(grid, rearrange_values(clipped)), lambda);
        const double Ec = energy(cand, a, alpha);
        // Rearrangement may not decrease the discrete energy for ragged
        // iterates; keep it only when it does.
        if (Ec <= E + 1e-14) {
          phi = std::move(cand);
          E = Ec;
        }
      }
    }
    out.iterations = it + 1;
  }
  Vec g = descent_gradient(phi, a, alpha, lambda);
  out.grad_norm = std::sqrt(w * g.squaredNorm());
  out.converged = out.converged || out.grad_norm <= opts.grad_tol * (1.0 + std::sqrt(lambda));
  out.energy = energy(phi, a, alpha);
  out.phi = std::move(phi);
  return out;
}

RealField default_seed(const Grid& grid, double lambda, int index, std::uint64_t rng_seed) {
  Vec v(grid.n);
  if (index == 0) {
    for (int j = 0; j < grid.n; ++j)
      v[j] = 1.0 + std::cos(kPi * grid.nodes[j] / grid.half_period);
  } else if (index == 1) {
    v.setOnes();
  } else {
    std::mt19937_64 rng(rng_seed + 1000 * index);
    std::uniform_real_distribution<double> amp(-0.5, 0.5);
    v.setOnes();
    for (int k = 1; k <= 4; ++k) {
      const double ak = amp(rng), bk = amp(rng);
      for (int j = 0; j < grid.n; ++j) {
        const double th = kPi * k * grid.nodes[j] / grid.half_period;
        v[j] += ak * std::cos(th) + bk * std::sin(th);
      }
    }
    v = v.cwiseAbs().cwiseMax(0.05);
  }
  return sphere_project(make_field(grid, v), lambda);
}

// Circulant matrix of the symbol in physical space (first column via inverse
// DFT of the even real multiplier).
Mat symbol_matrix_physical(const Grid& grid, double alpha) {
  const Vec sym = symbol_values(grid, alpha);
  CVec symc = sym.cast<Complex>();
  const Vec col = idft_real(symc);
  Mat S(grid.n, grid.n);
  for (int i = 0; i < grid.n; ++i)
    for (int j = 0; j < grid.n; ++j) S(i, j) = col[((i - j) % grid.n + grid.n) % grid.n];
  return S;
}

}  // namespace

void refresh_diagnostics(WaveProfile& p) {
  p.residual_l2 = residual(p.phi, p.omega, p.a_param, p.alpha);
  p.energy = energy(p.phi, p.a_param, p.alpha);
  double om = 0.0;
  bool mass_ok = true;
  try {
    om = omega_from_mass(p.phi, p.a_param, p.lambda);
  } catch (const IllPosedError&) {
    mass_ok = false;
  }
  const double oe = omega_from_energy(p.phi, p.a_param, p.lambda, p.alpha);
  p.omega_consistency =
      mass_ok ? std::abs(oe - om) / std::max({std::abs(oe), std::abs(om), 1e-30}) : 1.0;
  p.bell_shaped = is_bell_shaped(p.phi, 1e-9 * (1.0 + p.phi.values.cwiseAbs().maxCoeff()));
  p.positive = p.phi.values.minCoeff() > 0.0;
}

WaveProfile minimize(double lambda, double a, double alpha, const Grid& grid,
                     const SolverOptions& opts) {
  if (!(lambda > 0.0)) throw std::invalid_argument("minimize: lambda must be positive");
  if (!(alpha > 0.5 && alpha <= 2.0))
    throw std::invalid_argument("minimize: alpha must be in (1/2, 2]");

  const int extra = opts.seed_profile ? 1 : 0;
  const int n_starts = std::max(1, opts.n_starts) + extra;
  std::vector<DescentResult> results(n_starts);
  parallel_for(opts.jobs, n_starts, [&](int s) {
    RealField seed = (extra && s == 0)
                         ? sphere_project(*opts.seed_profile, lambda)
                         : default_seed(grid, lambda, s - extra, opts.rng_seed);
    results[s] = descend(std::move(seed), lambda, a, alpha, opts);
  });

  int best = 0;
  double emin = results[0].energy, emax = results[0].energy;
  for (int s = 1; s < n_starts; ++s) {
    if (results[s].energy < emin) {
      emin = results[s].energy;
      best = s;
    }
    emax = std::max(emax, results[s].energy);
  }

  WaveProfile p;
  p.phi = std::move(results[best].phi);
  p.lambda = lambda;
  p.a_param = a;
  p.alpha = alpha;
  p.omega = omega_from_energy(p.phi, a, lambda, alpha);
  p.grad_norm = results[best].grad_norm;
  p.iterations = results[best].iterations;
  p.converged = results[best].converged;
  p.seed_disagreement = emax - emin;
  if (!p.converged) p.message = "descent did not reach grad_tol; last iterate returned";

  if (opts.newton_polish && p.converged) {
    try {
      WaveProfile polished = newton_polish(p, opts.newton_tol);
      polished.seed_disagreement = p.seed_disagreement;
      polished.iterations = p.iterations;
      polished.grad_norm = p.grad_norm;
      p = std::move(polished);
    } catch (const SingularJacobianError& e) {
      p.message = std::string("newton polish skipped: ") + e.what();
    } catch (const DivergenceError& e) {
      p.message = std::string("newton polish diverged: ") + e.what();
    }
  }
  refresh_diagnostics(p);
  return p;
}

WaveProfile newton_polish(const WaveProfile& profile, double tol) {
  const Grid& grid = profile.phi.grid;
  const int n = grid.n;
  const double w = grid.weight();
  const double lambda = profile.lambda;
  const double a = profile.a_param;
  const double alpha = profile.alpha;

  const double scale = 1.0 + std::sqrt(lambda);
  if (profile.residual_l2 > 1e-2 * scale)
    throw DivergenceError("newton_polish: residual too large for local convergence");

  const Mat S = symbol_matrix_physical(grid, alpha);
  Vec phi = profile.phi.values;
  double omega = profile.omega;

  auto eval_res = [&](const Vec& ph, double om, Vec& F, double& Fc) {
    F = S * ph;
    for (int j = 0; j < n; ++j) F[j] += om * ph[j] - ph[j] * ph[j] + a;
    Fc = w * ph.squaredNorm() - lambda;
  };

  Vec F(n);
  double Fc = 0.0;
  eval_res(phi, omega, F, Fc);
  double res = std::sqrt(w * F.squaredNorm()) + std::abs(Fc);
  const double res0 = res;
  int grow = 0;

  // Bordered Jacobian [L_plus, phi; 2w phi^T, 0]; the translational kernel of
  // non-constant waves makes it rank deficient by one, so steps are taken in
  // the minimum-norm least-squares sense.
  for (int it = 0; it < 40; ++it) {
    if (res <= tol * scale) break;
    Mat J(n + 1, n + 1);
    J.topLeftCorner(n, n) = S;
    for (int j = 0; j < n; ++j) J(j, j) += omega - 2.0 * phi[j];
    J.topRightCorner(n, 1) = phi;
    J.bottomLeftCorner(1, n) = (2.0 * w) * phi.transpose();
    J(n, n) = 0.0;

    Eigen::CompleteOrthogonalDecomposition<Mat> cod(J);
    cod.setThreshold(1e-11);
    const int deficiency = n + 1 - int(cod.rank());
    const bool constant_wave =
        (phi.maxCoeff() - phi.minCoeff()) <= 1e-10 * (1.0 + std::abs(phi.maxCoeff()));
    const int allowed = constant_wave ? 0 : 1;
    if (deficiency > allowed)
      throw SingularJacobianError("newton_polish: Jacobian rank deficiency " +
                                  std::to_string(deficiency) + " exceeds translational kernel");

    Vec rhs(n + 1);
    rhs.head(n) = -F;
    rhs[n] = -Fc;
    const Vec dz = cod.solve(rhs);
    if (!dz.allFinite()) throw NumericalError("newton_polish: non-finite Newton step");
    phi += dz.head(n);
    omega += dz[n];

    eval_res(phi, omega, F, Fc);
    const double res_new = std::sqrt(w * F.squaredNorm()) + std::abs(Fc);
    if (!std::isfinite(res_new) || res_new > 1e3 * res0)
      throw DivergenceError("newton_polish: residual blew up");
    grow = res_new > res ? grow + 1 : 0;
    if (grow >= 3) throw DivergenceError("newton_polish: residual not decreasing");
    res = res_new;
  }
  if (res > tol * scale)
    throw DivergenceError("newton_polish: did not reach tolerance, residual " +
                          std::to_string(res));

  WaveProfile out = profile;
  out.phi = make_field(grid, phi);
  out.omega = omega;
  out.converged = true;
  out.message.clear();
  refresh_diagnostics(out);
  return out;
}

WaveProfile rescale_wave(const WaveProfile& profile, double new_half_period) {
  if (!(new_half_period > 0.0)) throw std::invalid_argument("rescale_wave: T must be positive");
  const double s = new_half_period / profile.phi.grid.half_period;
  const double f = std::pow(s, -profile.alpha);
  const Grid grid = make_grid(profile.phi.grid.n, new_half_period);
  WaveProfile out;
  out.phi = make_field(grid, Vec(f * profile.phi.values));
  out.omega = f * profile.omega;
  out.a_param = f * f * profile.a_param;
  out.alpha = profile.alpha;
  out.lambda = inner_l2(out.phi, out.phi);
  out.converged = profile.converged;
  out.iterations = profile.iterations;
  out.seed_disagreement = profile.seed_disagreement;
  refresh_diagnostics(out);
  return out;
}

DecayReport smoothness_check(const RealField& phi) {
  DecayReport rep;
  const int n = phi.grid.n;
  double cmax = 0.0, tail = 0.0;
  const std::array<double, 3> powers{2.0, 4.0, 6.0};
  for (int m = 0; m < n; ++m) {
    const double mag = std::abs(phi.coeffs[m]);
    const int ak = std::abs(phi.grid.wavenumbers[m]);
    cmax = std::max(cmax, mag);
    if (3 * ak > n) tail = std::max(tail, mag);
    for (int p = 0; p < 3; ++p)
      rep.weighted_max[p] = std::max(rep.weighted_max[p], mag * std::pow(1.0 + ak, powers[p]));
  }
  rep.tail_ratio = cmax > 0 ? tail / cmax : 0.0;
  rep.pass = rep.tail_ratio <= 1e-10;
  return rep;
}

}  // namespace fracwave
