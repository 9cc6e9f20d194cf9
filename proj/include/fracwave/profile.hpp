#pragma once

#include "fracwave/spectral.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace fracwave {

/// A converged solution of the profile equation
///   Lambda^alpha phi + omega*phi - phi^2 + a = 0  on [-T, T],
/// normalized by ||phi||_{L2}^2 = lambda.
struct WaveProfile {
  RealField phi;
  double omega = 0.0;        // Lagrange multiplier / wave speed
  double a_param = 0.0;      // integration constant
  double lambda = 0.0;       // L2 mass of the constraint sphere
  double alpha = 0.0;        // dispersion order
  double residual_l2 = 0.0;  // ||Lambda^a phi + w phi - phi^2 + a||_{L2}
  double omega_consistency = 0.0;  // relative gap between the two omega formulas
  double energy = 0.0;
  double grad_norm = 0.0;
  double seed_disagreement = 0.0;  // max energy gap across multi-starts
  bool converged = false;
  bool bell_shaped = false;
  bool positive = false;
  int iterations = 0;
  std::string message;
};

enum class StepRule { Backtracking, Fixed };

struct SolverOptions {
  int max_iters = 5000;
  double grad_tol = 1e-9;
  StepRule step_rule = StepRule::Backtracking;
  double fixed_step = 0.0;  // used by StepRule::Fixed
  int rearrange_every = 10;  // 0 disables
  bool newton_polish = true;
  double newton_tol = 1e-12;
  std::optional<RealField> seed_profile;
  int n_starts = 3;
  std::uint64_t rng_seed = 12345;
  bool precondition = true;
  int jobs = 1;
};

/// Discretized value of E_a[phi] = 1/2 ||Lambda^{a/2} phi||^2 - 1/3 int |phi|^3
/// + a int |phi|, with spectral quadrature.
double energy(const RealField& phi, double a, double alpha);

/// Radial projection onto the constraint sphere ||phi||^2 = lambda.
RealField sphere_project(const RealField& phi, double lambda);

/// L2 gradient of E_a projected tangent to the sphere:
///   G = Lambda^alpha phi - phi^2 + a + omega*phi,
/// with omega from the energy formula, which makes <G, phi> = 0 exactly.
RealField constrained_gradient(const RealField& phi, double a, double alpha, double lambda);

/// omega = (int phi^3 - ||Lambda^{a/2} phi||^2 - a int phi) / lambda.
double omega_from_energy(const RealField& phi, double a, double lambda, double alpha);

/// omega = (lambda - 2*T*a) / int phi, the zero-mode reduction of the profile
/// equation integrated over the full cell.
double omega_from_mass(const RealField& phi, double a, double lambda);

double residual(const RealField& phi, double omega, double a, double alpha);

/// Constrained minimization of E_a on the sphere: preconditioned projected
/// gradient descent with periodic symmetric-decreasing rearrangement,
/// multi-start, and optional Newton polish of the Euler-Lagrange system.
WaveProfile minimize(double lambda, double a, double alpha, const Grid& grid,
                     const SolverOptions& opts = {});

/// Newton iteration on the extended system {profile equation, ||phi||^2 = lambda}
/// in the unknowns (phi, omega). Throws SingularJacobianError for a degenerate
/// wave, DivergenceError away from the basin.
WaveProfile newton_polish(const WaveProfile& profile, double tol);

/// Map a wave on [-T0, T0] to [-T, T] via phi(x) = s^{-alpha} Phi(x/s),
/// s = T/T0, with omega -> s^{-alpha} omega and a -> s^{-2alpha} a.
WaveProfile rescale_wave(const WaveProfile& profile, double new_half_period);

struct DecayReport {
  std::array<double, 3> weighted_max{};  // max |fhat(k)| (1+|k|)^p, p in {2,4,6}
  double tail_ratio = 0.0;               // max tail coefficient / max coefficient
  bool pass = false;
};

/// Fourier-decay diagnostic: a converged wave must have a spectrally small
/// tail; a plateau above 1e-10 relative flags under-resolution.
DecayReport smoothness_check(const RealField& phi);

/// Fills residual, omega consistency, energy, and shape flags for a given
/// (phi, omega) pair; used by the solver and by deserialization.
void refresh_diagnostics(WaveProfile& p);

}  // namespace fracwave
