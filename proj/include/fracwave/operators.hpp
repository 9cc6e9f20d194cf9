#pragma once

#include "fracwave/profile.hpp"

#include <vector>

namespace fracwave {

enum class OperatorKind { Lplus, Lminus, KdVLinearization, NLSLinearization };
enum class Problem { KdV, NLS };
enum class Verdict { SpectrallyStable, Unstable, Inconclusive };

/// Dense operator in the Fourier coefficient basis: symbol diagonal plus the
/// circulant convolution of the potential. L+/L- entries are Hermitian; the
/// KdV linearization is (derivative matrix) * (L+ matrix) by construction.
struct OperatorMatrix {
  Grid grid;
  OperatorKind kind = OperatorKind::Lplus;
  CMat entries;
  double omega = 0.0;
  double alpha = 0.0;
  Vec potential;  // physical-space potential (-2*phi or -phi)

  /// Spectral-norm estimate max|symbol| + |omega| + max|potential|.
  double norm_estimate() const;
  /// Similar real-symmetric matrix acting on physical samples.
  Mat physical() const;
};

OperatorMatrix assemble_Lplus(const WaveProfile& profile);
OperatorMatrix assemble_Lminus(const WaveProfile& profile);
OperatorMatrix assemble_kdv_linearization(const WaveProfile& profile);

/// Action of the operator on a field through transforms only (no matrix);
/// the assembled entries must agree with this to roundoff.
Vec apply_operator_fft(const OperatorMatrix& op, const Vec& values);

struct SymSpectrum {
  Vec eigenvalues;                      // ascending
  std::vector<RealField> eigenvectors;  // L2-orthonormal
};

/// Full spectrum of a Hermitian operator (L+ or L-). Solved on the similar
/// real-symmetric physical form so eigenvectors come out real.
SymSpectrum sym_spectrum(const OperatorMatrix& op);

/// kernel_tol is relative to the operator norm estimate.
inline constexpr double kKernelTolRel = 1e-7;

struct NegativeCount {
  int n_neg = 0;
  int kernel_dim = 0;
  double kernel_tol = 0.0;
};
NegativeCount count_negative(const Vec& eigenvalues, double norm_estimate);

/// max over the kernel basis of |<phi, v>| / (||phi|| ||v||); vacuously zero
/// for an empty kernel.
double weak_nondegeneracy(const WaveProfile& profile,
                          const std::vector<RealField>& kernel_vectors);

/// Vakhitov-Kolokolov index <L+^{-1} phi, phi>, solved with the numerical
/// kernel deflated. Requires phi orthogonal to the kernel.
double vk_index(const WaveProfile& profile, const SymSpectrum& spec, double kernel_tol);

/// Smallest eigenvalue of P L P with P the projector onto the orthogonal
/// complement of the given span (typically {phi, phi'}).
double coercivity_gap(const OperatorMatrix& op, const std::vector<RealField>& span_fields);

struct SturmReport {
  std::vector<int> sign_changes;  // per eigenfunction, periodic count
  std::vector<int> violations;    // indices n with more than 2n changes
  bool pass = true;
};
/// Discrete sign-change counts for the lowest eigenfunctions of a fractional
/// Schroedinger operator; the n-th may cross zero at most 2n times.
SturmReport sturm_sign_check(const SymSpectrum& spec, int max_index);

struct DynamicalSpectrum {
  CVec eigenvalues;
  double max_real_part = 0.0;      // outside the zero cluster
  double max_real_part_all = 0.0;  // including it
  double zero_cluster_tol = 0.0;
};

/// Eigenvalues of d/dx L+ (KdV). The generalized kernel above the
/// translational mode is defective, and backward error splits it by
/// ~sqrt(||A|| eps); eigenvalues inside that cluster are excluded from the
/// instability measure and reported separately.
DynamicalSpectrum kdv_dynamical_spectrum(const WaveProfile& profile);

/// Eigenvalues of J diag(L+, L-) (NLS), computed from the real 2N x 2N
/// physical block form.
DynamicalSpectrum nls_dynamical_spectrum(const WaveProfile& profile);

struct SpectrumReport {
  Vec eigenvalues_Lplus;
  Vec eigenvalues_Lminus;
  int n_neg_plus = 0;
  int n_neg_minus = 0;
  int kernel_dim_plus = 0;
  int kernel_dim_minus = 0;
  std::vector<RealField> kernel_vectors;
  double phi_kernel_angle = 0.0;
  double vk_index = 0.0;
  bool vk_defined = false;
  double coercivity_kappa = 0.0;
  double lplus_phiprime_residual = 0.0;  // ||L+ phi'|| (translation invariance)
  double lminus_phi_residual = 0.0;      // ||L- phi|| (exact zero mode at a=0)
  DynamicalSpectrum dynamical_kdv;
  DynamicalSpectrum dynamical_nls;
  Verdict verdict_kdv = Verdict::Inconclusive;
  Verdict verdict_nls = Verdict::Inconclusive;
  std::string notes;
};

struct AnalysisOptions {
  bool dynamical = true;  // the dense nonsymmetric solves dominate the cost
  double dyn_real_tol = 1e-7;
};

SpectrumReport analyze_profile(const WaveProfile& profile, const AnalysisOptions& opts = {});

/// Corollary-style verdict from the index data, cross-checked against the
/// dynamical spectra when available. Disagreement yields Inconclusive.
Verdict stability_verdict(const SpectrumReport& report, Problem problem,
                          double dyn_real_tol = 1e-7);

}  // namespace fracwave
