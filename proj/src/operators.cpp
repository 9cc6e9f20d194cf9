#include "fracwave/operators.hpp"

#include "fracwave/fft.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <cfloat>

namespace fracwave {

namespace {

// Circulant physical-space matrix of an even real Fourier multiplier.
Mat multiplier_matrix(const Grid& grid, const Vec& mult) {
  CVec mc = mult.cast<Complex>();
  const Vec col = idft_real(mc);
  Mat S(grid.n, grid.n);
  for (int i = 0; i < grid.n; ++i)
    for (int j = 0; j < grid.n; ++j) S(i, j) = col[((i - j) % grid.n + grid.n) % grid.n];
  return S;
}

// Fourier-basis matrix of pointwise multiplication by V: conjugate the
// diagonal physical operator with the coefficient map, column by column.
CMat potential_matrix_fourier(const Grid& grid, const Vec& V) {
  const int n = grid.n;
  CMat M(n, n);
  for (int m = 0; m < n; ++m) {
    CVec e = CVec::Zero(n);
    e[m] = 1.0;
    const CVec col_phys = inverse_transform_complex(e, grid);
    CVec prod(n);
    for (int j = 0; j < n; ++j) prod[j] = V[j] * col_phys[j];
    M.col(m) = transform(grid, prod);
  }
  return M;
}

CMat derivative_matrix_fourier(const Grid& grid) {
  CMat D = CMat::Zero(grid.n, grid.n);
  for (int m = 0; m < grid.n; ++m) {
    const int k = grid.wavenumbers[m];
    if (k != grid.n / 2) D(m, m) = Complex(0.0, kPi * k / grid.half_period);
  }
  return D;
}

OperatorMatrix assemble_schroedinger(const WaveProfile& profile, double factor,
                                     OperatorKind kind) {
  const Grid& grid = profile.phi.grid;
  OperatorMatrix op;
  op.grid = grid;
  op.kind = kind;
  op.omega = profile.omega;
  op.alpha = profile.alpha;
  op.potential = factor * profile.phi.values;
  op.entries = potential_matrix_fourier(grid, op.potential);
  const Vec sym = symbol_values(grid, profile.alpha);
  for (int m = 0; m < grid.n; ++m) op.entries(m, m) += sym[m] + profile.omega;
  return op;
}

double machine_splitting_tol(double norm_estimate, int n) {
  // Backward error of a dense eigensolve splits defective zero eigenvalues by
  // about sqrt(||A|| * n * eps); allow a generous factor on top.
  return 100.0 * std::sqrt(std::max(1.0, norm_estimate) * n * DBL_EPSILON);
}

DynamicalSpectrum classify_dynamical(CVec eigenvalues, double norm_estimate, int n) {
  DynamicalSpectrum d;
  d.zero_cluster_tol = machine_splitting_tol(norm_estimate, n);
  d.eigenvalues = std::move(eigenvalues);
  double mx = 0.0, mx_all = 0.0;
  for (Eigen::Index i = 0; i < d.eigenvalues.size(); ++i) {
    const Complex z = d.eigenvalues[i];
    mx_all = std::max(mx_all, z.real());
    if (std::abs(z) > d.zero_cluster_tol) mx = std::max(mx, z.real());
  }
  d.max_real_part = mx;
  d.max_real_part_all = mx_all;
  return d;
}

}  // namespace

double OperatorMatrix::norm_estimate() const {
  const Vec sym = symbol_values(grid, alpha);
  return sym.maxCoeff() + std::abs(omega) + potential.cwiseAbs().maxCoeff();
}

Mat OperatorMatrix::physical() const {
  if (kind != OperatorKind::Lplus && kind != OperatorKind::Lminus)
    throw std::invalid_argument("OperatorMatrix::physical: only for Hermitian kinds");
  Mat S = multiplier_matrix(grid, symbol_values(grid, alpha));
  for (int j = 0; j < grid.n; ++j) S(j, j) += omega + potential[j];
  return S;
}

OperatorMatrix assemble_Lplus(const WaveProfile& profile) {
  return assemble_schroedinger(profile, -2.0, OperatorKind::Lplus);
}

OperatorMatrix assemble_Lminus(const WaveProfile& profile) {
  return assemble_schroedinger(profile, -1.0, OperatorKind::Lminus);
}

OperatorMatrix assemble_kdv_linearization(const WaveProfile& profile) {
  OperatorMatrix lp = assemble_Lplus(profile);
  OperatorMatrix op;
  op.grid = lp.grid;
  op.kind = OperatorKind::KdVLinearization;
  op.omega = lp.omega;
  op.alpha = lp.alpha;
  op.potential = lp.potential;
  op.entries = derivative_matrix_fourier(lp.grid) * lp.entries;
  return op;
}

Vec apply_operator_fft(const OperatorMatrix& op, const Vec& values) {
  const RealField f = make_field(op.grid, values);
  RealField lap = apply_symbol(f, op.alpha);
  Vec out(op.grid.n);
  for (int j = 0; j < op.grid.n; ++j)
    out[j] = lap.values[j] + op.omega * values[j] + op.potential[j] * values[j];
  if (op.kind == OperatorKind::KdVLinearization) out = derivative(make_field(op.grid, out)).values;
  return out;
}

SymSpectrum sym_spectrum(const OperatorMatrix& op) {
  const Mat A = op.physical();  // throws on non-Hermitian kinds
  Eigen::SelfAdjointEigenSolver<Mat> es(A);
  if (es.info() != Eigen::Success) throw NumericalError("sym_spectrum: eigensolver failed");
  SymSpectrum out;
  out.eigenvalues = es.eigenvalues();
  const double scale = std::sqrt(op.grid.n / (2.0 * op.grid.half_period));
  out.eigenvectors.reserve(op.grid.n);
  for (int i = 0; i < op.grid.n; ++i)
    out.eigenvectors.push_back(make_field(op.grid, Vec(scale * es.eigenvectors().col(i))));
  return out;
}

NegativeCount count_negative(const Vec& eigenvalues, double norm_estimate) {
  NegativeCount c;
  c.kernel_tol = kKernelTolRel * std::max(1.0, norm_estimate);
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    if (eigenvalues[i] < -c.kernel_tol)
      ++c.n_neg;
    else if (eigenvalues[i] <= c.kernel_tol)
      ++c.kernel_dim;
  }
  return c;
}

double weak_nondegeneracy(const WaveProfile& profile,
                          const std::vector<RealField>& kernel_vectors) {
  const double nphi = norm_l2(profile.phi);
  double worst = 0.0;
  for (const auto& v : kernel_vectors) {
    const double nv = norm_l2(v);
    if (nv == 0.0 || nphi == 0.0) continue;
    worst = std::max(worst, std::abs(inner_l2(profile.phi, v)) / (nphi * nv));
  }
  return worst;
}

double vk_index(const WaveProfile& profile, const SymSpectrum& spec, double kernel_tol) {
  std::vector<RealField> kernel;
  for (int i = 0; i < int(spec.eigenvalues.size()); ++i)
    if (std::abs(spec.eigenvalues[i]) <= kernel_tol) kernel.push_back(spec.eigenvectors[i]);
  const double angle = weak_nondegeneracy(profile, kernel);
  if (angle > 1e-8)
    throw IllPosedError("vk_index: phi is not orthogonal to the numerical kernel (angle " +
                        std::to_string(angle) + ")");
  double acc = 0.0;
  for (int i = 0; i < int(spec.eigenvalues.size()); ++i) {
    if (std::abs(spec.eigenvalues[i]) <= kernel_tol) continue;
    const double c = inner_l2(profile.phi, spec.eigenvectors[i]);
    acc += c * c / spec.eigenvalues[i];
  }
  return acc;
}

double coercivity_gap(const OperatorMatrix& op, const std::vector<RealField>& span_fields) {
  const int n = op.grid.n;
  const Mat A = op.physical();
  // Orthonormal basis of the span in the (unweighted) sample space; the L2
  // weight is a constant multiple and does not change orthogonality.
  Mat S(n, int(span_fields.size()));
  int cols = 0;
  for (const auto& f : span_fields) {
    if (norm_l2(f) > 1e-14) S.col(cols++) = f.values;
  }
  if (cols == 0) {
    Eigen::SelfAdjointEigenSolver<Mat> es(A, Eigen::EigenvaluesOnly);
    return es.eigenvalues()[0];
  }
  S.conservativeResize(n, cols);
  Eigen::HouseholderQR<Mat> qr(S);
  const Mat Q = qr.householderQ() * Mat::Identity(n, n);
  const Mat Q2 = Q.rightCols(n - cols);
  const Mat B = Q2.transpose() * A * Q2;
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (B + B.transpose()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

namespace {

int periodic_sign_changes(const Vec& v) {
  const double thresh = 1e-8 * v.cwiseAbs().maxCoeff();
  const int n = int(v.size());
  int changes = 0;
  int last = 0;
  int first = 0;
  for (int j = 0; j < n; ++j) {
    const double x = v[j];
    if (std::abs(x) <= thresh) continue;
    const int s = x > 0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    if (first == 0) first = s;
    last = s;
  }
  if (last != 0 && first != 0 && last != first) ++changes;  // wrap around
  return changes;
}

}  // namespace

SturmReport sturm_sign_check(const SymSpectrum& spec, int max_index) {
  SturmReport rep;
  const int count = std::min<int>(max_index + 1, int(spec.eigenvectors.size()));
  for (int i = 0; i < count; ++i) {
    const int c = periodic_sign_changes(spec.eigenvectors[i].values);
    rep.sign_changes.push_back(c);
    if (c > 2 * i) {
      rep.violations.push_back(i);
      rep.pass = false;
    }
  }
  return rep;
}

DynamicalSpectrum kdv_dynamical_spectrum(const WaveProfile& profile) {
  const Grid& grid = profile.phi.grid;
  OperatorMatrix lp = assemble_Lplus(profile);
  // Real physical form keeps the spectrum exactly conjugate-symmetric.
  Mat Lp = lp.physical();
  Vec dmult(grid.n);
  for (int m = 0; m < grid.n; ++m) {
    const int k = grid.wavenumbers[m];
    dmult[m] = (k == grid.n / 2) ? 0.0 : kPi * k / grid.half_period;
  }
  // d/dx as a real circulant: i*dmult is odd, so conjugation with the DFT
  // gives a real antisymmetric matrix.
  CVec dc(grid.n);
  for (int m = 0; m < grid.n; ++m) dc[m] = Complex(0.0, dmult[m]);
  const CVec col = idft(dc);
  Mat D(grid.n, grid.n);
  for (int i = 0; i < grid.n; ++i)
    for (int j = 0; j < grid.n; ++j) D(i, j) = col[((i - j) % grid.n + grid.n) % grid.n].real();
  const Mat A = D * Lp;
  Eigen::EigenSolver<Mat> es(A, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw NumericalError("kdv_dynamical_spectrum: eigensolver failed");
  const double norm_est = lp.norm_estimate() * (kPi * (grid.n / 2) / grid.half_period);
  return classify_dynamical(es.eigenvalues(), norm_est, grid.n);
}

DynamicalSpectrum nls_dynamical_spectrum(const WaveProfile& profile) {
  const Grid& grid = profile.phi.grid;
  const int n = grid.n;
  OperatorMatrix lp = assemble_Lplus(profile);
  OperatorMatrix lm = assemble_Lminus(profile);
  Mat A = Mat::Zero(2 * n, 2 * n);
  A.topRightCorner(n, n) = lm.physical();
  A.bottomLeftCorner(n, n) = -lp.physical();
  Eigen::EigenSolver<Mat> es(A, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw NumericalError("nls_dynamical_spectrum: eigensolver failed");
  const double norm_est = std::max(lp.norm_estimate(), lm.norm_estimate());
  return classify_dynamical(es.eigenvalues(), norm_est, 2 * n);
}

SpectrumReport analyze_profile(const WaveProfile& profile, const AnalysisOptions& opts) {
  SpectrumReport rep;
  OperatorMatrix lp = assemble_Lplus(profile);
  OperatorMatrix lm = assemble_Lminus(profile);
  const SymSpectrum sp = sym_spectrum(lp);
  const SymSpectrum sm = sym_spectrum(lm);
  rep.eigenvalues_Lplus = sp.eigenvalues;
  rep.eigenvalues_Lminus = sm.eigenvalues;

  const NegativeCount cp = count_negative(sp.eigenvalues, lp.norm_estimate());
  const NegativeCount cm = count_negative(sm.eigenvalues, lm.norm_estimate());
  rep.n_neg_plus = cp.n_neg;
  rep.n_neg_minus = cm.n_neg;
  rep.kernel_dim_plus = cp.kernel_dim;
  rep.kernel_dim_minus = cm.kernel_dim;
  for (int i = 0; i < int(sp.eigenvalues.size()); ++i)
    if (std::abs(sp.eigenvalues[i]) <= cp.kernel_tol) rep.kernel_vectors.push_back(sp.eigenvectors[i]);
  rep.phi_kernel_angle = weak_nondegeneracy(profile, rep.kernel_vectors);
  try {
    rep.vk_index = vk_index(profile, sp, cp.kernel_tol);
    rep.vk_defined = true;
  } catch (const IllPosedError& e) {
    rep.notes += std::string(e.what()) + "; ";
  }

  const RealField dphi = derivative(profile.phi);
  rep.lplus_phiprime_residual =
      std::sqrt(std::max(0.0, apply_operator_fft(lp, dphi.values).squaredNorm() * profile.phi.grid.weight()));
  rep.lminus_phi_residual =
      std::sqrt(std::max(0.0, apply_operator_fft(lm, profile.phi.values).squaredNorm() * profile.phi.grid.weight()));

  rep.coercivity_kappa = coercivity_gap(lp, {profile.phi, dphi});

  if (opts.dynamical) {
    rep.dynamical_kdv = kdv_dynamical_spectrum(profile);
    rep.dynamical_nls = nls_dynamical_spectrum(profile);
  }
  rep.verdict_kdv = stability_verdict(rep, Problem::KdV, opts.dyn_real_tol);
  rep.verdict_nls = stability_verdict(rep, Problem::NLS, opts.dyn_real_tol);
  return rep;
}

Verdict stability_verdict(const SpectrumReport& report, Problem problem, double dyn_real_tol) {
  // Index-side assessment first.
  bool index_stable = false;
  bool index_unstable = false;
  if (report.n_neg_plus == 0) {
    // The wave is an unconstrained local minimizer; no index obstruction.
    index_stable = report.n_neg_minus == 0;
    index_unstable = false;
  } else if (report.n_neg_plus == 1) {
    const bool weak_ok = report.phi_kernel_angle <= 1e-8;
    const bool vk_neg = report.vk_defined && report.vk_index < 0.0;
    if (problem == Problem::KdV) {
      index_stable = weak_ok && vk_neg;
    } else {
      index_stable = weak_ok && vk_neg && report.n_neg_minus == 0;
    }
    index_unstable = report.vk_defined && report.vk_index > 0.0 && report.n_neg_plus == 1;
  } else {
    index_unstable = true;  // n(L+) - k0 > 0 is possible; the count cannot close
  }

  const DynamicalSpectrum& dyn =
      problem == Problem::KdV ? report.dynamical_kdv : report.dynamical_nls;
  if (dyn.eigenvalues.size() == 0) {
    if (index_stable) return Verdict::SpectrallyStable;
    return index_unstable ? Verdict::Unstable : Verdict::Inconclusive;
  }
  const bool dyn_stable = dyn.max_real_part <= dyn_real_tol;
  if (index_stable && dyn_stable) return Verdict::SpectrallyStable;
  if (index_unstable && !dyn_stable) return Verdict::Unstable;
  return Verdict::Inconclusive;
}

}  // namespace fracwave
