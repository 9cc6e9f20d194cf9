#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace fracwave {

using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using IVec = Eigen::VectorXi;
using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Raised when an iteration produces NaN/Inf or a solution blows up.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a quantity is requested outside its domain of validity
/// (e.g. an inverse applied to a vector that meets the kernel).
struct IllPosedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Newton failure modes are reported separately: a singular Jacobian points
/// at a degenerate wave, divergence at a bad starting point.
struct SingularJacobianError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fracwave
