#pragma once

#include <complex>

#include <Eigen/Dense>

namespace cstardyn {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Tolerance used wherever a caller does not supply one.
inline constexpr double kDefaultTol = 1e-9;

}  // namespace cstardyn
