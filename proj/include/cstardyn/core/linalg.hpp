#pragma once

#include <vector>

#include "cstardyn/core/types.hpp"

namespace cstardyn {

/// Outcome of a positive-semidefiniteness test. min_eigenvalue and
/// eigenvector refer to the Hermitian part (m + m*)/2.
struct PsdCheck {
  bool psd = false;
  double hermitian_residual = 0.0;
  double min_eigenvalue = 0.0;
  CVector eigenvector;
};

/// Relative threshold used by the PSD test: tol * (1 + max |m_ij|).
double psd_threshold(const CMatrix& m, double tol);

PsdCheck psd_check(const CMatrix& m, double tol = kDefaultTol);

/// m Hermitian within tol and lambda_min of its Hermitian part >= -threshold.
bool is_psd(const CMatrix& m, double tol = kDefaultTol);

/// Largest absolute entry; 0 for empty matrices.
double max_abs(const CMatrix& m);

bool all_finite(const CMatrix& m);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Rank with cutoff sigma <= tol * (1 + sigma_max).
int numerical_rank(const CMatrix& m, double tol = kDefaultTol);

/// Orthonormal basis (columns) of the null space of m, cutoff as in
/// numerical_rank.
CMatrix null_space(const CMatrix& m, double tol = kDefaultTol);

/// Unitary factor of the polar decomposition (nearest unitary in Frobenius
/// norm). Requires a square argument.
CMatrix polar_unitary(const CMatrix& m);

/// Smallest singular value; +inf convention replaced by 1 for empty input.
double min_singular_value(const CMatrix& m);

/// Positive part of a Gram matrix: G = V diag(lambda) V*, keeping
/// eigenvalues above tol * (1 + lambda_max). `quotient` = diag(sqrt(lambda)) V*
/// and `lift` = V diag(1/sqrt(lambda)) so that quotient * lift = I and
/// quotient* quotient reproduces G on its range.
struct GramFactor {
  CMatrix quotient;
  CMatrix lift;
  double min_eigenvalue = 0.0;
  int rank() const { return static_cast<int>(quotient.rows()); }
};

GramFactor factor_gram(const CMatrix& gram, double tol = kDefaultTol);

}  // namespace cstardyn
