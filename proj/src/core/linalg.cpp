#include "cstardyn/core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cstardyn/core/errors.hpp"

namespace cstardyn {

double max_abs(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool all_finite(const CMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double psd_threshold(const CMatrix& m, double tol) { return tol * (1.0 + max_abs(m)); }

PsdCheck psd_check(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw InvalidArgument("psd_check: matrix is not square");
  if (!all_finite(m)) throw InvalidArgument("psd_check: matrix has non-finite entries");
  PsdCheck out;
  if (m.rows() == 0) {
    out.psd = true;
    return out;
  }
  const double threshold = psd_threshold(m, tol);
  out.hermitian_residual = max_abs(m - m.adjoint());
  const CMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(herm);
  out.min_eigenvalue = eig.eigenvalues()(0);
  out.eigenvector = eig.eigenvectors().col(0);
  out.psd = out.hermitian_residual <= threshold && out.min_eigenvalue >= -threshold;
  return out;
}

bool is_psd(const CMatrix& m, double tol) { return psd_check(m, tol).psd; }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

int numerical_rank(const CMatrix& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<CMatrix> svd(m);
  const auto& s = svd.singularValues();
  const double cutoff = tol * (1.0 + s(0));
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cutoff) ++rank;
  return rank;
}

CMatrix null_space(const CMatrix& m, double tol) {
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0) return CMatrix::Identity(cols, cols);
  Eigen::BDCSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = tol * (1.0 + (s.size() ? s(0) : 0.0));
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  return svd.matrixV().rightCols(cols - rank);
}

CMatrix polar_unitary(const CMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("polar_unitary: matrix is not square");
  if (m.rows() == 0) return m;
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

double min_singular_value(const CMatrix& m) {
  if (m.size() == 0) return 1.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

GramFactor factor_gram(const CMatrix& gram, double tol) {
  GramFactor out;
  const Eigen::Index dim = gram.rows();
  if (dim == 0) {
    out.quotient = CMatrix(0, 0);
    out.lift = CMatrix(0, 0);
    return out;
  }
  const CMatrix herm = 0.5 * (gram + gram.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(herm);
  const auto& lambda = eig.eigenvalues();
  out.min_eigenvalue = lambda(0);
  const double cutoff = tol * (1.0 + std::max(lambda(dim - 1), 0.0));
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < dim; ++i)
    if (lambda(i) > cutoff) keep.push_back(i);
  const auto rank = static_cast<Eigen::Index>(keep.size());
  out.quotient.resize(rank, dim);
  out.lift.resize(dim, rank);
  for (Eigen::Index r = 0; r < rank; ++r) {
    const double l = lambda(keep[r]);
    const CVector col = eig.eigenvectors().col(keep[r]);
    out.quotient.row(r) = std::sqrt(l) * col.adjoint();
    out.lift.col(r) = col / std::sqrt(l);
  }
  return out;
}

}  // namespace cstardyn
