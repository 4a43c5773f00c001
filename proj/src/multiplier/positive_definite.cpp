#include <algorithm>
#include <random>

#include "cstardyn/core/errors.hpp"
#include "cstardyn/core/linalg.hpp"
#include "cstardyn/multiplier/multiplier.hpp"

namespace cstardyn {

CMatrix pd_kernel_matrix(const Multiplier& t, int x, int k) {
  const System& sys = t.system();
  const auto& group = sys.group();
  const auto& action = sys.action();
  const int order = sys.order();
  CMatrix m(order, order);
  for (int g = 0; g < order; ++g) {
    const int gi = group.inverse(g);
    const int row = action.act_inverse(g, x);
    const int col = action.act_inverse(g, k);
    for (int h = 0; h < order; ++h) m(g, h) = t.at(group.mul(gi, h))(row, col);
  }
  return m;
}

PdCertificate is_positive_definite(const Multiplier& t, double tol) {
  const int n = t.system().n();
  PdCertificate cert;
  cert.positive = true;
  cert.min_eigenvalue = std::numeric_limits<double>::infinity();
  double worst = std::numeric_limits<double>::infinity();
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < n; ++k) {
      const PsdCheck check = psd_check(pd_kernel_matrix(t, x, k), tol);
      cert.min_eigenvalue = std::min(cert.min_eigenvalue, check.min_eigenvalue);
      cert.hermitian_residual = std::max(cert.hermitian_residual, check.hermitian_residual);
      if (!check.psd) {
        cert.positive = false;
        // Non-Hermitian failures rank ahead of merely negative ones.
        const double score = check.min_eigenvalue - check.hermitian_residual;
        if (score < worst) {
          worst = score;
          PdWitness w;
          w.x = x;
          w.k = k;
          w.eigenvector = check.eigenvector;
          w.eigenvalue = check.min_eigenvalue;
          cert.witness = std::move(w);
        }
      }
    }
  return cert;
}

CMatrix definition_matrix_at(const Multiplier& t, std::span<const int> gs, std::span<const CVector> as, int x) {
  const System& sys = t.system();
  const auto& group = sys.group();
  const auto& action = sys.action();
  const int n = sys.n();
  if (gs.size() != as.size()) throw InvalidArgument("definition_matrix_at: tuple lengths differ");
  const auto m = static_cast<Eigen::Index>(gs.size());
  CMatrix out(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const int gi = gs[i];
    const int row = action.act_inverse(gi, x);
    for (Eigen::Index j = 0; j < m; ++j) {
      const CVector product = as[i].conjugate().cwiseProduct(as[j]);
      CVector pulled(n);  // alpha_{g_i}^{-1}(a_i^* a_j)
      for (int y = 0; y < n; ++y) pulled(y) = product(action.act(gi, y));
      const int h = group.mul(group.inverse(gi), gs[j]);
      out(i, j) = (t.at(h).row(row) * pulled)(0);
    }
  }
  return out;
}

PdCertificate pd_sample_oracle(const Multiplier& t, int trials, std::uint64_t seed, double tol) {
  if (trials < 1) throw InvalidArgument("pd_sample_oracle: need at least one trial");
  const System& sys = t.system();
  const int n = sys.n();
  const int order = sys.order();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(1, 2 * order);
  std::uniform_int_distribution<int> element(0, order - 1);
  std::bernoulli_distribution sparse(0.5);
  std::normal_distribution<double> normal;

  PdCertificate cert;
  cert.positive = true;
  cert.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; ++trial) {
    const int m = length(rng);
    std::vector<int> gs(m);
    std::vector<CVector> as(m, CVector(n));
    for (int i = 0; i < m; ++i) {
      gs[i] = element(rng);
      for (int y = 0; y < n; ++y) as[i](y) = sparse(rng) ? Complex(0.0) : Complex(normal(rng), normal(rng));
    }
    for (int x = 0; x < n; ++x) {
      const PsdCheck check = psd_check(definition_matrix_at(t, gs, as, x), tol);
      cert.min_eigenvalue = std::min(cert.min_eigenvalue, check.min_eigenvalue);
      cert.hermitian_residual = std::max(cert.hermitian_residual, check.hermitian_residual);
      if (!check.psd) {
        cert.positive = false;
        PdWitness w;
        w.x = x;
        w.group_elements = gs;
        w.algebra_elements = as;
        w.eigenvector = check.eigenvector;
        w.eigenvalue = check.min_eigenvalue;
        cert.witness = std::move(w);
        return cert;
      }
    }
  }
  return cert;
}

}  // namespace cstardyn
