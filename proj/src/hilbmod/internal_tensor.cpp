#include <algorithm>
#include <string>

#include "cstardyn/core/errors.hpp"
#include "cstardyn/core/linalg.hpp"
#include "cstardyn/hilbmod/sectional_module.hpp"

namespace cstardyn {

ModuleVector InternalTensor::simple_tensor(const ModuleVector& x, const ModuleVector& y) const {
  if (!(x.module() == left) || !(y.module() == right))
    throw InvalidArgument("simple_tensor: factors do not belong to the tensored modules");
  return ModuleVector(module, quotient * kron(x.coords(), y.coords()));
}

CMatrix InternalTensor::induced(const CMatrix& algebraic_op) const { return quotient * algebraic_op * lift; }

InternalTensor internal_tensor(const SectionalModule& x1, const std::vector<ModuleOperator>& rho2,
                               const SectionalModule& x2, double tol) {
  if (static_cast<int>(rho2.size()) != x1.base_size())
    throw InvalidArgument("internal_tensor: need one generator rho2(e_k) per base point of the left module");
  for (const auto& op : rho2)
    if (!(op.module() == x2)) throw InvalidArgument("internal_tensor: rho2 does not act on the right module");
  const double rep_residual = representation_residual(rho2);
  if (rep_residual > tol * 10.0)
    throw InvalidArgument("internal_tensor: rho2 is not a representation (residual " + std::to_string(rep_residual) +
                          ")");

  const int d1 = x1.total_dim();
  const int d2 = x2.total_dim();
  const int n = x2.base_size();
  const int alg = d1 * d2;

  InternalTensor out{x1, x2, SectionalModule(std::vector<int>(n, 0)), CMatrix(), CMatrix(), {}, 0.0};
  out.algebraic_gram.assign(n, CMatrix::Zero(alg, alg));
  std::vector<CMatrix> dense_rho;
  for (const auto& op : rho2) dense_rho.push_back(op.dense());
  for (int i = 0; i < d1; ++i) {
    const CMatrix& p = dense_rho[x1.fiber_of(i)];
    for (int y = 0; y < n; ++y) {
      const int o = x2.offset(y), d = x2.dim(y);
      out.algebraic_gram[y].block(i * d2 + o, i * d2 + o, d, d) = p.block(o, o, d, d);
    }
  }

  std::vector<int> dims(n);
  std::vector<std::vector<int>> pair_coords(n);
  std::vector<GramFactor> factors;
  double min_eig = 0.0;
  for (int y = 0; y < n; ++y) {
    for (int i = 0; i < d1; ++i)
      for (int j = x2.offset(y); j < x2.offset(y) + x2.dim(y); ++j) pair_coords[y].push_back(i * d2 + j);
    const int m = static_cast<int>(pair_coords[y].size());
    CMatrix g(m, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) g(a, b) = out.algebraic_gram[y](pair_coords[y][a], pair_coords[y][b]);
    factors.push_back(factor_gram(g, tol));
    if (m > 0) min_eig = std::min(min_eig, factors.back().min_eigenvalue);
    dims[y] = factors.back().rank();
  }
  out.module = SectionalModule(dims);
  out.min_gram_eigenvalue = min_eig;
  out.quotient = CMatrix::Zero(out.module.total_dim(), alg);
  out.lift = CMatrix::Zero(alg, out.module.total_dim());
  for (int y = 0; y < n; ++y) {
    const int o = out.module.offset(y);
    for (std::size_t a = 0; a < pair_coords[y].size(); ++a) {
      out.quotient.block(o, pair_coords[y][a], dims[y], 1) = factors[y].quotient.col(a);
      out.lift.block(pair_coords[y][a], o, 1, dims[y]) = factors[y].lift.row(a);
    }
  }
  return out;
}

}  // namespace cstardyn
