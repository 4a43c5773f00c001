#include "cstardyn/multiplier/examples.hpp"

#include <string>

#include "cstardyn/core/errors.hpp"

namespace cstardyn {

namespace {

void require_example_indices(int n, int k, int l, int p) {
  if (n < 2) throw InvalidArgument("example: n must be at least 2");
  if (k < 0 || k >= n || l < 0 || l >= n || p < 0 || p >= n)
    throw InvalidArgument("example: index out of range for n = " + std::to_string(n));
}

CMatrix matrix_power(const CMatrix& m, int e) {
  CMatrix out = CMatrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < e; ++i) out = out * m;
  return out;
}

std::vector<ModuleOperator> pointwise_diagonal_rho(const SectionalModule& module, int n) {
  std::vector<ModuleOperator> rho;
  for (int j = 0; j < n; ++j) {
    std::vector<CMatrix> blocks;
    for (int x = 0; x < module.base_size(); ++x) {
      CMatrix b = CMatrix::Zero(module.dim(x), module.dim(x));
      b(j, j) = 1.0;
      blocks.push_back(std::move(b));
    }
    rho.emplace_back(module, std::move(blocks));
  }
  return rho;
}

void require_signs(std::span<const int> eps, bool allow_zero) {
  for (int e : eps)
    if (!(e == 1 || e == -1 || (allow_zero && e == 0))) throw InvalidArgument("sign pattern entry out of range");
}

void require_pair(const CVector& xi, const CVector& eta) {
  if (xi.size() != 2 || eta.size() != 2) throw InvalidArgument("vectors must lie in C^2");
}

Multiplier from_pair(const System& system, const CMatrix& t0, const CMatrix& t1) {
  return Multiplier(system, {t0, t1});
}

CMatrix squared_moduli(const CVector& xi, const CVector& eta) {
  CMatrix t0(2, 2);
  t0 << std::norm(xi(0)), std::norm(xi(1)), std::norm(eta(0)), std::norm(eta(1));
  return t0;
}

}  // namespace

CMatrix shift_matrix(int n) {
  if (n < 1) throw InvalidArgument("shift_matrix: n must be positive");
  CMatrix s = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) s((i + 1) % n, i) = 1.0;
  return s;
}

CocycleRep shift_cocycle(const GroupAction& action, const SectionalModule& module) {
  const int order = action.group().order();
  if (!(action.group() == cyclic_group(order))) throw InvalidArgument("shift_cocycle: group is not cyclic");
  const CMatrix s = shift_matrix(order);
  std::vector<std::vector<CMatrix>> u(order);
  for (int m = 0; m < order; ++m)
    for (int x = 0; x < module.base_size(); ++x) {
      if (module.dim(x) == 0) {
        u[m].push_back(CMatrix(0, 0));
        continue;
      }
      if (module.dim(x) != order) throw InvalidArgument("shift_cocycle: fibre dimension must be 0 or the group order");
      u[m].push_back(matrix_power(s, m));
    }
  return CocycleRep(action, module, std::move(u));
}

Realization omega_example(int n, int k, int l, int p) {
  require_example_indices(n, k, l, p);
  const System sys = System::trivial_cyclic(n);
  std::vector<int> dims(n, 0);
  dims[k] = n;
  const SectionalModule module(dims);
  const EquivariantMap sigma{sys.action(), std::vector<int>(n, l)};
  EquivariantRep rep = rho_from_sigma(sigma, shift_cocycle(sys.action(), module));
  std::vector<CVector> xi(n, CVector(0)), eta(n, CVector(0));
  xi[k] = unit_vector(n, p);
  eta[k] = unit_vector(n, 0);
  ModuleVector x = ModuleVector::from_components(module, xi);
  ModuleVector y = ModuleVector::from_components(module, eta);
  return Realization{std::move(rep), std::move(x), std::move(y)};
}

Realization sigma_example(int n, int k, int l, int p) {
  require_example_indices(n, k, l, p);
  const System sys = System::shift_cyclic(n);
  const SectionalModule module(std::vector<int>(n, n));
  const CocycleRep c = shift_cocycle(sys.action(), module);
  EquivariantRep rep(sys, module, pointwise_diagonal_rho(module, n), cocycle_to_v(c));
  std::vector<CVector> xi(n, CVector::Zero(n)), eta(n, unit_vector(n, ((l - p) % n + n) % n));
  xi[k] = unit_vector(n, l);
  ModuleVector x = ModuleVector::from_components(module, xi);
  ModuleVector y = ModuleVector::from_components(module, eta);
  return Realization{std::move(rep), std::move(x), std::move(y)};
}

std::vector<Multiplier> example_multipliers(bool sigma, int n) {
  std::vector<Multiplier> out;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int p = 0; p < n; ++p) {
        const Realization r = sigma ? sigma_example(n, k, l, p) : omega_example(n, k, l, p);
        out.push_back(coefficient(r.rep, r.xi, r.eta));
      }
  return out;
}

EquivariantRep omega2_cyclic_rep(const std::array<int, 4>& eps) {
  require_signs(eps, false);
  const System sys = System::trivial_cyclic(2);
  const SectionalModule module({2, 2});
  std::vector<std::vector<CMatrix>> u(2);
  for (int x = 0; x < 2; ++x) {
    u[0].push_back(CMatrix::Identity(2, 2));
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = eps[2 * x];
    d(1, 1) = eps[2 * x + 1];
    u[1].push_back(d);
  }
  const CocycleRep c(sys.action(), module, std::move(u));
  return EquivariantRep(sys, module, pointwise_diagonal_rho(module, 2), cocycle_to_v(c));
}

EquivariantRep sigma2_cyclic_rep(const std::array<int, 2>& eps) {
  require_signs(eps, false);
  const System sys = System::shift_cyclic(2);
  const SectionalModule module({2, 2});
  CMatrix u(2, 2);
  u << 0.0, eps[0], eps[1], 0.0;
  std::vector<std::vector<CMatrix>> table(2);
  table[0] = {CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)};
  table[1] = {u, u.adjoint()};
  const CocycleRep c(sys.action(), module, std::move(table));
  return EquivariantRep(sys, module, pointwise_diagonal_rho(module, 2), cocycle_to_v(c));
}

ModuleVector pair_vector(const CVector& xi, const CVector& eta) {
  require_pair(xi, eta);
  return ModuleVector::from_components(SectionalModule({2, 2}), {xi, eta});
}

Multiplier omega2_formula(const std::array<int, 4>& eps, const CVector& xi, const CVector& eta) {
  require_signs(eps, true);
  require_pair(xi, eta);
  CMatrix t1(2, 2);
  t1 << double(eps[0]) * std::norm(xi(0)), double(eps[1]) * std::norm(xi(1)), double(eps[2]) * std::norm(eta(0)),
      double(eps[3]) * std::norm(eta(1));
  return from_pair(System::trivial_cyclic(2), squared_moduli(xi, eta), t1);
}

Multiplier sigma2_formula_printed(const std::array<int, 2>& eps, const CVector& xi, const CVector& eta) {
  require_signs(eps, false);
  require_pair(xi, eta);
  const double e0 = eps[0], e1 = eps[1];
  CMatrix t1(2, 2);
  t1 << e0 * std::conj(xi(0)) * eta(1), e1 * std::conj(xi(1)) * eta(0), e0 * std::conj(eta(0)) * xi(1),
      e1 * std::conj(eta(1)) * xi(0);
  return from_pair(System::shift_cyclic(2), squared_moduli(xi, eta), t1);
}

Multiplier sigma2_formula(const std::array<int, 2>& eps, const CVector& xi, const CVector& eta) {
  require_signs(eps, false);
  require_pair(xi, eta);
  const double e0 = eps[0], e1 = eps[1];
  CMatrix t1(2, 2);
  t1 << e0 * std::conj(xi(0)) * eta(1), e1 * std::conj(xi(1)) * eta(0), e1 * std::conj(eta(0)) * xi(1),
      e0 * std::conj(eta(1)) * xi(0);
  return from_pair(System::shift_cyclic(2), squared_moduli(xi, eta), t1);
}

}  // namespace cstardyn
