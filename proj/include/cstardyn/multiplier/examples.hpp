#pragma once

#include <array>
#include <vector>

#include "cstardyn/cocycle/cocycle.hpp"
#include "cstardyn/multiplier/multiplier.hpp"

namespace cstardyn {

/// S e_i = e_{i+1 mod n}.
CMatrix shift_matrix(int n);

/// u(x, m) = S^m on every fibre of dimension n over an action of Z_n (empty
/// blocks on zero-dimensional fibres).
CocycleRep shift_cocycle(const GroupAction& action, const SectionalModule& module);

/// Omega_n: fibre C^n at k, zero elsewhere; rho from sigma = const l; shift
/// cocycle; xi = e_p, eta = e_0. Its coefficient is delta_{p,m} E_{kl}.
Realization omega_example(int n, int k, int l, int p);

/// Sigma_n: fibre C^n everywhere with rho(e_j) = E_jj on each fibre; shift
/// cocycle; xi = e_l at k, eta = e_{l-p} at every point. Its coefficient is
/// delta_{p,m} E_{kl}.
Realization sigma_example(int n, int k, int l, int p);

/// The n^3 coefficient multipliers of an example, ordered by (k, l, p).
std::vector<Multiplier> example_multipliers(bool sigma, int n);

/// Cyclic representations of Omega_2 on C^2 (+) C^2 with pointwise diagonal
/// rho and v(1) = diag(eps_0, .., eps_3), eps_i = +-1.
EquivariantRep omega2_cyclic_rep(const std::array<int, 4>& eps);

/// Cyclic representations of Sigma_2 on C^2 (+) C^2 with pointwise diagonal
/// rho and v(1) = [[0, u], [u*, 0]], u = [[0, eps_0], [eps_1, 0]].
EquivariantRep sigma2_cyclic_rep(const std::array<int, 2>& eps);

/// The vector (xi, eta) of C^2 (+) C^2.
ModuleVector pair_vector(const CVector& xi, const CVector& eta);

/// T_0 = [[|xi_0|^2, |xi_1|^2], [|eta_0|^2, |eta_1|^2]] and
/// T_1 = [[e0 |xi_0|^2, e1 |xi_1|^2], [e2 |eta_0|^2, e3 |eta_1|^2]], eps_i in {-1, 0, 1}.
Multiplier omega2_formula(const std::array<int, 4>& eps, const CVector& xi, const CVector& eta);

/// T_1 as printed: [[e0 conj(xi_0) eta_1, e1 conj(xi_1) eta_0],
/// [e0 conj(eta_0) xi_1, e1 conj(eta_1) xi_0]]. This is the coefficient of
/// sigma2_cyclic_rep only when eps_0 = eps_1; otherwise it is not positive
/// definite.
Multiplier sigma2_formula_printed(const std::array<int, 2>& eps, const CVector& xi, const CVector& eta);

/// T_1 of the coefficient of sigma2_cyclic_rep:
/// [[e0 conj(xi_0) eta_1, e1 conj(xi_1) eta_0], [e1 conj(eta_0) xi_1, e0 conj(eta_1) xi_0]].
Multiplier sigma2_formula(const std::array<int, 2>& eps, const CVector& xi, const CVector& eta);

}  // namespace cstardyn
