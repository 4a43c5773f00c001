#pragma once

#include <vector>

#include "cstardyn/core/group_action.hpp"
#include "cstardyn/core/types.hpp"
#include "cstardyn/multiplier/multiplier.hpp"

namespace cstardyn {

/// A covariant representation (pi, u) of a system on C^dim, given by the
/// generators pi(e_0..e_{n-1}) and one unitary per group element.
struct CovariantRep {
  System system;
  int dim = 0;
  std::vector<CMatrix> pi;
  std::vector<CMatrix> u;

  CMatrix pi_of(const CVector& a) const;
  /// max |pi(alpha_g(e_k)) - u(g) pi(e_k) u(g)^*|.
  double covariance_residual() const;
  /// Representation laws of pi and unitarity / homomorphism of u.
  double representation_residual() const;
};

/// pi diagonal on C^n, lifted to C^{n |G|}: coordinate h * n + x carries
/// copy h, point x; (pi~(a) xi)(h) = pi(alpha_h^{-1}(a)) xi(h),
/// (lambda~(g) xi)(h) = xi(g^{-1} h).
CovariantRep regular_covariant(const System& system);

/// f(g) in C^n for every group element g.
using CoefficientFunction = std::vector<CVector>;

/// sum_g pi(f(g)) u(g).
CMatrix integrated_form(const CovariantRep& rep, const CoefficientFunction& f);

/// (f1 * f2)(g) = sum_h f1(h) alpha_h(f2(h^{-1} g)).
CoefficientFunction convolve(const System& system, const CoefficientFunction& f1, const CoefficientFunction& f2);

/// f^*(g) = conj(alpha_g(f(g^{-1}))).
CoefficientFunction involution(const System& system, const CoefficientFunction& f);

/// e_j (.) delta_g.
CoefficientFunction basis_function(const System& system, int j, int g);

/// The reduced crossed product as the span of b_{j,g} = pi~(e_j) lambda~(g)
/// inside M_{n|G|}; basis index g * n + j.
struct ReducedCrossedProduct {
  System system;
  CovariantRep regular;
  std::vector<CMatrix> basis;
  /// b_a b_b = product_coeff[a][b] * b_{product_index[a][b]}, coefficient 0 or 1.
  std::vector<std::vector<int>> product_index;
  std::vector<std::vector<double>> product_coeff;
  /// b_a^* = b_{adjoint_index[a]}.
  std::vector<int> adjoint_index;

  int dimension() const { return static_cast<int>(basis.size()); }
  int basis_index(int j, int g) const { return g * system.n() + j; }
  /// sum_a c_a b_a.
  CMatrix element(const CVector& coords) const;
};

/// Builds the algebra and checks linear independence of the basis and that
/// the structure constants reproduce the matrix products and adjoints.
ReducedCrossedProduct build_reduced(const System& system, double tol = kDefaultTol);

/// f with Lambda(f) = m; throws NotInAlgebra when m is outside the span.
CoefficientFunction fourier_coefficients(const ReducedCrossedProduct& rcp, const CMatrix& m,
                                         double tol = kDefaultTol);

/// Coordinates of f in the basis.
CVector to_coordinates(const ReducedCrossedProduct& rcp, const CoefficientFunction& f);

/// Lambda(f) -> Lambda(T.f) with (T.f)(g) = T_g(f(g)), as a matrix on
/// basis coordinates.
CMatrix induced_map(const ReducedCrossedProduct& rcp, const Multiplier& t);

/// PSD test of the block matrix [Phi(b_a^* b_b)]_{a,b} for a map given on
/// basis coordinates.
PdCertificate is_completely_positive(const ReducedCrossedProduct& rcp, const CMatrix& phi, double tol = kDefaultTol);

/// Dimension of the centre, from the commutation equations on coordinates.
int center_dimension(const ReducedCrossedProduct& rcp, double tol = kDefaultTol);

bool is_commutative(const ReducedCrossedProduct& rcp, double tol = kDefaultTol);

}  // namespace cstardyn
