#pragma once

#include <span>
#include <vector>

#include "cstardyn/core/types.hpp"

namespace cstardyn {

/// A sectional Hilbert C^n-module: one finite-dimensional Hilbert space
/// (fibre) per base point. Vectors are stored as one flat coordinate vector,
/// fibre by fibre; zero-dimensional fibres are allowed.
class SectionalModule {
 public:
  explicit SectionalModule(std::vector<int> fiber_dims);

  /// C^n over itself: n fibres of dimension one.
  static SectionalModule algebra(int n);

  int base_size() const { return static_cast<int>(dims_.size()); }
  int dim(int x) const { return dims_[x]; }
  int offset(int x) const { return offsets_[x]; }
  int total_dim() const { return offsets_.back(); }
  const std::vector<int>& fiber_dims() const { return dims_; }

  /// Fibre index of a flat coordinate.
  int fiber_of(int coordinate) const;

  bool operator==(const SectionalModule& other) const { return dims_ == other.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<int> offsets_;
};

class ModuleVector {
 public:
  ModuleVector(SectionalModule module, CVector coords);
  static ModuleVector zero(const SectionalModule& module);
  static ModuleVector from_components(const SectionalModule& module, const std::vector<CVector>& components);
  /// Unit vector at a flat coordinate.
  static ModuleVector basis(const SectionalModule& module, int coordinate);

  const SectionalModule& module() const { return module_; }
  const CVector& coords() const { return coords_; }
  CVector component(int x) const { return coords_.segment(module_.offset(x), module_.dim(x)); }

  /// Right module action (xi . a)(x) = a_x xi(x).
  ModuleVector right_act(const CVector& a) const;

  ModuleVector operator+(const ModuleVector& other) const;
  ModuleVector operator*(Complex s) const;

 private:
  SectionalModule module_;
  CVector coords_;
};

/// A fibre-preserving (adjointable) operator: one d_x x d_x block per fibre.
class ModuleOperator {
 public:
  ModuleOperator(SectionalModule module, std::vector<CMatrix> blocks);
  static ModuleOperator identity(const SectionalModule& module);
  static ModuleOperator zero(const SectionalModule& module);
  /// Extracts the diagonal blocks of a dense operator, rejecting any
  /// off-diagonal mass above tol.
  static ModuleOperator from_dense(const SectionalModule& module, const CMatrix& dense, double tol = kDefaultTol);

  const SectionalModule& module() const { return module_; }
  const CMatrix& block(int x) const { return blocks_[x]; }
  const std::vector<CMatrix>& blocks() const { return blocks_; }
  CMatrix dense() const;
  ModuleVector apply(const ModuleVector& v) const;

 private:
  SectionalModule module_;
  std::vector<CMatrix> blocks_;
};

/// Fibrewise inner product <xi, eta>(x) = <xi(x), eta(x)>, antilinear in xi.
CVector inner_product(const ModuleVector& xi, const ModuleVector& eta);

/// ||xi|| = ||<xi, xi>||_inf^{1/2}.
double module_norm(const ModuleVector& xi);

/// Dense matrix of the right action by a on the flat coordinates.
CMatrix right_action_matrix(const SectionalModule& module, const CVector& a);

/// Coordinate projection onto fibre x.
CMatrix fiber_projection(const SectionalModule& module, int x);

/// Result of identifying an abstractly presented Hilbert C^n-module on C^dim
/// with a sectional one. identification maps C^dim onto the flat
/// coordinates of `module` (x -> (x.e_k)_k written in orthonormal fibre
/// bases) and preserves inner products up to gram_residual.
struct Sectionalization {
  SectionalModule module;
  CMatrix identification;
  double gram_residual = 0.0;
};

/// action[k] is the matrix of x -> x.e_k on C^dim; gram[x] is the matrix of
/// the x-th component of the C^n-valued inner product on the standard basis.
Sectionalization sectionalize(int dim, const std::vector<CMatrix>& action, const std::vector<CMatrix>& gram,
                              double tol = kDefaultTol);

SectionalModule direct_sum(std::span<const SectionalModule> modules);

/// Canonical injection of summand `index` into direct_sum(modules).
ModuleVector inject(std::span<const SectionalModule> modules, int index, const ModuleVector& v);

/// Dense matrix of the injection of summand `index`.
CMatrix injection_matrix(std::span<const SectionalModule> modules, int index);

/// X1 (x)_{rho2} X2 for sectional modules, realised as the quotient of the
/// algebraic tensor product by the null space of its C^n-valued
/// semi-inner product. Algebraic coordinates are Kronecker-ordered:
/// i * dim(X2) + j.
struct InternalTensor {
  SectionalModule left;
  SectionalModule right;
  SectionalModule module;
  /// total_dim(module) x (dim X1 * dim X2), the quotient map.
  CMatrix quotient;
  /// (dim X1 * dim X2) x total_dim(module), a right inverse of quotient.
  CMatrix lift;
  /// Semi-inner product component at each base point on algebraic coordinates.
  std::vector<CMatrix> algebraic_gram;
  double min_gram_eigenvalue = 0.0;

  /// x (.)(x) y as a vector of the quotient module.
  ModuleVector simple_tensor(const ModuleVector& x, const ModuleVector& y) const;
  /// Matrix on the quotient induced by an operator on algebraic coordinates
  /// that preserves the null space.
  CMatrix induced(const CMatrix& algebraic_op) const;
};

InternalTensor internal_tensor(const SectionalModule& x1, const std::vector<ModuleOperator>& rho2,
                               const SectionalModule& x2, double tol = kDefaultTol);

/// Max residuals of the representation laws for generators rho(e_0..e_{n-1}):
/// idempotent, pairwise orthogonal, self-adjoint, summing to the identity.
double representation_residual(const std::vector<ModuleOperator>& rho);

}  // namespace cstardyn
