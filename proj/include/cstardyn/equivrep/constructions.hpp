#pragma once

#include <optional>
#include <vector>

#include "cstardyn/equivrep/equivariant_rep.hpp"
#include "cstardyn/hilbmod/sectional_module.hpp"

namespace cstardyn {

struct TensorRep {
  EquivariantRep rep;
  InternalTensor tensor;
};

/// (rho1 (x) rho2, v1 (x) v2) on X1 (x)_{rho2} X2.
TensorRep tensor_rep(const EquivariantRep& r1, const EquivariantRep& r2, double tol = kDefaultTol);

/// Fibrewise unitaries W_x with W rho1(a) = rho2(a) W and W v1(g) = v2(g) W,
/// or nullopt when the representations are not unitarily equivalent.
std::optional<std::vector<CMatrix>> unitary_equivalence(const EquivariantRep& r1, const EquivariantRep& r2,
                                                        double tol = kDefaultTol);

/// Rank of span{(rho(e_k) v(g) xi) . e_x}; xi is cyclic iff it equals the
/// module dimension.
int cyclic_span_rank(const EquivariantRep& rep, const ModuleVector& xi, double tol = kDefaultTol);

struct CyclicVector {
  EquivariantRep rep;
  ModuleVector vector;

  bool is_cyclic(double tol = kDefaultTol) const {
    return cyclic_span_rank(rep, vector, tol) == rep.module().total_dim();
  }
};

/// W: X (x)_{l-check} A^G -> X^G with W(x (.)(x) f)(g) = x . f(g), and the
/// residuals of the properties making it an equivalence of representations.
struct FellAbsorption {
  TensorRep tensor;
  EquivariantRep regular;
  /// On the quotient coordinates of tensor.rep.module().
  CMatrix w;
  VerificationReport report;
};

FellAbsorption fell_absorption_unitary(const EquivariantRep& rep, double tol = kDefaultTol);

}  // namespace cstardyn
