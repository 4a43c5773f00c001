#include <algorithm>

#include "cstardyn/core/linalg.hpp"
#include "cstardyn/equivrep/constructions.hpp"

namespace cstardyn {

FellAbsorption fell_absorption_unitary(const EquivariantRep& rep, double tol) {
  const System& sys = rep.system();
  const int n = sys.n();
  const EquivariantRep regular_trivial = regular_rep(trivial_rep(sys));
  TensorRep tensor = tensor_rep(rep, regular_trivial, tol);
  EquivariantRep regular = regular_rep(rep);

  const SectionalModule x_mod = rep.module();
  const SectionalModule a_mod = regular_trivial.module();
  const SectionalModule target = regular.module();
  const int d2 = a_mod.total_dim();

  // W(e_i (x) e_(y,h))(h) = e_i . e_y on simple tensors of basis vectors.
  CMatrix w_alg = CMatrix::Zero(target.total_dim(), x_mod.total_dim() * d2);
  for (int i = 0; i < x_mod.total_dim(); ++i) {
    const int fi = x_mod.fiber_of(i);
    const int pos = i - x_mod.offset(fi);
    for (int j = 0; j < d2; ++j) {
      const int y = a_mod.fiber_of(j);
      if (y != fi) continue;
      const int copy = j - a_mod.offset(y);
      w_alg(target.offset(fi) + copy * x_mod.dim(fi) + pos, i * d2 + j) = 1.0;
    }
  }
  FellAbsorption out{std::move(tensor), std::move(regular), CMatrix(), {}};
  const auto& tmod = out.tensor.rep.module();
  out.w = w_alg * out.tensor.tensor.lift;
  const double threshold = tol;

  double gram = 0.0;
  for (int x = 0; x < n; ++x)
    gram = std::max(gram, max_abs(w_alg.adjoint() * fiber_projection(target, x) * w_alg -
                                  out.tensor.tensor.algebraic_gram[x]));
  out.report.add("isometry_gram", gram, threshold);

  out.report.add("fiber_dims", tmod == target ? 0.0 : 1.0, 0.0);
  if (tmod == target) {
    const CMatrix id = CMatrix::Identity(target.total_dim(), target.total_dim());
    out.report.add("unitary",
                   std::max(max_abs(out.w.adjoint() * out.w - id), max_abs(out.w * out.w.adjoint() - id)),
                   threshold);
    double fiber_mixing = 0.0;
    for (int x = 0; x < n; ++x) {
      const CMatrix px = fiber_projection(target, x);
      fiber_mixing = std::max(fiber_mixing, max_abs(px * out.w - out.w * px));
    }
    out.report.add("fiber_preserving", fiber_mixing, threshold);
  }
  out.report.add("surjective", std::abs(numerical_rank(w_alg, tol) - target.total_dim()), 0.0);

  if (tmod == target) {
    double a_linear = 0.0, rho_tw = 0.0, v_tw = 0.0;
    for (int k = 0; k < n; ++k) {
      const CVector ek = unit_vector(n, k);
      a_linear = std::max(a_linear,
                          max_abs(out.w * right_action_matrix(tmod, ek) - right_action_matrix(target, ek) * out.w));
      rho_tw = std::max(rho_tw, max_abs(out.w * out.tensor.rep.rho(k).dense() - out.regular.rho(k).dense() * out.w));
    }
    for (int g = 0; g < sys.order(); ++g)
      v_tw = std::max(v_tw, max_abs(out.w * out.tensor.rep.v_dense(g) - out.regular.v_dense(g) * out.w));
    out.report.add("a_linear", a_linear, threshold);
    out.report.add("intertwines_rho", rho_tw, threshold);
    out.report.add("intertwines_v", v_tw, threshold);
  }
  return out;
}

}  // namespace cstardyn
