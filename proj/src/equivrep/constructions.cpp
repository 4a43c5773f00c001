#include "cstardyn/equivrep/constructions.hpp"

#include <algorithm>
#include <random>

#include "cstardyn/core/errors.hpp"
#include "cstardyn/core/linalg.hpp"

namespace cstardyn {

TensorRep tensor_rep(const EquivariantRep& r1, const EquivariantRep& r2, double tol) {
  if (!(r1.system() == r2.system())) throw InvalidArgument("tensor_rep: representations of different systems");
  const System& sys = r1.system();
  InternalTensor tensor = internal_tensor(r1.module(), r2.rho(), r2.module(), tol);
  const CMatrix id2 = CMatrix::Identity(r2.module().total_dim(), r2.module().total_dim());

  std::vector<ModuleOperator> rho;
  for (int k = 0; k < sys.n(); ++k)
    rho.push_back(ModuleOperator::from_dense(tensor.module, tensor.induced(kron(r1.rho(k).dense(), id2)), tol));
  std::vector<FiberPermutingMap> v;
  for (int g = 0; g < sys.order(); ++g)
    v.push_back(FiberPermutingMap::from_dense(tensor.module, r2.v(g).source,
                                              tensor.induced(kron(r1.v_dense(g), r2.v_dense(g))), tol));
  EquivariantRep rep(sys, tensor.module, std::move(rho), std::move(v));
  return TensorRep{std::move(rep), std::move(tensor)};
}

namespace {

// Group average over the sign patterns sum_k +-P_k and the stabiliser blocks of
// x0: projects X onto the maps W_x0 that intertwine both representations at x0.
CMatrix average_at(const EquivariantRep& r1, const EquivariantRep& r2, int x0, const std::vector<int>& stabilizer,
                   const CMatrix& x) {
  CMatrix stab = CMatrix::Zero(x.rows(), x.cols());
  for (int s : stabilizer) stab += r2.v(s).blocks[x0] * x * r1.v(s).blocks[x0].adjoint();
  stab /= static_cast<double>(stabilizer.size());
  CMatrix out = CMatrix::Zero(x.rows(), x.cols());
  for (int k = 0; k < r1.system().n(); ++k) out += r2.rho(k).block(x0) * stab * r1.rho(k).block(x0);
  return out;
}

}  // namespace

std::optional<std::vector<CMatrix>> unitary_equivalence(const EquivariantRep& r1, const EquivariantRep& r2,
                                                        double tol) {
  if (!(r1.system() == r2.system())) throw InvalidArgument("unitary_equivalence: different systems");
  if (!(r1.module() == r2.module())) return std::nullopt;
  const System& sys = r1.system();
  const GroupAction& action = sys.action();
  const SectionalModule& module = r1.module();
  const int n = sys.n();
  std::vector<CMatrix> blocks(n);

  std::mt19937_64 rng(0xfe11);
  std::normal_distribution<double> normal;
  std::vector<bool> seen(n, false);
  for (int x0 = 0; x0 < n; ++x0) {
    if (seen[x0]) continue;
    // transversal[x] = some g with g.x0 = x.
    std::vector<int> transversal(n, -1), stabilizer;
    for (int g = 0; g < sys.order(); ++g) {
      const int x = action.act(g, x0);
      if (transversal[x] < 0) transversal[x] = g;
      if (x == x0) stabilizer.push_back(g);
    }
    const int d = module.dim(x0);
    CMatrix w0(d, d);
    bool found = d == 0;
    for (int attempt = 0; attempt < 4 && !found; ++attempt) {
      CMatrix x(d, d);
      for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = Complex(normal(rng), normal(rng));
      const CMatrix w = average_at(r1, r2, x0, stabilizer, x);
      if (min_singular_value(w) > 1e-6 * (1.0 + max_abs(w))) {
        w0 = polar_unitary(w);
        found = true;
      }
    }
    if (!found) return std::nullopt;
    for (int x = 0; x < n; ++x) {
      if (transversal[x] < 0) continue;
      seen[x] = true;
      const int g = transversal[x];
      blocks[x] = r2.v(g).blocks[x] * w0 * r1.v(g).blocks[x].adjoint();
    }
  }

  double residual = 0.0;
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      residual = std::max(residual, max_abs(blocks[x] * r1.rho(k).block(x) - r2.rho(k).block(x) * blocks[x]));
  for (int g = 0; g < sys.order(); ++g)
    for (int x = 0; x < n; ++x) {
      const int y = r1.v(g).source[x];
      residual = std::max(residual, max_abs(blocks[x] * r1.v(g).blocks[x] - r2.v(g).blocks[x] * blocks[y]));
    }
  if (residual > 100.0 * tol) return std::nullopt;
  return blocks;
}

int cyclic_span_rank(const EquivariantRep& rep, const ModuleVector& xi, double tol) {
  const System& sys = rep.system();
  const int n = sys.n();
  const SectionalModule& module = rep.module();
  if (!(xi.module() == module)) throw InvalidArgument("cyclic_span_rank: vector not in the module");
  CMatrix span(module.total_dim(), n * sys.order() * n);
  int col = 0;
  for (int g = 0; g < sys.order(); ++g) {
    const ModuleVector moved = rep.apply_v(g, xi);
    for (int k = 0; k < n; ++k) {
      const ModuleVector acted = rep.rho(k).apply(moved);
      for (int x = 0; x < n; ++x) span.col(col++) = acted.right_act(unit_vector(n, x)).coords();
    }
  }
  return numerical_rank(span, tol);
}

}  // namespace cstardyn
