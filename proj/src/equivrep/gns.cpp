#include "cstardyn/equivrep/gns.hpp"

#include <algorithm>
#include <stdexcept>

#include "cstardyn/core/linalg.hpp"

namespace cstardyn {

CyclicVector gns_from_pd(const Multiplier& t, double tol) {
  const PdCertificate cert = is_positive_definite(t, tol);
  if (!cert.positive)
    throw NotPositiveDefinite(cert, "gns_from_pd: multiplier is not positive definite (min eigenvalue " +
                                        std::to_string(cert.min_eigenvalue) + ")");
  const System& sys = t.system();
  const auto& group = sys.group();
  const auto& action = sys.action();
  const int n = sys.n();
  const int order = sys.order();
  const int gens = order * n;  // delta_g (x) e_k has index g * n + k

  std::vector<GramFactor> factors;
  std::vector<int> dims;
  double scale = 0.0;
  for (int y = 0; y < n; ++y) {
    CMatrix gram = CMatrix::Zero(gens, gens);
    for (int k = 0; k < n; ++k) {
      const CMatrix m = pd_kernel_matrix(t, y, k);
      for (int g = 0; g < order; ++g)
        for (int h = 0; h < order; ++h) gram(g * n + k, h * n + k) = m(g, h);
    }
    scale = std::max(scale, max_abs(gram));
    factors.push_back(factor_gram(0.5 * (gram + gram.adjoint()), tol));
    dims.push_back(factors.back().rank());
  }
  const SectionalModule module(dims);

  std::vector<ModuleOperator> rho;
  for (int j = 0; j < n; ++j) {
    CMatrix mask = CMatrix::Zero(gens, gens);
    for (int g = 0; g < order; ++g) mask(g * n + j, g * n + j) = 1.0;
    std::vector<CMatrix> blocks;
    for (int y = 0; y < n; ++y) blocks.push_back(factors[y].quotient * mask * factors[y].lift);
    rho.emplace_back(module, std::move(blocks));
  }

  std::vector<FiberPermutingMap> v;
  for (int s = 0; s < order; ++s) {
    CMatrix shift = CMatrix::Zero(gens, gens);
    for (int g = 0; g < order; ++g)
      for (int k = 0; k < n; ++k) shift(group.mul(s, g) * n + action.act(s, k), g * n + k) = 1.0;
    FiberPermutingMap map;
    for (int x = 0; x < n; ++x) {
      const int from = action.act_inverse(s, x);
      map.source.push_back(from);
      map.blocks.push_back(factors[x].quotient * shift * factors[from].lift);
    }
    v.push_back(std::move(map));
  }

  CVector unit = CVector::Zero(gens);
  for (int k = 0; k < n; ++k) unit(group.identity() * n + k) = 1.0;
  std::vector<CVector> components;
  for (int y = 0; y < n; ++y) components.push_back(factors[y].quotient * unit);

  EquivariantRep rep(sys, module, std::move(rho), std::move(v));
  ModuleVector xi = ModuleVector::from_components(module, components);
  const double err = coefficient(rep, xi, xi).distance(t);
  if (err > gens * tol * (1.0 + scale))
    throw std::runtime_error("gns_from_pd: reconstruction does not reproduce the multiplier (error " +
                             std::to_string(err) + ")");
  CyclicVector out{std::move(rep), std::move(xi)};
  if (!out.is_cyclic(tol)) throw std::runtime_error("gns_from_pd: reconstructed vector is not cyclic");
  return out;
}

}  // namespace cstardyn
