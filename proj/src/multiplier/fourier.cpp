#include <algorithm>

#include "cstardyn/core/errors.hpp"
#include "cstardyn/multiplier/multiplier.hpp"

namespace cstardyn {

namespace {

std::vector<int> complement(const std::vector<int>& s, int order) {
  std::vector<bool> in(order, false);
  for (int g : s) {
    if (g < 0 || g >= order) throw InvalidArgument("group element index out of range");
    in[g] = true;
  }
  std::vector<int> out;
  for (int g = 0; g < order; ++g)
    if (!in[g]) out.push_back(g);
  return out;
}

}  // namespace

Truncation truncate_realization(const EquivariantRep& rep, const ModuleVector& xi, const ModuleVector& eta,
                                const std::vector<int>& s1, const std::vector<int>& s2) {
  if (!rep.regular_base()) throw InvalidArgument("truncate_realization: representation is not a regular one");
  const int order = rep.system().order();
  const ModuleVector xi1 = restrict_to_copies(rep, xi, s1);
  const ModuleVector eta2 = restrict_to_copies(rep, eta, s2);
  const ModuleVector xi1c = restrict_to_copies(rep, xi, complement(s1, order));
  const ModuleVector eta2c = restrict_to_copies(rep, eta, complement(s2, order));

  const Multiplier full = coefficient(rep, xi, eta);
  Truncation out{coefficient(rep, xi1, eta2), {}, 0.0, 0.0};
  const Multiplier diff = full - out.truncated;
  for (const auto& m : diff.mats()) out.deviation.lower = std::max(out.deviation.lower, sup_operator_norm(m));
  out.deviation.upper = module_norm(xi1c) * module_norm(eta) + module_norm(xi1) * module_norm(eta2c);
  out.deviation.consistent = out.deviation.lower <= out.deviation.upper + kDefaultTol;
  out.truncated_norm_upper = module_norm(xi1) * module_norm(eta2);
  out.full_norm_upper = module_norm(xi) * module_norm(eta);
  return out;
}

Realization realize_via_regular(const Multiplier& t, const Realization& realization, double tol) {
  if (!(realization.rep.system() == t.system()))
    throw InvalidArgument("realize_via_regular: realization is for a different system");
  double scale = 0.0;
  for (const auto& m : t.mats()) scale = std::max(scale, sup_operator_norm(m));
  if (coefficient(realization.rep, realization.xi, realization.eta).distance(t) > tol * (1.0 + scale))
    throw InvalidArgument("realize_via_regular: the triple does not realize the multiplier");
  const std::vector<int> support = t.support(tol);
  if (support.empty()) throw InvalidArgument("realize_via_regular: multiplier has empty support");
  EquivariantRep regular = regular_rep(realization.rep);
  ModuleVector xi = spread_to_copies(regular, realization.xi, support);
  ModuleVector eta = spread_to_copies(regular, realization.eta, {t.system().group().identity()});
  return Realization{std::move(regular), std::move(xi), std::move(eta)};
}

}  // namespace cstardyn
