#include "cstardyn/cocycle/cocycle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cstardyn/core/errors.hpp"
#include "cstardyn/core/linalg.hpp"
#include "cstardyn/equivrep/constructions.hpp"

namespace cstardyn {

namespace {

double unitarity_residual(const CMatrix& u) {
  const CMatrix left = u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols());
  const CMatrix right = u * u.adjoint() - CMatrix::Identity(u.rows(), u.rows());
  return std::max(max_abs(left), max_abs(right));
}

}  // namespace

CocycleRep::CocycleRep(GroupAction action, SectionalModule module, std::vector<std::vector<CMatrix>> u)
    : action_(std::move(action)), module_(std::move(module)), u_(std::move(u)) {
  const int n = action_.space().size();
  if (module_.base_size() != n) throw InvalidArgument("CocycleRep: module base does not match the action");
  if (static_cast<int>(u_.size()) != action_.group().order())
    throw InvalidArgument("CocycleRep: need one family of matrices per group element");
  for (int g = 0; g < action_.group().order(); ++g) {
    if (static_cast<int>(u_[g].size()) != n) throw InvalidArgument("CocycleRep: need one matrix per point");
    for (int x = 0; x < n; ++x) {
      const CMatrix& m = u_[g][x];
      if (m.rows() != module_.dim(x) || m.cols() != module_.dim(action_.act_inverse(g, x)))
        throw InvalidArgument("CocycleRep: u(" + std::to_string(x) + ", " + std::to_string(g) +
                              ") has the wrong shape");
      if (!all_finite(m)) throw InvalidArgument("CocycleRep: non-finite entry");
    }
  }
}

VerificationReport verify_cocycle(const CocycleRep& c, double tol) {
  const auto& action = c.action();
  const auto& group = action.group();
  const int n = action.space().size();
  double unitary = 0.0, identity = 0.0, cocycle = 0.0;
  for (int g = 0; g < group.order(); ++g)
    for (int x = 0; x < n; ++x) unitary = std::max(unitary, unitarity_residual(c.at(x, g)));
  for (int x = 0; x < n; ++x) {
    const CMatrix& ue = c.at(x, group.identity());
    identity = std::max(identity, max_abs(ue - CMatrix::Identity(ue.rows(), ue.cols())));
  }
  for (int g = 0; g < group.order(); ++g)
    for (int h = 0; h < group.order(); ++h)
      for (int x = 0; x < n; ++x)
        cocycle = std::max(cocycle,
                           max_abs(c.at(x, group.mul(g, h)) - c.at(x, g) * c.at(action.act_inverse(g, x), h)));
  VerificationReport report;
  report.add("unitarity", unitary, tol);
  report.add("cocycle_identity", cocycle, tol);
  report.add("identity", identity, tol);
  return report;
}

CocycleRep v_to_cocycle(std::span<const FiberPermutingMap> v, const SectionalModule& module,
                        const GroupAction& action, double tol) {
  const int n = action.space().size();
  const int order = action.group().order();
  if (static_cast<int>(v.size()) != order) throw InvalidArgument("v_to_cocycle: need one map per group element");
  if (module.base_size() != n) throw InvalidArgument("v_to_cocycle: module base does not match the action");
  std::vector<std::vector<CMatrix>> u(order);
  for (int g = 0; g < order; ++g) {
    if (static_cast<int>(v[g].source.size()) != n || static_cast<int>(v[g].blocks.size()) != n)
      throw InvalidArgument("v_to_cocycle: map has wrong length");
    for (int x = 0; x < n; ++x) {
      if (v[g].source[x] != action.act_inverse(g, x))
        throw NotCompatible("v_to_cocycle: v(" + std::to_string(g) + ") takes fibre " +
                            std::to_string(v[g].source[x]) + " to " + std::to_string(x) + " instead of fibre " +
                            std::to_string(action.act_inverse(g, x)));
      const double r = unitarity_residual(v[g].blocks[x]);
      if (r > tol)
        throw RelationViolation("inner_product", r,
                                "v_to_cocycle: block (" + std::to_string(x) + ", " + std::to_string(g) +
                                    ") is not unitary");
      u[g].push_back(v[g].blocks[x]);
    }
  }
  return CocycleRep(action, module, std::move(u));
}

std::vector<FiberPermutingMap> cocycle_to_v(const CocycleRep& c, double tol) {
  const VerificationReport report = verify_cocycle(c, tol);
  if (!report.passed()) {
    std::string msg = "cocycle_to_v: not a cocycle representation:";
    for (const auto& check : report.checks)
      if (!check.pass) msg += " " + check.name + "=" + std::to_string(check.residual);
    throw InvalidArgument(msg);
  }
  const auto& action = c.action();
  std::vector<FiberPermutingMap> v;
  for (int g = 0; g < action.group().order(); ++g) {
    FiberPermutingMap map;
    for (int x = 0; x < action.space().size(); ++x) {
      map.source.push_back(action.act_inverse(g, x));
      map.blocks.push_back(c.at(x, g));
    }
    v.push_back(std::move(map));
  }
  return v;
}

std::optional<std::vector<CMatrix>> cocycle_equivalent(const CocycleRep& c1, const CocycleRep& c2, double tol) {
  if (!(c1.action() == c2.action())) throw InvalidArgument("cocycle_equivalent: cocycles over different actions");
  if (!(c1.module() == c2.module())) return std::nullopt;
  // Block-diagonal intertwiners of the fibre projections are exactly the
  // families U(x), so the search reduces to equivalence of representations.
  std::vector<int> id(c1.action().space().size());
  std::iota(id.begin(), id.end(), 0);
  const EquivariantMap identity{c1.action(), id};
  return unitary_equivalence(rho_from_sigma(identity, c1, tol), rho_from_sigma(identity, c2, tol), tol);
}

std::optional<std::pair<int, int>> EquivariantMap::violation() const {
  const int n = action.space().size();
  if (static_cast<int>(sigma.size()) != n) throw InvalidArgument("EquivariantMap: sigma has wrong length");
  for (int s : sigma)
    if (s < 0 || s >= n) throw InvalidArgument("EquivariantMap: sigma value out of range");
  for (int g = 0; g < action.group().order(); ++g)
    for (int x = 0; x < n; ++x)
      if (sigma[action.act(g, x)] != action.act(g, sigma[x])) return std::make_pair(g, x);
  return std::nullopt;
}

void EquivariantMap::check() const {
  if (const auto bad = violation())
    throw InvalidArgument("sigma is not equivariant: sigma(g.x) != g.sigma(x) at g = " + std::to_string(bad->first) +
                          ", x = " + std::to_string(bad->second));
}

EquivariantRep rho_from_sigma(const EquivariantMap& map, const CocycleRep& c, double tol) {
  map.check();
  if (!(map.action == c.action())) throw InvalidArgument("rho_from_sigma: map and cocycle use different actions");
  const SectionalModule& module = c.module();
  const int n = module.base_size();
  std::vector<ModuleOperator> rho;
  for (int k = 0; k < n; ++k) {
    std::vector<CMatrix> blocks;
    for (int x = 0; x < n; ++x)
      blocks.push_back(CMatrix::Identity(module.dim(x), module.dim(x)) * (map.sigma[x] == k ? 1.0 : 0.0));
    rho.emplace_back(module, std::move(blocks));
  }
  return EquivariantRep(System(c.action()), module, std::move(rho), cocycle_to_v(c, tol));
}

}  // namespace cstardyn
