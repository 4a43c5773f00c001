#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cstardyn/core/group_action.hpp"
#include "cstardyn/core/types.hpp"
#include "cstardyn/equivrep/equivariant_rep.hpp"
#include "cstardyn/hilbmod/sectional_module.hpp"

namespace cstardyn {

/// A cocycle representation of a transformation group on the bundle of
/// fibres of a sectional module: u(x, g) maps the fibre at g^{-1}x onto the
/// fibre at x.
class CocycleRep {
 public:
  /// u[g][x] of shape d_x x d_{g^{-1}x}; throws on shape mismatch.
  CocycleRep(GroupAction action, SectionalModule module, std::vector<std::vector<CMatrix>> u);

  const GroupAction& action() const { return action_; }
  const SectionalModule& module() const { return module_; }
  const CMatrix& at(int x, int g) const { return u_[g][x]; }
  const std::vector<std::vector<CMatrix>>& table() const { return u_; }

 private:
  GroupAction action_;
  SectionalModule module_;
  std::vector<std::vector<CMatrix>> u_;
};

/// Residuals of unitarity, u(x, gh) = u(x, g) u(g^{-1}x, h) and u(x, e) = id.
VerificationReport verify_cocycle(const CocycleRep& c, double tol = kDefaultTol);

/// Reads the cocycle off the group part of an equivariant representation.
/// Throws NotCompatible if some v(g) does not move fibre g^{-1}x to x, and
/// RelationViolation("inner_product") if a block is not unitary.
CocycleRep v_to_cocycle(std::span<const FiberPermutingMap> v, const SectionalModule& module,
                        const GroupAction& action, double tol = kDefaultTol);

/// (v(g) xi)(x) = u(x, g) xi(g^{-1}x). Throws InvalidArgument if c fails
/// verify_cocycle.
std::vector<FiberPermutingMap> cocycle_to_v(const CocycleRep& c, double tol = kDefaultTol);

/// Unitaries U(x) with U(x) u1(x, g) U(g^{-1}x)* = u2(x, g), if any exist.
std::optional<std::vector<CMatrix>> cocycle_equivalent(const CocycleRep& c1, const CocycleRep& c2,
                                                       double tol = kDefaultTol);

/// A point map sigma with sigma(g.x) = g.sigma(x).
struct EquivariantMap {
  GroupAction action;
  std::vector<int> sigma;

  /// First (g, x) breaking equivariance, in lexicographic order.
  std::optional<std::pair<int, int>> violation() const;
  /// Throws InvalidArgument naming the violating pair.
  void check() const;
};

/// rho(e_k) = projection onto the fibres {x : sigma(x) = k}, v from c.
EquivariantRep rho_from_sigma(const EquivariantMap& map, const CocycleRep& c, double tol = kDefaultTol);

/// (V xi)(x) = u[x] xi(sigma[x]).
struct BanachStoneForm {
  std::vector<int> sigma;
  std::vector<CMatrix> u;
};

/// Recovers the form of a surjective isometry of the section space given as
/// a dense matrix on flat coordinates. Throws NotBanachStoneForm when images
/// of single-fibre sections spread over several fibres, when a block is not
/// unitary, or when sigma is not a bijection.
BanachStoneForm banach_stone_extract(const CMatrix& v, const SectionalModule& module, double tol = kDefaultTol);

/// The dense matrix of the map described by a form.
CMatrix banach_stone_compose(const BanachStoneForm& form, const SectionalModule& module);

}  // namespace cstardyn
