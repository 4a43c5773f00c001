#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cstardyn/core/group_action.hpp"
#include "cstardyn/core/types.hpp"
#include "cstardyn/hilbmod/sectional_module.hpp"

namespace cstardyn {

/// An invertible map of a sectional module that moves fibres:
/// (V xi)(x) = blocks[x] * xi(source[x]), blocks[x] of shape d_x x d_source[x].
struct FiberPermutingMap {
  std::vector<int> source;
  std::vector<CMatrix> blocks;

  CMatrix dense(const SectionalModule& module) const;
  /// Reads the blocks (x, source[x]) off a dense matrix; throws if mass
  /// remains outside them.
  static FiberPermutingMap from_dense(const SectionalModule& module, std::vector<int> source, const CMatrix& dense,
                                      double tol = kDefaultTol);
};

/// One named check with its maximal residual.
struct RelationCheck {
  std::string name;
  double residual = 0.0;
  bool pass = true;
};

struct VerificationReport {
  std::vector<RelationCheck> checks;

  bool passed() const;
  /// Residual of the named check; throws if absent.
  double residual(const std::string& name) const;
  void add(std::string name, double residual, double threshold);
};

/// An equivariant representation (rho, v) of a system on a sectional module.
/// rho is stored by its generators rho(e_0)..rho(e_{n-1}); v by one
/// fibre-permuting map per group element.
class EquivariantRep {
 public:
  EquivariantRep(System system, SectionalModule module, std::vector<ModuleOperator> rho,
                 std::vector<FiberPermutingMap> v);

  const System& system() const { return system_; }
  const SectionalModule& module() const { return module_; }
  const std::vector<ModuleOperator>& rho() const { return rho_; }
  const ModuleOperator& rho(int k) const { return rho_[k]; }
  const std::vector<FiberPermutingMap>& v() const { return v_; }
  const FiberPermutingMap& v(int g) const { return v_[g]; }

  CMatrix rho_dense(const CVector& a) const;
  CMatrix v_dense(int g) const { return v_[g].dense(module_); }
  ModuleVector apply_rho(const CVector& a, const ModuleVector& xi) const;
  ModuleVector apply_v(int g, const ModuleVector& xi) const;

  /// Set on representations built by regular_rep: the module X with
  /// module() = X^G, fibre x laid out copy-major (copy h occupies
  /// coordinates [h d_x, (h+1) d_x) of the fibre).
  const std::optional<SectionalModule>& regular_base() const { return regular_base_; }
  void set_regular_base(SectionalModule base) { regular_base_ = std::move(base); }

 private:
  System system_;
  SectionalModule module_;
  std::vector<ModuleOperator> rho_;
  std::vector<FiberPermutingMap> v_;
  std::optional<SectionalModule> regular_base_;
};

/// Checks rho's representation laws, the three equivariance relations,
/// v(e) = id, v(gh) = v(g)v(h), and isometry of v(g) on a spanning set.
/// Failures are reported, never thrown.
VerificationReport verify_equivariant(const EquivariantRep& rep, double tol = kDefaultTol);

/// (l, alpha) on C^n.
EquivariantRep trivial_rep(const System& system);

/// The associated regular representation on X^G.
EquivariantRep regular_rep(const EquivariantRep& rep);

EquivariantRep direct_sum(std::span<const EquivariantRep> reps);

/// Restriction xi_S of a vector of a regular module X^G to the copies in S.
ModuleVector restrict_to_copies(const EquivariantRep& regular, const ModuleVector& xi, const std::vector<int>& copies);

/// xi placed in every copy h in S of X^G (zero elsewhere).
ModuleVector spread_to_copies(const EquivariantRep& regular, const ModuleVector& xi, const std::vector<int>& copies);

}  // namespace cstardyn
