#pragma once

#include <vector>

#include "cstardyn/core/finite_group.hpp"
#include "cstardyn/core/types.hpp"

namespace cstardyn {

/// The points {0..n-1} underlying the algebra C^n.
class FiniteSpace {
 public:
  explicit FiniteSpace(int size);
  int size() const { return size_; }
  bool operator==(const FiniteSpace&) const = default;

 private:
  int size_;
};

/// A permutation action of a finite group on a finite space. perm[g][x] is
/// the point g.x; perm must be a homomorphism into the symmetric group.
class GroupAction {
 public:
  GroupAction(FiniteGroup group, FiniteSpace space, std::vector<std::vector<int>> perm);

  static GroupAction trivial(FiniteGroup group, int n);
  /// Z_n acting on n points by x -> x + m.
  static GroupAction cyclic_shift(int n);

  const FiniteGroup& group() const { return group_; }
  const FiniteSpace& space() const { return space_; }
  int act(int g, int x) const { return perm_[g][x]; }
  /// g^{-1}.x
  int act_inverse(int g, int x) const { return inverse_perm_[g][x]; }
  const std::vector<std::vector<int>>& perm() const { return perm_; }

  bool operator==(const GroupAction& other) const {
    return group_ == other.group_ && space_ == other.space_ && perm_ == other.perm_;
  }

 private:
  FiniteGroup group_;
  FiniteSpace space_;
  std::vector<std::vector<int>> perm_;
  std::vector<std::vector<int>> inverse_perm_;
};

/// A C*-dynamical system (C^n, G, alpha) with alpha induced by a point action.
class System {
 public:
  explicit System(GroupAction action) : action_(std::move(action)) {}

  /// Omega_n: Z_n acting trivially on C^n.
  static System trivial_cyclic(int n);
  /// Sigma_n: Z_n permuting the coordinates of C^n cyclically.
  static System shift_cyclic(int n);

  const GroupAction& action() const { return action_; }
  const FiniteGroup& group() const { return action_.group(); }
  int order() const { return action_.group().order(); }
  int n() const { return action_.space().size(); }

  bool operator==(const System& other) const { return action_ == other.action_; }

 private:
  GroupAction action_;
};

/// alpha_g(a)_x = a_{g^{-1}x}.
CVector act_on_algebra(const GroupAction& action, int g, const CVector& a);

/// The standard basis vector e_k of C^n.
CVector unit_vector(int n, int k);

}  // namespace cstardyn
