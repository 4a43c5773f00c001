#include "cstardyn/core/group_action.hpp"

#include <string>

#include "cstardyn/core/errors.hpp"

namespace cstardyn {

FiniteSpace::FiniteSpace(int size) : size_(size) {
  if (size < 1) throw InvalidArgument("FiniteSpace: size must be at least 1");
}

GroupAction::GroupAction(FiniteGroup group, FiniteSpace space, std::vector<std::vector<int>> perm)
    : group_(std::move(group)), space_(space), perm_(std::move(perm)) {
  const int k = group_.order();
  const int n = space_.size();
  if (static_cast<int>(perm_.size()) != k)
    throw InvalidArgument("GroupAction: need one permutation per group element");
  inverse_perm_.assign(k, std::vector<int>(n, -1));
  for (int g = 0; g < k; ++g) {
    if (static_cast<int>(perm_[g].size()) != n)
      throw InvalidArgument("GroupAction: permutation " + std::to_string(g) + " has wrong length");
    for (int x = 0; x < n; ++x) {
      const int y = perm_[g][x];
      if (y < 0 || y >= n || inverse_perm_[g][y] >= 0)
        throw InvalidArgument("GroupAction: entry " + std::to_string(g) + " is not a bijection");
      inverse_perm_[g][y] = x;
    }
  }
  for (int x = 0; x < n; ++x)
    if (perm_[group_.identity()][x] != x)
      throw InvalidArgument("GroupAction: identity does not act trivially");
  for (int g = 0; g < k; ++g)
    for (int h = 0; h < k; ++h)
      for (int x = 0; x < n; ++x)
        if (perm_[group_.mul(g, h)][x] != perm_[g][perm_[h][x]])
          throw InvalidArgument("GroupAction: not a homomorphism at (" + std::to_string(g) + ", " +
                                std::to_string(h) + ")");
}

GroupAction GroupAction::trivial(FiniteGroup group, int n) {
  const int k = group.order();
  std::vector<std::vector<int>> perm(k, std::vector<int>(n));
  for (auto& p : perm)
    for (int x = 0; x < n; ++x) p[x] = x;
  return GroupAction(std::move(group), FiniteSpace(n), std::move(perm));
}

GroupAction GroupAction::cyclic_shift(int n) {
  std::vector<std::vector<int>> perm(n, std::vector<int>(n));
  for (int m = 0; m < n; ++m)
    for (int x = 0; x < n; ++x) perm[m][x] = (x + m) % n;
  return GroupAction(cyclic_group(n), FiniteSpace(n), std::move(perm));
}

System System::trivial_cyclic(int n) { return System(GroupAction::trivial(cyclic_group(n), n)); }

System System::shift_cyclic(int n) { return System(GroupAction::cyclic_shift(n)); }

CVector act_on_algebra(const GroupAction& action, int g, const CVector& a) {
  const int n = action.space().size();
  if (a.size() != n) throw InvalidArgument("act_on_algebra: vector length does not match the space");
  if (g < 0 || g >= action.group().order()) throw InvalidArgument("act_on_algebra: invalid group element");
  CVector out(n);
  for (int x = 0; x < n; ++x) out(x) = a(action.act_inverse(g, x));
  return out;
}

CVector unit_vector(int n, int k) {
  CVector e = CVector::Zero(n);
  e(k) = 1.0;
  return e;
}

}  // namespace cstardyn
