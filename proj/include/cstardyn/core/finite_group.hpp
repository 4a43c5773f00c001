#pragma once

#include <vector>

namespace cstardyn {

/// A finite group given by its multiplication table on the dense indices
/// 0..order-1. The table is validated on construction (closure,
/// associativity, identity, inverses).
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::vector<int>> mult);

  int order() const { return static_cast<int>(mult_.size()); }
  int identity() const { return identity_; }
  int mul(int g, int h) const { return mult_[g][h]; }
  int inverse(int g) const { return inverse_[g]; }
  const std::vector<std::vector<int>>& table() const { return mult_; }

  bool operator==(const FiniteGroup& other) const { return mult_ == other.mult_; }

 private:
  std::vector<std::vector<int>> mult_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// Z_n with mult(i, j) = (i + j) mod n.
FiniteGroup cyclic_group(int n);

/// S_m on the permutations of {0..m-1} in lexicographic order; element 0 is
/// the identity and mult(i, j) is the composition p_i o p_j.
FiniteGroup symmetric_group(int m);

/// The permutation of {0..m-1} indexed by `element` in symmetric_group(m).
std::vector<int> symmetric_group_permutation(int m, int element);

}  // namespace cstardyn
