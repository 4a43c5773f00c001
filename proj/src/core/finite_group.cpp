#include "cstardyn/core/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cstardyn/core/errors.hpp"

namespace cstardyn {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mult) : mult_(std::move(mult)) {
  const int k = static_cast<int>(mult_.size());
  if (k == 0) throw InvalidArgument("FiniteGroup: empty multiplication table");
  for (const auto& row : mult_) {
    if (static_cast<int>(row.size()) != k) throw InvalidArgument("FiniteGroup: table is not square");
    for (int v : row)
      if (v < 0 || v >= k) throw InvalidArgument("FiniteGroup: entry out of range");
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]])
          throw InvalidArgument("FiniteGroup: associativity fails at (" + std::to_string(a) + ", " +
                                std::to_string(b) + ", " + std::to_string(c) + ")");
  identity_ = -1;
  for (int e = 0; e < k && identity_ < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < k && ok; ++g) ok = mult_[e][g] == g && mult_[g][e] == g;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InvalidArgument("FiniteGroup: no identity element");
  inverse_.assign(k, -1);
  for (int g = 0; g < k; ++g) {
    for (int h = 0; h < k; ++h)
      if (mult_[g][h] == identity_ && mult_[h][g] == identity_) {
        inverse_[g] = h;
        break;
      }
    if (inverse_[g] < 0) throw InvalidArgument("FiniteGroup: element " + std::to_string(g) + " has no inverse");
  }
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InvalidArgument("cyclic_group: order must be positive");
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mult[i][j] = (i + j) % n;
  return FiniteGroup(std::move(mult));
}

namespace {

std::vector<std::vector<int>> all_permutations(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

FiniteGroup symmetric_group(int m) {
  if (m < 1 || m > 5) throw InvalidArgument("symmetric_group: degree must be in 1..5");
  const auto perms = all_permutations(m);
  const int k = static_cast<int>(perms.size());
  std::vector<std::vector<int>> mult(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<int> comp(m);
      for (int x = 0; x < m; ++x) comp[x] = perms[i][perms[j][x]];
      mult[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), comp) - perms.begin());
    }
  return FiniteGroup(std::move(mult));
}

std::vector<int> symmetric_group_permutation(int m, int element) {
  const auto perms = all_permutations(m);
  if (element < 0 || element >= static_cast<int>(perms.size()))
    throw InvalidArgument("symmetric_group_permutation: element out of range");
  return perms[element];
}

}  // namespace cstardyn
