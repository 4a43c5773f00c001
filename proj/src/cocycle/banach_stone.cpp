#include <string>

#include "cstardyn/cocycle/cocycle.hpp"
#include "cstardyn/core/errors.hpp"
#include "cstardyn/core/linalg.hpp"

namespace cstardyn {

BanachStoneForm banach_stone_extract(const CMatrix& v, const SectionalModule& module, double tol) {
  const int n = module.base_size();
  const int total = module.total_dim();
  if (v.rows() != total || v.cols() != total) throw InvalidArgument("banach_stone_extract: matrix has wrong shape");
  const double cutoff = tol * (1.0 + max_abs(v));
  BanachStoneForm form{std::vector<int>(n, -1), std::vector<CMatrix>(n)};
  std::vector<bool> used(n, false);

  for (int y = 0; y < n; ++y) {
    if (module.dim(y) == 0) continue;
    int target = -1;
    for (int x = 0; x < n; ++x) {
      if (max_abs(v.block(module.offset(x), module.offset(y), module.dim(x), module.dim(y))) <= cutoff) continue;
      if (target >= 0)
        throw NotBanachStoneForm("sections at point " + std::to_string(y) + " are mapped onto several fibres");
      target = x;
    }
    if (target < 0) throw NotBanachStoneForm("sections at point " + std::to_string(y) + " are mapped to zero");
    if (form.sigma[target] >= 0)
      throw NotBanachStoneForm("two fibres are mapped onto fibre " + std::to_string(target));
    const CMatrix block = v.block(module.offset(target), module.offset(y), module.dim(target), module.dim(y));
    if (block.rows() != block.cols() ||
        max_abs(block.adjoint() * block - CMatrix::Identity(block.cols(), block.cols())) > tol ||
        max_abs(block * block.adjoint() - CMatrix::Identity(block.rows(), block.rows())) > tol)
      throw NotBanachStoneForm("the map is not isometric on the fibre at point " + std::to_string(y));
    form.sigma[target] = y;
    form.u[target] = block;
    used[y] = true;
  }
  // Zero-dimensional fibres carry no information; pair them in increasing order.
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (form.sigma[x] >= 0) continue;
    if (module.dim(x) > 0) throw NotBanachStoneForm("fibre " + std::to_string(x) + " is not in the range");
    while (next < n && (used[next] || module.dim(next) != 0)) ++next;
    if (next == n) throw NotBanachStoneForm("point map is not a bijection");
    form.sigma[x] = next;
    form.u[x] = CMatrix(0, 0);
    used[next] = true;
  }
  if (max_abs(banach_stone_compose(form, module) - v) > cutoff)
    throw NotBanachStoneForm("the map is not of the form u(x) xi(sigma(x))");
  return form;
}

CMatrix banach_stone_compose(const BanachStoneForm& form, const SectionalModule& module) {
  const int n = module.base_size();
  if (static_cast<int>(form.sigma.size()) != n || static_cast<int>(form.u.size()) != n)
    throw InvalidArgument("banach_stone_compose: form has wrong length");
  FiberPermutingMap map{form.sigma, form.u};
  for (int x = 0; x < n; ++x) {
    const int s = form.sigma[x];
    if (s < 0 || s >= n) throw InvalidArgument("banach_stone_compose: point out of range");
    if (form.u[x].rows() != module.dim(x) || form.u[x].cols() != module.dim(s))
      throw InvalidArgument("banach_stone_compose: block has wrong shape");
  }
  return map.dense(module);
}

}  // namespace cstardyn
