#include "cstardyn/hilbmod/sectional_module.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cstardyn/core/errors.hpp"
#include "cstardyn/core/linalg.hpp"

namespace cstardyn {

SectionalModule::SectionalModule(std::vector<int> fiber_dims) : dims_(std::move(fiber_dims)) {
  if (dims_.empty()) throw InvalidArgument("SectionalModule: base must have at least one point");
  offsets_.assign(dims_.size() + 1, 0);
  for (std::size_t x = 0; x < dims_.size(); ++x) {
    if (dims_[x] < 0) throw InvalidArgument("SectionalModule: negative fibre dimension");
    offsets_[x + 1] = offsets_[x] + dims_[x];
  }
}

SectionalModule SectionalModule::algebra(int n) { return SectionalModule(std::vector<int>(n, 1)); }

int SectionalModule::fiber_of(int coordinate) const {
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), coordinate);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

ModuleVector::ModuleVector(SectionalModule module, CVector coords) : module_(std::move(module)), coords_(std::move(coords)) {
  if (coords_.size() != module_.total_dim()) throw InvalidArgument("ModuleVector: coordinate count does not match module");
}

ModuleVector ModuleVector::zero(const SectionalModule& module) {
  return ModuleVector(module, CVector::Zero(module.total_dim()));
}

ModuleVector ModuleVector::from_components(const SectionalModule& module, const std::vector<CVector>& components) {
  if (static_cast<int>(components.size()) != module.base_size())
    throw InvalidArgument("ModuleVector: need one component per fibre");
  CVector coords(module.total_dim());
  for (int x = 0; x < module.base_size(); ++x) {
    if (components[x].size() != module.dim(x))
      throw InvalidArgument("ModuleVector: component " + std::to_string(x) + " has wrong length");
    coords.segment(module.offset(x), module.dim(x)) = components[x];
  }
  return ModuleVector(module, std::move(coords));
}

ModuleVector ModuleVector::basis(const SectionalModule& module, int coordinate) {
  CVector coords = CVector::Zero(module.total_dim());
  coords(coordinate) = 1.0;
  return ModuleVector(module, std::move(coords));
}

ModuleVector ModuleVector::right_act(const CVector& a) const {
  if (a.size() != module_.base_size()) throw InvalidArgument("right_act: algebra element has wrong length");
  CVector out = coords_;
  for (int x = 0; x < module_.base_size(); ++x) out.segment(module_.offset(x), module_.dim(x)) *= a(x);
  return ModuleVector(module_, std::move(out));
}

ModuleVector ModuleVector::operator+(const ModuleVector& other) const {
  if (!(module_ == other.module_)) throw InvalidArgument("ModuleVector: module mismatch");
  return ModuleVector(module_, coords_ + other.coords_);
}

ModuleVector ModuleVector::operator*(Complex s) const { return ModuleVector(module_, coords_ * s); }

ModuleOperator::ModuleOperator(SectionalModule module, std::vector<CMatrix> blocks)
    : module_(std::move(module)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != module_.base_size())
    throw InvalidArgument("ModuleOperator: need one block per fibre");
  for (int x = 0; x < module_.base_size(); ++x)
    if (blocks_[x].rows() != module_.dim(x) || blocks_[x].cols() != module_.dim(x))
      throw InvalidArgument("ModuleOperator: block " + std::to_string(x) + " has wrong shape");
}

ModuleOperator ModuleOperator::identity(const SectionalModule& module) {
  std::vector<CMatrix> blocks;
  for (int x = 0; x < module.base_size(); ++x) blocks.push_back(CMatrix::Identity(module.dim(x), module.dim(x)));
  return ModuleOperator(module, std::move(blocks));
}

ModuleOperator ModuleOperator::zero(const SectionalModule& module) {
  std::vector<CMatrix> blocks;
  for (int x = 0; x < module.base_size(); ++x) blocks.push_back(CMatrix::Zero(module.dim(x), module.dim(x)));
  return ModuleOperator(module, std::move(blocks));
}

ModuleOperator ModuleOperator::from_dense(const SectionalModule& module, const CMatrix& dense, double tol) {
  const int total = module.total_dim();
  if (dense.rows() != total || dense.cols() != total)
    throw InvalidArgument("ModuleOperator::from_dense: shape does not match module");
  CMatrix rest = dense;
  std::vector<CMatrix> blocks;
  for (int x = 0; x < module.base_size(); ++x) {
    const int o = module.offset(x), d = module.dim(x);
    blocks.push_back(dense.block(o, o, d, d));
    rest.block(o, o, d, d).setZero();
  }
  if (max_abs(rest) > tol * (1.0 + max_abs(dense)))
    throw InvalidArgument("ModuleOperator::from_dense: operator is not fibre-preserving");
  return ModuleOperator(module, std::move(blocks));
}

CMatrix ModuleOperator::dense() const {
  const int total = module_.total_dim();
  CMatrix out = CMatrix::Zero(total, total);
  for (int x = 0; x < module_.base_size(); ++x)
    out.block(module_.offset(x), module_.offset(x), module_.dim(x), module_.dim(x)) = blocks_[x];
  return out;
}

ModuleVector ModuleOperator::apply(const ModuleVector& v) const {
  if (!(v.module() == module_)) throw InvalidArgument("ModuleOperator::apply: module mismatch");
  CVector out(module_.total_dim());
  for (int x = 0; x < module_.base_size(); ++x)
    out.segment(module_.offset(x), module_.dim(x)) = blocks_[x] * v.component(x);
  return ModuleVector(module_, std::move(out));
}

CVector inner_product(const ModuleVector& xi, const ModuleVector& eta) {
  if (!(xi.module() == eta.module())) throw InvalidArgument("inner_product: vectors belong to different modules");
  const auto& module = xi.module();
  CVector out(module.base_size());
  for (int x = 0; x < module.base_size(); ++x) out(x) = xi.component(x).dot(eta.component(x));
  return out;
}

double module_norm(const ModuleVector& xi) {
  double best = 0.0;
  for (int x = 0; x < xi.module().base_size(); ++x) best = std::max(best, xi.component(x).squaredNorm());
  return std::sqrt(best);
}

CMatrix right_action_matrix(const SectionalModule& module, const CVector& a) {
  if (a.size() != module.base_size()) throw InvalidArgument("right_action_matrix: algebra element has wrong length");
  CVector diag(module.total_dim());
  for (int x = 0; x < module.base_size(); ++x) diag.segment(module.offset(x), module.dim(x)).setConstant(a(x));
  return diag.asDiagonal();
}

CMatrix fiber_projection(const SectionalModule& module, int x) {
  CMatrix out = CMatrix::Zero(module.total_dim(), module.total_dim());
  out.block(module.offset(x), module.offset(x), module.dim(x), module.dim(x)).setIdentity();
  return out;
}

Sectionalization sectionalize(int dim, const std::vector<CMatrix>& action, const std::vector<CMatrix>& gram,
                              double tol) {
  if (dim < 1) throw InvalidArgument("sectionalize: dimension must be positive");
  const int n = static_cast<int>(action.size());
  if (n < 1 || static_cast<int>(gram.size()) != n)
    throw InvalidArgument("sectionalize: need one action matrix and one Gram component per base point");
  for (int k = 0; k < n; ++k)
    if (action[k].rows() != dim || action[k].cols() != dim || gram[k].rows() != dim || gram[k].cols() != dim)
      throw InvalidArgument("sectionalize: matrix " + std::to_string(k) + " has wrong shape");

  double scale = 1.0;
  for (int k = 0; k < n; ++k) scale = std::max({scale, max_abs(action[k]), max_abs(gram[k])});
  const double threshold = tol * scale;

  const CMatrix id = CMatrix::Identity(dim, dim);
  CMatrix sum = CMatrix::Zero(dim, dim);
  for (int k = 0; k < n; ++k) {
    sum += action[k];
    const double idem = max_abs(action[k] * action[k] - action[k]);
    if (idem > threshold)
      throw NotAModule("idempotent", "sectionalize: action of e_" + std::to_string(k) + " is not idempotent");
    for (int l = 0; l < n; ++l)
      if (l != k && max_abs(action[k] * action[l]) > threshold)
        throw NotAModule("orthogonal", "sectionalize: e_" + std::to_string(k) + " and e_" + std::to_string(l) +
                                           " do not act orthogonally");
  }
  if (max_abs(sum - id) > threshold) throw NotAModule("unital", "sectionalize: the unit does not act as the identity");

  CMatrix total_gram = CMatrix::Zero(dim, dim);
  for (int x = 0; x < n; ++x) {
    const PsdCheck check = psd_check(gram[x], tol);
    if (!check.psd)
      throw NotAModule("positivity", "sectionalize: Gram component " + std::to_string(x) + " is not positive");
    total_gram += gram[x];
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const CMatrix expected = (k == l && l == x) ? gram[x] : CMatrix::Zero(dim, dim);
        if (max_abs(action[k].adjoint() * gram[x] * action[l] - expected) > threshold)
          throw NotAModule("compatibility", "sectionalize: <x.e_k, y.e_l> != e_k <x, y> e_l at (k, l, x) = (" +
                                                std::to_string(k) + ", " + std::to_string(l) + ", " +
                                                std::to_string(x) + ")");
      }
  }
  {
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(0.5 * (total_gram + total_gram.adjoint()));
    if (eig.eigenvalues()(0) <= threshold)
      throw NotAModule("definiteness", "sectionalize: inner product is degenerate");
  }

  std::vector<int> dims(n);
  std::vector<CMatrix> rows(n);
  for (int k = 0; k < n; ++k) {
    const GramFactor factor = factor_gram(gram[k], tol);
    dims[k] = factor.rank();
    rows[k] = factor.quotient * action[k];
  }
  Sectionalization out{SectionalModule(dims), CMatrix(), 0.0};
  out.identification.resize(out.module.total_dim(), dim);
  for (int k = 0; k < n; ++k) {
    out.identification.middleRows(out.module.offset(k), dims[k]) = rows[k];
    out.gram_residual = std::max(out.gram_residual, max_abs(rows[k].adjoint() * rows[k] - gram[k]));
  }
  return out;
}

SectionalModule direct_sum(std::span<const SectionalModule> modules) {
  if (modules.empty()) throw InvalidArgument("direct_sum: empty list has no base space");
  const int n = modules.front().base_size();
  std::vector<int> dims(n, 0);
  for (const auto& m : modules) {
    if (m.base_size() != n) throw InvalidArgument("direct_sum: modules over different base spaces");
    for (int x = 0; x < n; ++x) dims[x] += m.dim(x);
  }
  return SectionalModule(std::move(dims));
}

CMatrix injection_matrix(std::span<const SectionalModule> modules, int index) {
  const SectionalModule sum = direct_sum(modules);
  const SectionalModule& part = modules[index];
  CMatrix out = CMatrix::Zero(sum.total_dim(), part.total_dim());
  for (int x = 0; x < sum.base_size(); ++x) {
    int shift = 0;
    for (int i = 0; i < index; ++i) shift += modules[i].dim(x);
    out.block(sum.offset(x) + shift, part.offset(x), part.dim(x), part.dim(x)).setIdentity();
  }
  return out;
}

ModuleVector inject(std::span<const SectionalModule> modules, int index, const ModuleVector& v) {
  if (!(v.module() == modules[index])) throw InvalidArgument("inject: vector is not in the chosen summand");
  return ModuleVector(direct_sum(modules), injection_matrix(modules, index) * v.coords());
}

double representation_residual(const std::vector<ModuleOperator>& rho) {
  if (rho.empty()) return 0.0;
  const CMatrix id = CMatrix::Identity(rho.front().module().total_dim(), rho.front().module().total_dim());
  CMatrix sum = CMatrix::Zero(id.rows(), id.cols());
  double residual = 0.0;
  std::vector<CMatrix> dense;
  for (const auto& op : rho) dense.push_back(op.dense());
  for (std::size_t k = 0; k < dense.size(); ++k) {
    sum += dense[k];
    residual = std::max(residual, max_abs(dense[k] * dense[k] - dense[k]));
    residual = std::max(residual, max_abs(dense[k] - dense[k].adjoint()));
    for (std::size_t l = 0; l < dense.size(); ++l)
      if (l != k) residual = std::max(residual, max_abs(dense[k] * dense[l]));
  }
  return std::max(residual, max_abs(sum - id));
}

}  // namespace cstardyn
