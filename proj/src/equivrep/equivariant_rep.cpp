#include "cstardyn/equivrep/equivariant_rep.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cstardyn/core/errors.hpp"
#include "cstardyn/core/linalg.hpp"

namespace cstardyn {

CMatrix FiberPermutingMap::dense(const SectionalModule& module) const {
  const int total = module.total_dim();
  CMatrix out = CMatrix::Zero(total, total);
  for (int x = 0; x < module.base_size(); ++x) {
    const int s = source[x];
    out.block(module.offset(x), module.offset(s), module.dim(x), module.dim(s)) = blocks[x];
  }
  return out;
}

FiberPermutingMap FiberPermutingMap::from_dense(const SectionalModule& module, std::vector<int> source,
                                                const CMatrix& dense, double tol) {
  FiberPermutingMap out{std::move(source), {}};
  CMatrix rest = dense;
  for (int x = 0; x < module.base_size(); ++x) {
    const int s = out.source[x];
    out.blocks.push_back(dense.block(module.offset(x), module.offset(s), module.dim(x), module.dim(s)));
    rest.block(module.offset(x), module.offset(s), module.dim(x), module.dim(s)).setZero();
  }
  if (max_abs(rest) > tol * (1.0 + max_abs(dense)))
    throw InvalidArgument("FiberPermutingMap::from_dense: map does not move fibres along the given permutation");
  return out;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
}

double VerificationReport::residual(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c.residual;
  throw InvalidArgument("VerificationReport: no check named " + name);
}

void VerificationReport::add(std::string name, double residual, double threshold) {
  checks.push_back({std::move(name), residual, residual <= threshold});
}

EquivariantRep::EquivariantRep(System system, SectionalModule module, std::vector<ModuleOperator> rho,
                               std::vector<FiberPermutingMap> v)
    : system_(std::move(system)), module_(std::move(module)), rho_(std::move(rho)), v_(std::move(v)) {
  const int n = system_.n();
  if (module_.base_size() != n) throw InvalidArgument("EquivariantRep: module base does not match the system");
  if (static_cast<int>(rho_.size()) != n) throw InvalidArgument("EquivariantRep: need one rho generator per point");
  for (const auto& op : rho_)
    if (!(op.module() == module_)) throw InvalidArgument("EquivariantRep: rho generator on a different module");
  if (static_cast<int>(v_.size()) != system_.order())
    throw InvalidArgument("EquivariantRep: need one v map per group element");
  for (const auto& map : v_) {
    if (static_cast<int>(map.source.size()) != n || static_cast<int>(map.blocks.size()) != n)
      throw InvalidArgument("EquivariantRep: v map has wrong length");
    for (int x = 0; x < n; ++x) {
      const int s = map.source[x];
      if (s < 0 || s >= n) throw InvalidArgument("EquivariantRep: v source point out of range");
      if (map.blocks[x].rows() != module_.dim(x) || map.blocks[x].cols() != module_.dim(s))
        throw InvalidArgument("EquivariantRep: v block has wrong shape");
    }
  }
}

CMatrix EquivariantRep::rho_dense(const CVector& a) const {
  if (a.size() != system_.n()) throw InvalidArgument("rho_dense: algebra element has wrong length");
  CMatrix out = CMatrix::Zero(module_.total_dim(), module_.total_dim());
  for (int k = 0; k < system_.n(); ++k) out += a(k) * rho_[k].dense();
  return out;
}

ModuleVector EquivariantRep::apply_rho(const CVector& a, const ModuleVector& xi) const {
  if (!(xi.module() == module_)) throw InvalidArgument("apply_rho: vector not in the module");
  return ModuleVector(module_, rho_dense(a) * xi.coords());
}

ModuleVector EquivariantRep::apply_v(int g, const ModuleVector& xi) const {
  if (!(xi.module() == module_)) throw InvalidArgument("apply_v: vector not in the module");
  CVector out(module_.total_dim());
  const auto& map = v_[g];
  for (int x = 0; x < module_.base_size(); ++x)
    out.segment(module_.offset(x), module_.dim(x)) = map.blocks[x] * xi.component(map.source[x]);
  return ModuleVector(module_, std::move(out));
}

VerificationReport verify_equivariant(const EquivariantRep& rep, double tol) {
  const System& sys = rep.system();
  const SectionalModule& module = rep.module();
  const int n = sys.n();
  const int order = sys.order();
  const int total = module.total_dim();
  const CMatrix id = CMatrix::Identity(total, total);

  std::vector<CMatrix> rho(n), v(order);
  double scale = 1.0;
  for (int k = 0; k < n; ++k) {
    rho[k] = rep.rho(k).dense();
    scale = std::max(scale, max_abs(rho[k]));
  }
  for (int g = 0; g < order; ++g) {
    v[g] = rep.v_dense(g);
    scale = std::max(scale, max_abs(v[g]));
  }
  const double threshold = tol * scale * scale;

  VerificationReport report;
  double unital = 0.0, mult = 0.0, adj = 0.0;
  {
    CMatrix sum = CMatrix::Zero(total, total);
    for (int k = 0; k < n; ++k) {
      sum += rho[k];
      adj = std::max(adj, max_abs(rho[k] - rho[k].adjoint()));
      for (int l = 0; l < n; ++l)
        mult = std::max(mult, max_abs(rho[k] * rho[l] - (k == l ? rho[k] : CMatrix::Zero(total, total))));
    }
    unital = max_abs(sum - id);
  }
  report.add("rho_unital", unital, threshold);
  report.add("rho_multiplicative", mult, threshold);
  report.add("rho_selfadjoint", adj, threshold);

  report.add("v_identity", max_abs(v[sys.group().identity()] - id), threshold);
  double hom = 0.0;
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) hom = std::max(hom, max_abs(v[sys.group().mul(g, h)] - v[g] * v[h]));
  report.add("v_homomorphism", hom, threshold);

  const auto& action = sys.action();
  double covariance = 0.0, inner = 0.0, module_action = 0.0, isometry = 0.0;
  std::vector<CMatrix> fiber_proj(n);
  for (int x = 0; x < n; ++x) fiber_proj[x] = fiber_projection(module, x);
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  std::vector<CVector> probes;
  for (int i = 0; i < total; ++i) probes.push_back(CVector::Unit(total, i));
  for (int r = 0; r < 4 && total > 0; ++r) {
    CVector p(total);
    for (int i = 0; i < total; ++i) p(i) = Complex(normal(rng), normal(rng));
    probes.push_back(p);
  }
  for (int g = 0; g < order; ++g) {
    for (int k = 0; k < n; ++k) {
      const int gk = action.act(g, k);  // alpha_g(e_k) = e_{g.k}
      covariance = std::max(covariance, max_abs(rho[gk] * v[g] - v[g] * rho[k]));
      const CMatrix rk = right_action_matrix(module, unit_vector(n, k));
      const CMatrix rgk = right_action_matrix(module, unit_vector(n, gk));
      module_action = std::max(module_action, max_abs(v[g] * rk - rgk * v[g]));
    }
    for (int x = 0; x < n; ++x)
      inner = std::max(inner, max_abs(v[g].adjoint() * fiber_proj[x] * v[g] - fiber_proj[action.act_inverse(g, x)]));
    for (const auto& p : probes) {
      const double before = module_norm(ModuleVector(module, p));
      const double after = module_norm(ModuleVector(module, v[g] * p));
      isometry = std::max(isometry, std::abs(after - before) / (1.0 + before));
    }
  }
  report.add("covariance", covariance, threshold);
  report.add("inner_product", inner, threshold);
  report.add("module_action", module_action, threshold);
  report.add("isometry", isometry, threshold);
  return report;
}

EquivariantRep trivial_rep(const System& system) {
  const int n = system.n();
  const SectionalModule module = SectionalModule::algebra(n);
  std::vector<ModuleOperator> rho;
  for (int k = 0; k < n; ++k) {
    std::vector<CMatrix> blocks;
    for (int x = 0; x < n; ++x) blocks.push_back(CMatrix::Constant(1, 1, x == k ? 1.0 : 0.0));
    rho.emplace_back(module, std::move(blocks));
  }
  std::vector<FiberPermutingMap> v;
  for (int g = 0; g < system.order(); ++g) {
    FiberPermutingMap map;
    for (int x = 0; x < n; ++x) {
      map.source.push_back(system.action().act_inverse(g, x));
      map.blocks.push_back(CMatrix::Identity(1, 1));
    }
    v.push_back(std::move(map));
  }
  return EquivariantRep(system, module, std::move(rho), std::move(v));
}

EquivariantRep regular_rep(const EquivariantRep& rep) {
  const System& sys = rep.system();
  const int n = sys.n();
  const int order = sys.order();
  const SectionalModule& base = rep.module();
  std::vector<int> dims(n);
  for (int x = 0; x < n; ++x) dims[x] = order * base.dim(x);
  const SectionalModule module(dims);

  std::vector<ModuleOperator> rho;
  const CMatrix copies = CMatrix::Identity(order, order);
  for (int k = 0; k < n; ++k) {
    std::vector<CMatrix> blocks;
    for (int x = 0; x < n; ++x) blocks.push_back(kron(copies, rep.rho(k).block(x)));
    rho.emplace_back(module, std::move(blocks));
  }
  std::vector<FiberPermutingMap> v;
  for (int g = 0; g < order; ++g) {
    const auto& map = rep.v(g);
    FiberPermutingMap out{map.source, {}};
    for (int x = 0; x < n; ++x) {
      const int s = map.source[x];
      const int dx = base.dim(x), ds = base.dim(s);
      CMatrix block = CMatrix::Zero(order * dx, order * ds);
      for (int h = 0; h < order; ++h) {
        const int from = sys.group().mul(sys.group().inverse(g), h);
        block.block(h * dx, from * ds, dx, ds) = map.blocks[x];
      }
      out.blocks.push_back(std::move(block));
    }
    v.push_back(std::move(out));
  }
  EquivariantRep out(sys, module, std::move(rho), std::move(v));
  out.set_regular_base(base);
  return out;
}

EquivariantRep direct_sum(std::span<const EquivariantRep> reps) {
  if (reps.empty()) throw InvalidArgument("direct_sum: empty list of representations");
  const System& sys = reps.front().system();
  const int n = sys.n();
  std::vector<SectionalModule> modules;
  for (const auto& r : reps) {
    if (!(r.system() == sys)) throw InvalidArgument("direct_sum: representations of different systems");
    modules.push_back(r.module());
  }
  const SectionalModule module = direct_sum(std::span<const SectionalModule>(modules));

  std::vector<ModuleOperator> rho;
  for (int k = 0; k < n; ++k) {
    std::vector<CMatrix> blocks;
    for (int x = 0; x < n; ++x) {
      CMatrix block = CMatrix::Zero(module.dim(x), module.dim(x));
      int o = 0;
      for (const auto& r : reps) {
        const int d = r.module().dim(x);
        block.block(o, o, d, d) = r.rho(k).block(x);
        o += d;
      }
      blocks.push_back(std::move(block));
    }
    rho.emplace_back(module, std::move(blocks));
  }
  std::vector<FiberPermutingMap> v;
  for (int g = 0; g < sys.order(); ++g) {
    FiberPermutingMap out{reps.front().v(g).source, {}};
    for (const auto& r : reps)
      if (r.v(g).source != out.source)
        throw InvalidArgument("direct_sum: summands move fibres along different permutations");
    for (int x = 0; x < n; ++x) {
      const int s = out.source[x];
      CMatrix block = CMatrix::Zero(module.dim(x), module.dim(s));
      int ro = 0, co = 0;
      for (const auto& r : reps) {
        const auto& b = r.v(g).blocks[x];
        block.block(ro, co, b.rows(), b.cols()) = b;
        ro += static_cast<int>(b.rows());
        co += static_cast<int>(b.cols());
      }
      out.blocks.push_back(std::move(block));
    }
    v.push_back(std::move(out));
  }
  return EquivariantRep(sys, module, std::move(rho), std::move(v));
}

namespace {

const SectionalModule& require_regular(const EquivariantRep& regular) {
  if (!regular.regular_base()) throw InvalidArgument("representation is not a regular representation X^G");
  return *regular.regular_base();
}

}  // namespace

ModuleVector restrict_to_copies(const EquivariantRep& regular, const ModuleVector& xi, const std::vector<int>& copies) {
  const SectionalModule& base = require_regular(regular);
  if (!(xi.module() == regular.module())) throw InvalidArgument("restrict_to_copies: vector not in the module");
  const int order = regular.system().order();
  std::vector<bool> keep(order, false);
  for (int h : copies) {
    if (h < 0 || h >= order) throw InvalidArgument("restrict_to_copies: copy index out of range");
    keep[h] = true;
  }
  CVector out = xi.coords();
  const auto& module = regular.module();
  for (int x = 0; x < module.base_size(); ++x)
    for (int h = 0; h < order; ++h)
      if (!keep[h]) out.segment(module.offset(x) + h * base.dim(x), base.dim(x)).setZero();
  return ModuleVector(module, std::move(out));
}

ModuleVector spread_to_copies(const EquivariantRep& regular, const ModuleVector& xi, const std::vector<int>& copies) {
  const SectionalModule& base = require_regular(regular);
  if (!(xi.module() == base)) throw InvalidArgument("spread_to_copies: vector not in the base module");
  const auto& module = regular.module();
  CVector out = CVector::Zero(module.total_dim());
  for (int h : copies) {
    if (h < 0 || h >= regular.system().order()) throw InvalidArgument("spread_to_copies: copy index out of range");
    for (int x = 0; x < module.base_size(); ++x)
      out.segment(module.offset(x) + h * base.dim(x), base.dim(x)) = xi.component(x);
  }
  return ModuleVector(module, std::move(out));
}

}  // namespace cstardyn
