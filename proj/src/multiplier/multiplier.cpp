#include "cstardyn/multiplier/multiplier.hpp"

#include <algorithm>
#include <string>

#include "cstardyn/core/errors.hpp"
#include "cstardyn/core/linalg.hpp"

namespace cstardyn {

Multiplier::Multiplier(System system, std::vector<CMatrix> mats) : system_(std::move(system)), mats_(std::move(mats)) {
  const int n = system_.n();
  if (static_cast<int>(mats_.size()) != system_.order())
    throw InvalidArgument("Multiplier: need one matrix per group element");
  for (const auto& m : mats_) {
    if (m.rows() != n || m.cols() != n) throw InvalidArgument("Multiplier: matrix is not n x n");
    if (!all_finite(m)) throw InvalidArgument("Multiplier: non-finite entry");
  }
}

Multiplier Multiplier::zero(const System& system) {
  return Multiplier(system, std::vector<CMatrix>(system.order(), CMatrix::Zero(system.n(), system.n())));
}

Multiplier Multiplier::unit(const System& system) {
  return Multiplier(system, std::vector<CMatrix>(system.order(), CMatrix::Identity(system.n(), system.n())));
}

Multiplier Multiplier::identity_supported(const System& system) {
  Multiplier out = zero(system);
  out.mats_[system.group().identity()] = CMatrix::Identity(system.n(), system.n());
  return out;
}

CVector Multiplier::apply(int g, const CVector& a) const {
  if (a.size() != system_.n()) throw InvalidArgument("Multiplier::apply: algebra element has wrong length");
  return mats_[g] * a;
}

std::vector<int> Multiplier::support(double tol) const {
  std::vector<int> out;
  for (int g = 0; g < system_.order(); ++g)
    if (max_abs(mats_[g]) > tol) out.push_back(g);
  return out;
}

double Multiplier::distance(const Multiplier& other) const {
  if (!(system_ == other.system_)) throw InvalidArgument("Multiplier::distance: different systems");
  double d = 0.0;
  for (int g = 0; g < system_.order(); ++g) d = std::max(d, max_abs(mats_[g] - other.mats_[g]));
  return d;
}

Multiplier Multiplier::operator+(const Multiplier& other) const {
  if (!(system_ == other.system_)) throw InvalidArgument("Multiplier: system mismatch");
  std::vector<CMatrix> out(mats_.size());
  for (std::size_t g = 0; g < mats_.size(); ++g) out[g] = mats_[g] + other.mats_[g];
  return Multiplier(system_, std::move(out));
}

Multiplier Multiplier::operator-(const Multiplier& other) const { return *this + other * Complex(-1.0); }

Multiplier Multiplier::operator*(Complex s) const {
  std::vector<CMatrix> out(mats_.size());
  for (std::size_t g = 0; g < mats_.size(); ++g) out[g] = mats_[g] * s;
  return Multiplier(system_, std::move(out));
}

Multiplier coefficient(const EquivariantRep& rep, const ModuleVector& xi, const ModuleVector& eta) {
  if (!(xi.module() == rep.module()) || !(eta.module() == rep.module()))
    throw InvalidArgument("coefficient: vectors do not belong to the representation's module");
  const System& sys = rep.system();
  const int n = sys.n();
  std::vector<CMatrix> mats;
  for (int g = 0; g < sys.order(); ++g) {
    const ModuleVector moved = rep.apply_v(g, eta);
    CMatrix m(n, n);
    for (int j = 0; j < n; ++j) m.col(j) = inner_product(xi, rep.rho(j).apply(moved));
    mats.push_back(std::move(m));
  }
  return Multiplier(sys, std::move(mats));
}

Multiplier multiply(const Multiplier& t, const Multiplier& s) {
  if (!(t.system() == s.system())) throw InvalidArgument("multiply: multipliers of different systems");
  std::vector<CMatrix> out;
  for (int g = 0; g < t.system().order(); ++g) out.push_back(t.at(g) * s.at(g));
  return Multiplier(t.system(), std::move(out));
}

Multiplier from_group_function(const System& system, std::span<const Complex> mu) {
  if (static_cast<int>(mu.size()) != system.order())
    throw InvalidArgument("from_group_function: need one value per group element");
  std::vector<CMatrix> mats;
  for (int g = 0; g < system.order(); ++g) mats.push_back(mu[g] * CMatrix::Identity(system.n(), system.n()));
  return Multiplier(system, std::move(mats));
}

int span_dimension(std::span<const Multiplier> ms, double tol) {
  if (ms.empty()) return 0;
  const System& sys = ms.front().system();
  const int block = sys.n() * sys.n();
  CMatrix stacked(block * sys.order(), static_cast<Eigen::Index>(ms.size()));
  for (std::size_t c = 0; c < ms.size(); ++c) {
    if (!(ms[c].system() == sys)) throw InvalidArgument("span_dimension: multipliers of different systems");
    for (int g = 0; g < sys.order(); ++g)
      stacked.block(g * block, static_cast<Eigen::Index>(c), block, 1) =
          Eigen::Map<const CVector>(ms[c].at(g).data(), block);
  }
  return numerical_rank(stacked, tol);
}

Multiplier matrix_unit_multiplier(const System& system, int k, int l, int p) {
  const int n = system.n();
  if (k < 0 || k >= n || l < 0 || l >= n || p < 0 || p >= system.order())
    throw InvalidArgument("matrix_unit_multiplier: index out of range");
  Multiplier out = Multiplier::zero(system);
  std::vector<CMatrix> mats = out.mats();
  mats[p](k, l) = 1.0;
  return Multiplier(system, std::move(mats));
}

double sup_operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

NormBounds norm_bounds(const Multiplier& t, std::span<const Realization> realizations, double tol) {
  NormBounds out;
  for (const auto& m : t.mats()) out.lower = std::max(out.lower, sup_operator_norm(m));
  for (std::size_t i = 0; i < realizations.size(); ++i) {
    const auto& r = realizations[i];
    if (!(r.rep.system() == t.system()))
      throw InvalidArgument("norm_bounds: realization " + std::to_string(i) + " is for a different system");
    const double err = coefficient(r.rep, r.xi, r.eta).distance(t);
    if (err > tol * (1.0 + out.lower))
      throw InvalidArgument("norm_bounds: realization " + std::to_string(i) + " does not realize the multiplier");
    out.upper = std::min(out.upper, module_norm(r.xi) * module_norm(r.eta));
  }
  out.consistent = out.lower <= out.upper + tol;
  return out;
}

}  // namespace cstardyn
