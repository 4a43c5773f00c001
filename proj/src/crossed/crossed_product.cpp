#include "cstardyn/crossed/crossed_product.hpp"

#include <algorithm>
#include <string>

#include "cstardyn/core/errors.hpp"
#include "cstardyn/core/linalg.hpp"

namespace cstardyn {

namespace {

void require_function(const System& system, const CoefficientFunction& f) {
  if (static_cast<int>(f.size()) != system.order())
    throw InvalidArgument("coefficient function needs one value per group element");
  for (const auto& v : f)
    if (v.size() != system.n()) throw InvalidArgument("coefficient function value has wrong length");
}

}  // namespace

CMatrix CovariantRep::pi_of(const CVector& a) const {
  if (a.size() != system.n()) throw InvalidArgument("pi_of: algebra element has wrong length");
  CMatrix out = CMatrix::Zero(dim, dim);
  for (int k = 0; k < system.n(); ++k) out += a(k) * pi[k];
  return out;
}

double CovariantRep::covariance_residual() const {
  double r = 0.0;
  for (int g = 0; g < system.order(); ++g)
    for (int k = 0; k < system.n(); ++k)
      r = std::max(r, max_abs(pi[system.action().act(g, k)] - u[g] * pi[k] * u[g].adjoint()));
  return r;
}

double CovariantRep::representation_residual() const {
  const CMatrix id = CMatrix::Identity(dim, dim);
  CMatrix sum = CMatrix::Zero(dim, dim);
  double r = 0.0;
  for (int k = 0; k < system.n(); ++k) {
    sum += pi[k];
    r = std::max(r, max_abs(pi[k] - pi[k].adjoint()));
    for (int l = 0; l < system.n(); ++l)
      r = std::max(r, max_abs(pi[k] * pi[l] - (k == l ? pi[k] : CMatrix::Zero(dim, dim))));
  }
  r = std::max(r, max_abs(sum - id));
  const auto& group = system.group();
  r = std::max(r, max_abs(u[group.identity()] - id));
  for (int g = 0; g < system.order(); ++g) {
    r = std::max(r, max_abs(u[g].adjoint() * u[g] - id));
    for (int h = 0; h < system.order(); ++h) r = std::max(r, max_abs(u[group.mul(g, h)] - u[g] * u[h]));
  }
  return r;
}

CovariantRep regular_covariant(const System& system) {
  const int n = system.n();
  const int order = system.order();
  const int dim = n * order;
  const auto& group = system.group();
  const auto& action = system.action();
  CovariantRep rep{system, dim, {}, {}};
  for (int j = 0; j < n; ++j) {
    CMatrix p = CMatrix::Zero(dim, dim);
    for (int h = 0; h < order; ++h) p(h * n + action.act_inverse(h, j), h * n + action.act_inverse(h, j)) = 1.0;
    rep.pi.push_back(std::move(p));
  }
  for (int g = 0; g < order; ++g) {
    CMatrix l = CMatrix::Zero(dim, dim);
    for (int h = 0; h < order; ++h) {
      const int from = group.mul(group.inverse(g), h);
      for (int x = 0; x < n; ++x) l(h * n + x, from * n + x) = 1.0;
    }
    rep.u.push_back(std::move(l));
  }
  return rep;
}

CMatrix integrated_form(const CovariantRep& rep, const CoefficientFunction& f) {
  require_function(rep.system, f);
  CMatrix out = CMatrix::Zero(rep.dim, rep.dim);
  for (int g = 0; g < rep.system.order(); ++g) out += rep.pi_of(f[g]) * rep.u[g];
  return out;
}

CoefficientFunction convolve(const System& system, const CoefficientFunction& f1, const CoefficientFunction& f2) {
  require_function(system, f1);
  require_function(system, f2);
  const auto& group = system.group();
  CoefficientFunction out(system.order(), CVector::Zero(system.n()));
  for (int g = 0; g < system.order(); ++g)
    for (int h = 0; h < system.order(); ++h)
      out[g] += f1[h].cwiseProduct(act_on_algebra(system.action(), h, f2[group.mul(group.inverse(h), g)]));
  return out;
}

CoefficientFunction involution(const System& system, const CoefficientFunction& f) {
  require_function(system, f);
  CoefficientFunction out;
  for (int g = 0; g < system.order(); ++g)
    out.push_back(act_on_algebra(system.action(), g, f[system.group().inverse(g)]).conjugate());
  return out;
}

CoefficientFunction basis_function(const System& system, int j, int g) {
  if (j < 0 || j >= system.n() || g < 0 || g >= system.order())
    throw InvalidArgument("basis_function: index out of range");
  CoefficientFunction f(system.order(), CVector::Zero(system.n()));
  f[g](j) = 1.0;
  return f;
}

CMatrix ReducedCrossedProduct::element(const CVector& coords) const {
  if (coords.size() != dimension()) throw InvalidArgument("element: coordinate vector has wrong length");
  CMatrix out = CMatrix::Zero(regular.dim, regular.dim);
  for (int a = 0; a < dimension(); ++a) out += coords(a) * basis[a];
  return out;
}

ReducedCrossedProduct build_reduced(const System& system, double tol) {
  const int n = system.n();
  const int order = system.order();
  const auto& group = system.group();
  const auto& action = system.action();
  ReducedCrossedProduct rcp{system, regular_covariant(system), {}, {}, {}, {}};
  for (int g = 0; g < order; ++g)
    for (int j = 0; j < n; ++j) rcp.basis.push_back(rcp.regular.pi[j] * rcp.regular.u[g]);

  const int dim = rcp.dimension();
  rcp.product_index.assign(dim, std::vector<int>(dim, 0));
  rcp.product_coeff.assign(dim, std::vector<double>(dim, 0.0));
  rcp.adjoint_index.assign(dim, 0);
  // b_{j,g} b_{k,h} = delta_{j, g.k} b_{j, gh};  b_{j,g}^* = b_{g^{-1}j, g^{-1}}.
  for (int g = 0; g < order; ++g)
    for (int j = 0; j < n; ++j) {
      const int a = rcp.basis_index(j, g);
      const int gi = group.inverse(g);
      rcp.adjoint_index[a] = rcp.basis_index(action.act(gi, j), gi);
      for (int h = 0; h < order; ++h)
        for (int k = 0; k < n; ++k) {
          const int b = rcp.basis_index(k, h);
          rcp.product_index[a][b] = rcp.basis_index(j, group.mul(g, h));
          rcp.product_coeff[a][b] = j == action.act(g, k) ? 1.0 : 0.0;
        }
    }

  const int ambient = rcp.regular.dim;
  CMatrix stacked(static_cast<Eigen::Index>(ambient) * ambient, dim);
  for (int a = 0; a < dim; ++a)
    stacked.col(a) = Eigen::Map<const CVector>(rcp.basis[a].data(), static_cast<Eigen::Index>(ambient) * ambient);
  if (numerical_rank(stacked, tol) != dim) throw std::runtime_error("build_reduced: basis is not independent");
  double closure = 0.0;
  for (int a = 0; a < dim; ++a) {
    closure = std::max(closure, max_abs(rcp.basis[a].adjoint() - rcp.basis[rcp.adjoint_index[a]]));
    for (int b = 0; b < dim; ++b)
      closure = std::max(closure, max_abs(rcp.basis[a] * rcp.basis[b] -
                                          rcp.product_coeff[a][b] * rcp.basis[rcp.product_index[a][b]]));
  }
  if (closure > tol) throw std::runtime_error("build_reduced: structure constants do not match the products");
  return rcp;
}

CVector to_coordinates(const ReducedCrossedProduct& rcp, const CoefficientFunction& f) {
  require_function(rcp.system, f);
  CVector c(rcp.dimension());
  for (int g = 0; g < rcp.system.order(); ++g)
    for (int j = 0; j < rcp.system.n(); ++j) c(rcp.basis_index(j, g)) = f[g](j);
  return c;
}

CoefficientFunction fourier_coefficients(const ReducedCrossedProduct& rcp, const CMatrix& m, double tol) {
  const int ambient = rcp.regular.dim;
  if (m.rows() != ambient || m.cols() != ambient) throw InvalidArgument("fourier_coefficients: wrong matrix size");
  const Eigen::Index len = static_cast<Eigen::Index>(ambient) * ambient;
  CMatrix stacked(len, rcp.dimension());
  for (int a = 0; a < rcp.dimension(); ++a) stacked.col(a) = Eigen::Map<const CVector>(rcp.basis[a].data(), len);
  const CVector target = Eigen::Map<const CVector>(m.data(), len);
  const CVector c = stacked.colPivHouseholderQr().solve(target);
  const double residual = (stacked * c - target).cwiseAbs().maxCoeff();
  if (residual > tol * (1.0 + max_abs(m)))
    throw NotInAlgebra(residual, "fourier_coefficients: matrix is not in the crossed product (residual " +
                                     std::to_string(residual) + ")");
  CoefficientFunction f(rcp.system.order(), CVector(rcp.system.n()));
  for (int g = 0; g < rcp.system.order(); ++g)
    for (int j = 0; j < rcp.system.n(); ++j) f[g](j) = c(rcp.basis_index(j, g));
  return f;
}

CMatrix induced_map(const ReducedCrossedProduct& rcp, const Multiplier& t) {
  if (!(t.system() == rcp.system)) throw InvalidArgument("induced_map: multiplier of a different system");
  const int n = rcp.system.n();
  CMatrix phi = CMatrix::Zero(rcp.dimension(), rcp.dimension());
  for (int g = 0; g < rcp.system.order(); ++g) phi.block(g * n, g * n, n, n) = t.at(g);
  return phi;
}

PdCertificate is_completely_positive(const ReducedCrossedProduct& rcp, const CMatrix& phi, double tol) {
  const int dim = rcp.dimension();
  if (phi.rows() != dim || phi.cols() != dim)
    throw InvalidArgument("is_completely_positive: map is not given on the algebra's coordinates");
  const int ambient = rcp.regular.dim;
  CMatrix gram(static_cast<Eigen::Index>(dim) * ambient, static_cast<Eigen::Index>(dim) * ambient);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      const int astar = rcp.adjoint_index[a];
      const double c = rcp.product_coeff[astar][b];
      const CMatrix block = c == 0.0 ? CMatrix::Zero(ambient, ambient)
                                     : CMatrix(c * rcp.element(phi.col(rcp.product_index[astar][b])));
      gram.block(static_cast<Eigen::Index>(a) * ambient, static_cast<Eigen::Index>(b) * ambient, ambient, ambient) =
          block;
    }
  const PsdCheck check = psd_check(gram, tol);
  PdCertificate cert;
  cert.positive = check.psd;
  cert.min_eigenvalue = check.min_eigenvalue;
  cert.hermitian_residual = check.hermitian_residual;
  if (!check.psd) {
    PdWitness w;
    w.eigenvector = check.eigenvector;
    w.eigenvalue = check.min_eigenvalue;
    cert.witness = std::move(w);
  }
  return cert;
}

int center_dimension(const ReducedCrossedProduct& rcp, double tol) {
  const int dim = rcp.dimension();
  // Column a: coordinates of [b_a, b_b] for every b, stacked.
  CMatrix eqs = CMatrix::Zero(static_cast<Eigen::Index>(dim) * dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      const Eigen::Index row = static_cast<Eigen::Index>(b) * dim;
      eqs(row + rcp.product_index[a][b], a) += rcp.product_coeff[a][b];
      eqs(row + rcp.product_index[b][a], a) -= rcp.product_coeff[b][a];
    }
  return dim - numerical_rank(eqs, tol);
}

bool is_commutative(const ReducedCrossedProduct& rcp, double tol) { return center_dimension(rcp, tol) == rcp.dimension(); }

}  // namespace cstardyn
