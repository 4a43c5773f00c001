#include "doctest.h"

#include "cstardyn/core/errors.hpp"
#include "cstardyn/core/linalg.hpp"
#include "cstardyn/crossed/crossed_product.hpp"
#include "random_objects.hpp"

using namespace cstardyn;

namespace {

CVector vec(const CMatrix& m) { return Eigen::Map<const CVector>(m.data(), m.size()); }

// Orthonormal basis (columns of vectorised matrices) of the unital algebra
// generated by the given matrices, by closing the span under products.
CMatrix closure_basis(const std::vector<CMatrix>& gens) {
  const int d = static_cast<int>(gens.front().rows());
  std::vector<CMatrix> span{CMatrix::Identity(d, d)};
  CMatrix q = vec(span.front()).normalized();
  auto try_add = [&](const CMatrix& m) {
    const CVector v = vec(m);
    const CVector r = v - q * (q.adjoint() * v);
    if (r.norm() <= 1e-9 * (1.0 + v.norm())) return false;
    q.conservativeResize(Eigen::NoChange, q.cols() + 1);
    q.col(q.cols() - 1) = r.normalized();
    span.push_back(m);
    return true;
  };
  for (const auto& g : gens) try_add(g);
  for (std::size_t i = 0; i < span.size(); ++i)
    for (const auto& g : gens) try_add(span[i] * g);
  return q;
}

// Dimension of {c in span : c commutes with every generator}.
int closure_center_dimension(const std::vector<CMatrix>& gens) {
  const CMatrix q = closure_basis(gens);
  const int d = static_cast<int>(gens.front().rows());
  const int m = static_cast<int>(q.cols());
  CMatrix eqs(static_cast<Eigen::Index>(gens.size()) * d * d, m);
  for (int c = 0; c < m; ++c) {
    const CMatrix b = Eigen::Map<const CMatrix>(q.col(c).data(), d, d);
    for (std::size_t i = 0; i < gens.size(); ++i)
      eqs.block(static_cast<Eigen::Index>(i) * d * d, c, d * d, 1) = vec(gens[i] * b - b * gens[i]);
  }
  return m - numerical_rank(eqs);
}

std::vector<CMatrix> generators(const CovariantRep& rep) {
  std::vector<CMatrix> gens = rep.pi;
  gens.insert(gens.end(), rep.u.begin(), rep.u.end());
  return gens;
}

CoefficientFunction random_function(testing::Rng& rng, const System& sys) {
  CoefficientFunction f;
  for (int g = 0; g < sys.order(); ++g) f.push_back(testing::random_vector(rng, sys.n()));
  return f;
}

}  // namespace

TEST_SUITE("crossed") {
  TEST_CASE("regular covariant representation") {
    testing::Rng rng(71);
    for (int trial = 0; trial < 20; ++trial) {
      const System sys = trial < 4 ? (trial % 2 ? System::shift_cyclic(trial + 2) : System::trivial_cyclic(trial + 2))
                                   : testing::random_system(rng, 5);
      const CovariantRep rep = regular_covariant(sys);
      CHECK(rep.dim == sys.n() * sys.order());
      CHECK(rep.covariance_residual() == 0.0);
      CHECK(rep.representation_residual() == 0.0);
    }
  }

  TEST_CASE("dimension matches the closure oracle") {
    testing::Rng rng(72);
    for (int trial = 0; trial < 12; ++trial) {
      const System sys = testing::random_system(rng, 4);
      const ReducedCrossedProduct rcp = build_reduced(sys);
      CHECK(rcp.dimension() == sys.n() * sys.order());
      CHECK(closure_basis(generators(rcp.regular)).cols() == rcp.dimension());
    }
    for (int n = 2; n <= 3; ++n) {
      CHECK(build_reduced(System::trivial_cyclic(n)).dimension() == n * n);
      CHECK(build_reduced(System::shift_cyclic(n)).dimension() == n * n);
    }
  }

  TEST_CASE("structure constants") {
    const System sys = System::shift_cyclic(3);
    const ReducedCrossedProduct rcp = build_reduced(sys);
    for (int a = 0; a < rcp.dimension(); ++a) {
      CHECK(max_abs(rcp.basis[rcp.adjoint_index[a]] - rcp.basis[a].adjoint()) == 0.0);
      for (int b = 0; b < rcp.dimension(); ++b) {
        const CMatrix expected = rcp.product_coeff[a][b] * rcp.basis[rcp.product_index[a][b]];
        CHECK(max_abs(rcp.basis[a] * rcp.basis[b] - expected) == 0.0);
      }
    }
    // b_{j,g} b_{k,h} = delta_{j, g.k} b_{j, gh}
    for (int j = 0; j < 3; ++j)
      for (int g = 0; g < 3; ++g)
        for (int k = 0; k < 3; ++k)
          for (int h = 0; h < 3; ++h) {
            const int a = rcp.basis_index(j, g), b = rcp.basis_index(k, h);
            const bool nonzero = j == (g + k) % 3;
            CHECK(rcp.product_coeff[a][b] == (nonzero ? 1.0 : 0.0));
            if (nonzero) CHECK(rcp.product_index[a][b] == rcp.basis_index(j, (g + h) % 3));
          }
  }

  TEST_CASE("integrated form is a *-homomorphism of the twisted convolution algebra") {
    testing::Rng rng(73);
    for (int trial = 0; trial < 15; ++trial) {
      const System sys = testing::random_system(rng, 4);
      const CovariantRep rep = regular_covariant(sys);
      const CoefficientFunction f1 = random_function(rng, sys), f2 = random_function(rng, sys);
      const CMatrix l1 = integrated_form(rep, f1), l2 = integrated_form(rep, f2);
      CHECK(max_abs(integrated_form(rep, convolve(sys, f1, f2)) - l1 * l2) <= 1e-10);
      CHECK(max_abs(integrated_form(rep, involution(sys, f1)) - l1.adjoint()) <= 1e-12);
      const CoefficientFunction back = involution(sys, involution(sys, f1));
      for (int g = 0; g < sys.order(); ++g) CHECK((back[g] - f1[g]).norm() <= 1e-12);
    }
  }

  TEST_CASE("Fourier coefficients") {
    testing::Rng rng(74);
    const System sys = System::shift_cyclic(3);
    const ReducedCrossedProduct rcp = build_reduced(sys);
    CHECK(max_abs(integrated_form(rcp.regular, basis_function(sys, 2, 1)) - rcp.basis[rcp.basis_index(2, 1)]) == 0.0);
    for (int trial = 0; trial < 10; ++trial) {
      const CoefficientFunction f = random_function(rng, sys);
      const CMatrix m = integrated_form(rcp.regular, f);
      const CoefficientFunction back = fourier_coefficients(rcp, m);
      for (int g = 0; g < 3; ++g) CHECK((back[g] - f[g]).norm() <= 1e-10);
      CHECK(max_abs(rcp.element(to_coordinates(rcp, f)) - m) <= 1e-12);
    }
    try {
      fourier_coefficients(rcp, testing::random_matrix(rng, 9, 9));
      FAIL("expected NotInAlgebra");
    } catch (const NotInAlgebra& e) {
      CHECK(e.residual() > 1e-3);
    }
  }

  TEST_CASE("induced maps") {
    testing::Rng rng(75);
    const System sys = System::shift_cyclic(2);
    const ReducedCrossedProduct rcp = build_reduced(sys);
    CHECK(max_abs(induced_map(rcp, Multiplier::unit(sys)) - CMatrix::Identity(4, 4)) == 0.0);
    const Multiplier t = testing::random_multiplier(rng, sys), s = testing::random_multiplier(rng, sys);
    CHECK(max_abs(induced_map(rcp, multiply(t, s)) - induced_map(rcp, t) * induced_map(rcp, s)) <= 1e-12);
    // Lambda(f) -> Lambda(T.f) on a random f.
    const CoefficientFunction f = random_function(rng, sys);
    CoefficientFunction tf;
    for (int g = 0; g < 2; ++g) tf.push_back(t.at(g) * f[g]);
    CHECK((induced_map(rcp, t) * to_coordinates(rcp, f) - to_coordinates(rcp, tf)).norm() <= 1e-12);
  }

  TEST_CASE("complete positivity agrees with positive definiteness") {
    testing::Rng rng(76);
    const std::vector<System> systems{System::trivial_cyclic(2), System::shift_cyclic(2), System::shift_cyclic(3)};
    for (const System& sys : systems) {
      const ReducedCrossedProduct rcp = build_reduced(sys);
      for (int i = 0; i < 15; ++i) {
        const Multiplier t = testing::random_test_multiplier(rng, sys, i);
        CHECK(is_completely_positive(rcp, induced_map(rcp, t)).positive == is_positive_definite(t).positive);
      }
    }
    const ReducedCrossedProduct rcp = build_reduced(System::trivial_cyclic(2));
    CHECK(is_completely_positive(rcp, CMatrix::Identity(4, 4)).positive);
    CHECK_FALSE(is_completely_positive(rcp, -CMatrix::Identity(4, 4)).positive);
  }

  TEST_CASE("centres of the examples") {
    for (int n = 2; n <= 3; ++n) {
      const ReducedCrossedProduct omega = build_reduced(System::trivial_cyclic(n));
      CHECK(is_commutative(omega));
      CHECK(center_dimension(omega) == n * n);
      const ReducedCrossedProduct sigma = build_reduced(System::shift_cyclic(n));
      CHECK(center_dimension(sigma) == 1);
      CHECK_FALSE(is_commutative(sigma));
      CHECK(closure_center_dimension(generators(sigma.regular)) == 1);
      CHECK(closure_center_dimension(generators(omega.regular)) == n * n);
    }
  }

  TEST_CASE("centre dimension matches the closure oracle on random systems") {
    testing::Rng rng(77);
    for (int trial = 0; trial < 12; ++trial) {
      const System sys = testing::random_system(rng, 4);
      const ReducedCrossedProduct rcp = build_reduced(sys);
      CHECK(center_dimension(rcp) == closure_center_dimension(generators(rcp.regular)));
    }
  }
}
