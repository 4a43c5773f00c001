#include <cmath>

#include "doctest.h"

#include "cstardyn/core/errors.hpp"
#include "cstardyn/core/group_action.hpp"
#include "cstardyn/core/linalg.hpp"
#include "random_objects.hpp"

using namespace cstardyn;

namespace {

// Independent PSD oracle: a Hermitian matrix is PSD iff every principal
// minor is nonnegative. Determinants by cofactor expansion.
Complex det(const CMatrix& m) {
  const auto n = m.rows();
  if (n == 0) return 1.0;
  if (n == 1) return m(0, 0);
  Complex out = 0.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    CMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = m(r, cc);
    out += (c % 2 == 0 ? 1.0 : -1.0) * m(0, c) * det(minor);
  }
  return out;
}

bool principal_minor_psd(const CMatrix& m) {
  const int n = static_cast<int>(m.rows());
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    CMatrix sub(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = m(idx[a], idx[b]);
    if (det(sub).real() < -1e-9) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("cyclic groups have the expected table") {
    const FiniteGroup z4 = cyclic_group(4);
    CHECK(z4.order() == 4);
    CHECK(z4.identity() == 0);
    CHECK(z4.mul(3, 2) == 1);
    CHECK(z4.inverse(1) == 3);
    CHECK(cyclic_group(1).order() == 1);
    CHECK_THROWS_AS(cyclic_group(0), InvalidArgument);
  }

  TEST_CASE("symmetric group S_3 is nonabelian of order 6") {
    const FiniteGroup s3 = symmetric_group(3);
    CHECK(s3.order() == 6);
    CHECK(s3.identity() == 0);
    bool abelian = true;
    for (int g = 0; g < 6; ++g)
      for (int h = 0; h < 6; ++h) abelian = abelian && s3.mul(g, h) == s3.mul(h, g);
    CHECK_FALSE(abelian);
    // Composition of permutations agrees with the table.
    for (int g = 0; g < 6; ++g)
      for (int h = 0; h < 6; ++h) {
        const auto p = symmetric_group_permutation(3, g), q = symmetric_group_permutation(3, h);
        const auto r = symmetric_group_permutation(3, s3.mul(g, h));
        for (int i = 0; i < 3; ++i) CHECK(r[i] == p[q[i]]);
      }
  }

  TEST_CASE("invalid multiplication tables are rejected") {
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(FiniteGroup({{0, 2}, {1, 0}}), InvalidArgument);
    CHECK_THROWS_AS(FiniteGroup({}), InvalidArgument);
    // Latin square that is not associative.
    CHECK_THROWS_AS(FiniteGroup({{0, 1, 2, 3, 4},
                                 {1, 0, 3, 4, 2},
                                 {2, 4, 0, 1, 3},
                                 {3, 2, 4, 0, 1},
                                 {4, 3, 1, 2, 0}}),
                    InvalidArgument);
  }

  TEST_CASE("group actions validate bijectivity and the homomorphism law") {
    const FiniteGroup z2 = cyclic_group(2);
    CHECK_NOTHROW(GroupAction(z2, FiniteSpace(2), {{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(GroupAction(z2, FiniteSpace(2), {{0, 1}, {0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(GroupAction(z2, FiniteSpace(2), {{1, 0}, {1, 0}}), InvalidArgument);
    const FiniteGroup z3 = cyclic_group(3);
    CHECK_THROWS_AS(GroupAction(z3, FiniteSpace(3), {{0, 1, 2}, {1, 2, 0}, {1, 2, 0}}), InvalidArgument);
    CHECK_THROWS_AS(FiniteSpace(0), InvalidArgument);
  }

  TEST_CASE("shift action and the induced automorphisms") {
    const System sigma3 = System::shift_cyclic(3);
    CHECK(sigma3.action().act(1, 2) == 0);
    CHECK(sigma3.action().act_inverse(1, 0) == 2);
    CVector a(3);
    a << 1.0, 2.0, 3.0;
    const CVector moved = act_on_algebra(sigma3.action(), 1, a);
    // alpha_1(lambda) = (lambda_2, lambda_0, lambda_1)
    CHECK(moved(0) == Complex(3.0));
    CHECK(moved(1) == Complex(1.0));
    CHECK(moved(2) == Complex(2.0));
    // alpha_g(e_k) = e_{g.k}
    CHECK((act_on_algebra(sigma3.action(), 2, unit_vector(3, 0)) - unit_vector(3, 2)).norm() == 0.0);
    const System omega3 = System::trivial_cyclic(3);
    CHECK((act_on_algebra(omega3.action(), 1, a) - a).norm() == 0.0);
  }

  TEST_CASE("psd_check agrees with the principal-minor oracle") {
    testing::Rng rng(11);
    std::uniform_int_distribution<int> size(1, 3);
    for (int trial = 0; trial < 300; ++trial) {
      const int d = size(rng);
      const CMatrix b = testing::random_matrix(rng, d, d);
      CMatrix m = b * b.adjoint();
      if (trial % 2) m -= 0.7 * b.norm() * CMatrix::Identity(d, d) * (trial % 4 == 1 ? 1.0 : 0.05);
      if (trial % 5 == 0) {  // rank deficient
        const CMatrix c = testing::random_matrix(rng, d, 1);
        m = c * c.adjoint();
      }
      CHECK(is_psd(m) == principal_minor_psd(m));
    }
  }

  TEST_CASE("psd_check edge cases") {
    CHECK(is_psd(CMatrix(0, 0)));
    CMatrix m(2, 2);
    m << 1.0, 1.0, 0.0, 1.0;
    const PsdCheck nonhermitian = psd_check(m);
    CHECK_FALSE(nonhermitian.psd);
    CHECK(nonhermitian.hermitian_residual == doctest::Approx(1.0));
    m << 0.0, 1.0, 1.0, 0.0;
    const PsdCheck swap = psd_check(m);
    CHECK_FALSE(swap.psd);
    CHECK(swap.min_eigenvalue == doctest::Approx(-1.0));
    CHECK(std::abs((m * swap.eigenvector + swap.eigenvector).norm()) < 1e-12);
    CHECK_THROWS_AS(psd_check(CMatrix(2, 3)), InvalidArgument);
    CMatrix bad = CMatrix::Identity(2, 2);
    bad(0, 0) = std::nan("");
    CHECK_THROWS_AS(psd_check(bad), InvalidArgument);
  }

  TEST_CASE("rank, null space, polar factor and Gram factorisation") {
    testing::Rng rng(5);
    const CMatrix a = testing::random_matrix(rng, 5, 2) * testing::random_matrix(rng, 2, 4);
    CHECK(numerical_rank(a) == 2);
    const CMatrix ker = null_space(a);
    CHECK(ker.cols() == 2);
    CHECK(max_abs(a * ker) < 1e-10);
    CHECK(max_abs(ker.adjoint() * ker - CMatrix::Identity(2, 2)) < 1e-10);

    const CMatrix u = polar_unitary(testing::random_matrix(rng, 3, 3));
    CHECK(max_abs(u.adjoint() * u - CMatrix::Identity(3, 3)) < 1e-12);
    const CMatrix w = testing::random_unitary(rng, 3);
    CHECK(max_abs(polar_unitary(w) - w) < 1e-12);

    const CMatrix b = testing::random_matrix(rng, 4, 2);
    const CMatrix gram = b * b.adjoint();
    const GramFactor f = factor_gram(gram);
    CHECK(f.rank() == 2);
    CHECK(max_abs(f.quotient.adjoint() * f.quotient - gram) < 1e-10);
    CHECK(max_abs(f.quotient * f.lift - CMatrix::Identity(2, 2)) < 1e-10);

    CHECK(kron(CMatrix::Identity(2, 2), CMatrix::Constant(1, 1, 3.0)).isApprox(3.0 * CMatrix::Identity(2, 2)));
  }

  TEST_CASE("random actions from coset constructions are valid actions") {
    testing::Rng rng(3);
    for (int i = 0; i < 40; ++i) {
      const System sys = testing::random_system(rng);
      CHECK(sys.n() <= 6);
      CHECK(sys.n() >= 1);
    }
  }
}
