#include <algorithm>
#include <set>

#include "doctest.h"

#include "cstardyn/core/errors.hpp"
#include "cstardyn/core/linalg.hpp"
#include "cstardyn/equivrep/constructions.hpp"
#include "cstardyn/multiplier/examples.hpp"
#include "cstardyn/multiplier/trace_cone.hpp"
#include "random_objects.hpp"

using namespace cstardyn;

namespace {

// delta_{p,m} E_{kl} written out entry by entry.
double matrix_unit_entry(int k, int l, int p, int m, int row, int col) {
  return (p == m && row == k && col == l) ? 1.0 : 0.0;
}

Multiplier omega2(const CMatrix& t0, const CMatrix& t1) { return Multiplier(System::trivial_cyclic(2), {t0, t1}); }

}  // namespace

TEST_SUITE("multiplier") {
  TEST_CASE("coefficient of the trivial representation at 1 is the unit multiplier") {
    for (const System& sys : {System::shift_cyclic(3), System::trivial_cyclic(2), System(GroupAction::trivial(symmetric_group(3), 2))}) {
      const EquivariantRep triv = trivial_rep(sys);
      const ModuleVector one(triv.module(), CVector::Ones(sys.n()));
      CHECK(coefficient(triv, one, one).distance(Multiplier::unit(sys)) == 0.0);
    }
  }

  TEST_CASE("matrix-unit coefficients of the Omega_n and Sigma_n examples") {
    for (int n = 2; n <= 3; ++n)
      for (bool sigma : {false, true})
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            for (int p = 0; p < n; ++p) {
              const Realization r = sigma ? sigma_example(n, k, l, p) : omega_example(n, k, l, p);
              CHECK(verify_equivariant(r.rep).passed());
              const Multiplier t = coefficient(r.rep, r.xi, r.eta);
              double dev = 0.0;
              for (int m = 0; m < n; ++m)
                for (int row = 0; row < n; ++row)
                  for (int col = 0; col < n; ++col)
                    dev = std::max(dev, std::abs(t.at(m)(row, col) - matrix_unit_entry(k, l, p, m, row, col)));
              CHECK(dev <= 1e-9);
            }
    CHECK_THROWS_AS(omega_example(1, 0, 0, 0), InvalidArgument);
    CHECK_THROWS_AS(sigma_example(3, 0, 3, 0), InvalidArgument);
  }

  TEST_CASE("coefficient rejects vectors from another module") {
    const Realization r = omega_example(2, 0, 0, 0);
    CHECK_THROWS_AS(coefficient(r.rep, ModuleVector::zero(SectionalModule({1, 1})), r.eta), InvalidArgument);
  }

  TEST_CASE("positive definiteness: worked cases") {
    CHECK(is_positive_definite(Multiplier::unit(System::shift_cyclic(3))).positive);
    const Multiplier off = omega2(CMatrix::Zero(2, 2), CMatrix::Identity(2, 2));
    const PdCertificate c = is_positive_definite(off);
    CHECK_FALSE(c.positive);
    REQUIRE(c.witness.has_value());
    CMatrix expected(2, 2);
    expected << 0, 1, 1, 0;
    CHECK(max_abs(pd_kernel_matrix(off, c.witness->x, c.witness->k) - expected) == 0.0);
    CHECK(c.min_eigenvalue == doctest::Approx(-1.0));

    const Multiplier sign = omega2(CMatrix::Identity(2, 2), -CMatrix::Identity(2, 2));
    CHECK(is_positive_definite(sign).positive);
    expected << 1, -1, -1, 1;
    CHECK(max_abs(pd_kernel_matrix(sign, 0, 0) - expected) == 0.0);
  }

  TEST_CASE("sampled definition agrees on the worked cases") {
    const Multiplier off = omega2(CMatrix::Zero(2, 2), CMatrix::Identity(2, 2));
    const Multiplier sign = omega2(CMatrix::Identity(2, 2), -CMatrix::Identity(2, 2));
    CHECK(pd_sample_oracle(Multiplier::unit(System::shift_cyclic(2)), 1000, 1).positive);
    CHECK(pd_sample_oracle(sign, 1000, 1).positive);
    const PdCertificate c = pd_sample_oracle(off, 1000, 1);
    CHECK_FALSE(c.positive);
    REQUIRE(c.witness.has_value());
    // The witness replays to the same negative eigenvalue.
    const PdWitness& w = *c.witness;
    const PsdCheck replay = psd_check(definition_matrix_at(off, w.group_elements, w.algebra_elements, w.x));
    CHECK(replay.min_eigenvalue < -1e-9);
    CHECK(replay.min_eigenvalue == doctest::Approx(w.eigenvalue));
    CHECK_THROWS_AS(pd_sample_oracle(off, 0, 1), InvalidArgument);
  }

  TEST_CASE("fibrewise criterion and sampled definition agree on random multipliers") {
    testing::Rng rng(51);
    const std::vector<System> systems{System::trivial_cyclic(2), System::shift_cyclic(2), System::shift_cyclic(3),
                                      System(GroupAction::trivial(cyclic_group(3), 2))};
    for (const System& sys : systems)
      for (int i = 0; i < 12; ++i) {
        const Multiplier t = testing::random_test_multiplier(rng, sys, i);
        CHECK(is_positive_definite(t).positive == pd_sample_oracle(t, 1000, 100 + i).positive);
      }
  }

  TEST_CASE("diagonal coefficients are positive definite") {
    testing::Rng rng(52);
    for (int trial = 0; trial < 25; ++trial) {
      const System sys = testing::random_system(rng);
      const EquivariantRep rep = testing::random_rep(rng, sys);
      const ModuleVector xi = testing::random_module_vector(rng, rep.module());
      const Multiplier t = coefficient(rep, xi, xi);
      CHECK(is_positive_definite(t).positive);
      CHECK(pd_sample_oracle(t, 200, trial).positive);
    }
  }

  TEST_CASE("the positive cone is closed under sums and nonnegative scaling") {
    testing::Rng rng(53);
    for (int trial = 0; trial < 15; ++trial) {
      const System sys = testing::random_system(rng, 4);
      const Multiplier a = testing::random_test_multiplier(rng, sys, 0);
      const Multiplier b = testing::random_test_multiplier(rng, sys, 0);
      std::uniform_real_distribution<double> s(0.0, 3.0);
      CHECK(is_positive_definite(a * Complex(s(rng)) + b * Complex(s(rng))).positive);
    }
  }

  TEST_CASE("composition of multipliers") {
    testing::Rng rng(54);
    const System sys = System::shift_cyclic(3);
    const Multiplier t = testing::random_multiplier(rng, sys);
    CHECK(multiply(t, Multiplier::unit(sys)).distance(t) == 0.0);
    CHECK(multiply(Multiplier::unit(sys), t).distance(t) == 0.0);
    for (int p = 0; p < 3; ++p)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          for (int q = 0; q < 3; ++q) {
            const Multiplier prod =
                multiply(matrix_unit_multiplier(sys, k, l, p), matrix_unit_multiplier(sys, l, q, p));
            CHECK(prod.distance(matrix_unit_multiplier(sys, k, q, p)) == 0.0);
          }
    CHECK_THROWS_AS(multiply(t, Multiplier::unit(System::trivial_cyclic(3))), InvalidArgument);
  }

  TEST_CASE("support of a product lies in the intersection of supports") {
    testing::Rng rng(55);
    const System sys = System::shift_cyclic(4);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<CMatrix> a, b;
      std::bernoulli_distribution keep(0.5);
      for (int g = 0; g < 4; ++g) {
        a.push_back(keep(rng) ? testing::random_matrix(rng, 4, 4) : CMatrix::Zero(4, 4));
        b.push_back(keep(rng) ? testing::random_matrix(rng, 4, 4) : CMatrix::Zero(4, 4));
      }
      const Multiplier ta(sys, a), tb(sys, b);
      const auto sa = ta.support(), sb = tb.support();
      for (int g : multiply(ta, tb).support()) {
        CHECK(std::find(sa.begin(), sa.end(), g) != sa.end());
        CHECK(std::find(sb.begin(), sb.end(), g) != sb.end());
      }
    }
  }

  TEST_CASE("tensor products realise products of coefficients in reversed order") {
    testing::Rng rng(56);
    for (int trial = 0; trial < 8; ++trial) {
      const System sys = testing::random_system(rng, 4);
      const EquivariantRep r1 = testing::random_rep(rng, sys, 2), r2 = testing::random_rep(rng, sys, 2);
      const ModuleVector x1 = testing::random_module_vector(rng, r1.module());
      const ModuleVector y1 = testing::random_module_vector(rng, r1.module());
      const ModuleVector x2 = testing::random_module_vector(rng, r2.module());
      const ModuleVector y2 = testing::random_module_vector(rng, r2.module());
      const TensorRep t = tensor_rep(r1, r2);
      const Multiplier lhs = coefficient(t.rep, t.tensor.simple_tensor(x1, x2), t.tensor.simple_tensor(y1, y2));
      const Multiplier rhs = multiply(coefficient(r2, x2, y2), coefficient(r1, x1, y1));
      double scale = 1.0;
      for (const auto& m : rhs.mats()) scale = std::max(scale, max_abs(m));
      CHECK(lhs.distance(rhs) <= 1e-9 * scale);
    }
  }

  TEST_CASE("multipliers from group functions") {
    const System z2 = System::trivial_cyclic(2);
    const std::vector<Complex> one{1.0, 1.0}, sign{1.0, -1.0}, bad{1.0, 2.0};
    CHECK(from_group_function(z2, one).distance(Multiplier::unit(z2)) == 0.0);
    CHECK(is_positive_definite(from_group_function(z2, one)).positive);
    CHECK(is_positive_definite(from_group_function(z2, sign)).positive);
    CHECK_FALSE(is_positive_definite(from_group_function(z2, bad)).positive);
    CHECK_THROWS_AS(from_group_function(z2, std::vector<Complex>{1.0}), InvalidArgument);
    // |mu| <= 1 keeps the lower norm bound at most 1.
    testing::Rng rng(57);
    std::uniform_real_distribution<double> phase(0.0, 6.28), radius(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Complex> mu;
      for (int g = 0; g < 6; ++g) mu.push_back(std::polar(radius(rng), phase(rng)));
      const Multiplier t = from_group_function(System::shift_cyclic(6), mu);
      CHECK(norm_bounds(t, {}).lower <= 1.0);
    }
  }

  TEST_CASE("span of the matrix-unit coefficients") {
    for (bool sigma : {false, true}) {
      std::vector<Multiplier> units = example_multipliers(sigma, 2);
      CHECK(span_dimension(units) == 8);
      const std::vector<Multiplier> copy = units;
      units.insert(units.end(), copy.begin(), copy.end());
      CHECK(span_dimension(units) == 8);
    }
    CHECK(span_dimension(example_multipliers(true, 3)) == 27);
    CHECK(span_dimension(std::vector<Multiplier>{}) == 0);
  }

  TEST_CASE("norm bounds") {
    const System sigma2 = System::shift_cyclic(2);
    const EquivariantRep triv = trivial_rep(sigma2);
    const ModuleVector one(triv.module(), CVector::Ones(2));
    const std::vector<Realization> unit_real{{triv, one, one}};
    NormBounds b = norm_bounds(Multiplier::unit(sigma2), unit_real);
    CHECK(b.lower == doctest::Approx(1.0));
    CHECK(b.upper == doctest::Approx(1.0));
    CHECK(b.consistent);

    const EquivariantRep reg = regular_rep(triv);
    const ModuleVector at_e = spread_to_copies(reg, one, {0});
    b = norm_bounds(Multiplier::identity_supported(sigma2), std::vector<Realization>{{reg, at_e, at_e}});
    CHECK(b.lower == doctest::Approx(1.0));
    CHECK(b.upper == doctest::Approx(1.0));

    const Realization r = omega_example(3, 1, 2, 0);
    b = norm_bounds(matrix_unit_multiplier(r.rep.system(), 1, 2, 0), std::vector<Realization>{r});
    CHECK(b.lower == doctest::Approx(1.0));
    CHECK(b.upper == doctest::Approx(1.0));

    CHECK(std::isinf(norm_bounds(Multiplier::unit(sigma2), {}).upper));
    CHECK_THROWS_WITH_AS(norm_bounds(Multiplier::identity_supported(sigma2), unit_real),
                         doctest::Contains("realization 0"), InvalidArgument);
  }

  TEST_CASE("truncation of regular realisations") {
    const System sigma2 = System::shift_cyclic(2);
    const EquivariantRep reg = regular_rep(trivial_rep(sigma2));
    const ModuleVector one(SectionalModule::algebra(2), CVector::Ones(2));
    const ModuleVector at_e = spread_to_copies(reg, one, {0});
    Truncation tr = truncate_realization(reg, at_e, at_e, {0, 1}, {0, 1});
    CHECK(tr.deviation.upper == 0.0);
    CHECK(tr.deviation.lower == 0.0);
    tr = truncate_realization(reg, at_e, at_e, {0}, {0});
    CHECK(tr.deviation.upper == 0.0);
    CHECK(tr.truncated.distance(Multiplier::identity_supported(sigma2)) == 0.0);

    testing::Rng rng(58);
    for (int trial = 0; trial < 30; ++trial) {
      const System sys = trial % 2 ? System::shift_cyclic(2) : testing::random_system(rng, 3);
      const EquivariantRep r = regular_rep(testing::random_rep(rng, sys, 2));
      const ModuleVector xi = testing::random_module_vector(rng, r.module());
      const ModuleVector eta = testing::random_module_vector(rng, r.module());
      std::vector<int> s1, s2;
      std::bernoulli_distribution keep(0.5);
      for (int g = 0; g < sys.order(); ++g) {
        if (keep(rng)) s1.push_back(g);
        if (keep(rng)) s2.push_back(g);
      }
      const Truncation t = truncate_realization(r, xi, eta, s1, s2);
      CHECK(t.deviation.lower <= t.deviation.upper + 1e-9);
      CHECK(t.truncated_norm_upper <= t.full_norm_upper + 1e-12);
      // support(T_eps) lies in S1 S2^{-1}.
      std::set<int> allowed;
      for (int a : s1)
        for (int b : s2) allowed.insert(sys.group().mul(a, sys.group().inverse(b)));
      for (int g : t.truncated.support(1e-9)) CHECK(allowed.count(g) == 1);
    }
    CHECK_THROWS_AS(truncate_realization(trivial_rep(sigma2), one, one, {0}, {0}), InvalidArgument);
  }

  TEST_CASE("realisation through the regular representation") {
    const System z2 = System::trivial_cyclic(2);
    const EquivariantRep triv = trivial_rep(z2);
    const ModuleVector one(triv.module(), CVector::Ones(2));
    const Realization reg = realize_via_regular(Multiplier::unit(z2), {triv, one, one});
    CHECK(reg.rep.regular_base().has_value());
    CHECK(coefficient(reg.rep, reg.xi, reg.eta).distance(Multiplier::unit(z2)) == 0.0);

    const Realization om = omega_example(3, 2, 1, 1);
    const Multiplier unit = matrix_unit_multiplier(om.rep.system(), 2, 1, 1);
    const Realization r2 = realize_via_regular(unit, om);
    CHECK(coefficient(r2.rep, r2.xi, r2.eta).distance(unit) == 0.0);

    CHECK_THROWS_AS(realize_via_regular(Multiplier::zero(z2), {triv, ModuleVector::zero(triv.module()), one}),
                    InvalidArgument);
    CHECK_THROWS_AS(realize_via_regular(Multiplier::identity_supported(z2), {triv, one, one}), InvalidArgument);
  }

  TEST_CASE("classified cyclic representations of Omega_2") {
    testing::Rng rng(59);
    for (int trial = 0; trial < 20; ++trial) {
      std::array<int, 4> eps{};
      for (int i = 0; i < 4; ++i) eps[i] = (trial >> i) & 1 ? 1 : -1;
      const CVector xi = testing::random_vector(rng, 2), eta = testing::random_vector(rng, 2);
      const EquivariantRep rep = omega2_cyclic_rep(eps);
      CHECK(verify_equivariant(rep).passed());
      const ModuleVector v = pair_vector(xi, eta);
      CHECK(coefficient(rep, v, v).distance(omega2_formula(eps, xi, eta)) <= 1e-12);
    }
    CVector xi(2), eta = CVector::Zero(2);
    xi << 1.0, 0.0;
    const Multiplier t = omega2_formula({-1, 0, 0, 0}, xi, eta);
    CHECK(trace_point(t).tr1 == Complex(-1.0));
    CHECK(is_positive_definite(t).positive);
  }

  TEST_CASE("classified cyclic representations of Sigma_2") {
    testing::Rng rng(60);
    for (int trial = 0; trial < 20; ++trial) {
      const std::array<int, 2> eps{trial & 1 ? 1 : -1, trial & 2 ? 1 : -1};
      const CVector xi = testing::random_vector(rng, 2), eta = testing::random_vector(rng, 2);
      const EquivariantRep rep = sigma2_cyclic_rep(eps);
      CHECK(verify_equivariant(rep).passed());
      const ModuleVector v = pair_vector(xi, eta);
      const Multiplier t = coefficient(rep, v, v);
      CHECK(t.distance(sigma2_formula(eps, xi, eta)) <= 1e-12);
      CHECK((t.distance(sigma2_formula_printed(eps, xi, eta)) <= 1e-12) == (eps[0] == eps[1]));
      CHECK(std::abs(trace_point(t).tr1.imag()) <= 1e-12);
    }
  }

  TEST_CASE("printed Sigma_2 formula at eps = (1, -1), xi = (1, 0), eta = (0, i)") {
    CVector xi(2), eta(2);
    xi << 1.0, 0.0;
    eta << 0.0, Complex(0.0, 1.0);
    const Multiplier printed = sigma2_formula_printed({1, -1}, xi, eta);
    const TracePoint p = trace_point(printed);
    CHECK(std::abs(p.tr1 - Complex(0.0, 2.0)) <= 1e-15);
    CHECK_FALSE(is_positive_definite(printed).positive);
    CHECK(std::abs(trace_point(sigma2_formula({1, -1}, xi, eta)).tr1) <= 1e-15);
  }

  TEST_CASE("trace images of the positive cones") {
    const TraceSample omega = trace_image_sample(ConeSystem::Omega2, 2000, 42);
    CHECK(omega.pd_failures == 0);
    CHECK(omega.max_abs_imag_tr1 <= 1e-12);
    CHECK(omega.min_real_tr0 >= -1e-12);
    bool negative = false;
    for (const auto& p : omega.points) negative = negative || p.tr1.real() < -0.1;
    CHECK(negative);

    const TraceSample sigma = trace_image_sample(ConeSystem::Sigma2, 200, 42);
    CHECK(sigma.pd_failures == 0);
    CHECK(sigma.min_real_tr0 >= -1e-12);
    // tr T_1 = 2 Re T_1[0][0] for every Sigma_2-positive definite multiplier.
    for (const auto& p : sigma.points) CHECK(std::abs(p.tr1.imag()) <= 1e-9 * (1.0 + std::abs(p.tr0)));
    CHECK(kTraceDiscrepancyNote.find("Sigma_2") != std::string_view::npos);
  }
}
