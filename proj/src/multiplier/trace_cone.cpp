#include "cstardyn/multiplier/trace_cone.hpp"

#include <algorithm>
#include <random>

#include "cstardyn/core/errors.hpp"
#include "cstardyn/multiplier/examples.hpp"

namespace cstardyn {

const std::string_view kTraceDiscrepancyNote =
    "Stated trace images: Omega_2 -> [0,inf) x R, Sigma_2 -> R x C. Computed: tr T_0 >= 0 for both systems, "
    "and every Sigma_2-positive definite multiplier satisfies T_1[1][1] = conj(T_1[0][0]) (the 2 x 2 definition "
    "matrix for g = (e, 1), a_1 = a_2 = e_0 is Hermitian), so tr T_1 is real for Sigma_2 as well. The classified "
    "Sigma_2 coefficient has second row (eps_1 conj(eta_0) xi_1, eps_0 conj(eta_1) xi_0); the printed formula with "
    "(eps_0, eps_1) in that row reaches non-real traces only where it is not positive definite.";

TracePoint trace_point(const Multiplier& t) {
  if (t.system().order() != 2) throw InvalidArgument("trace_point: group must have two elements");
  return TracePoint{t.at(0).trace(), t.at(1).trace()};
}

namespace {

CVector random_c2(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CVector v(2);
  for (int i = 0; i < 2; ++i) v(i) = Complex(normal(rng), normal(rng));
  return v;
}

Multiplier omega_term(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> sign(-1, 1);
  std::array<int, 4> eps{};
  for (int& e : eps) e = sign(rng);
  const ModuleVector vec = pair_vector(random_c2(rng), random_c2(rng));
  std::vector<int> zeros;
  for (int i = 0; i < 4; ++i)
    if (eps[i] == 0) zeros.push_back(i);
  const int choices = 1 << zeros.size();
  Multiplier sum = Multiplier::zero(System::trivial_cyclic(2));
  for (int mask = 0; mask < choices; ++mask) {
    std::array<int, 4> pattern = eps;
    for (std::size_t z = 0; z < zeros.size(); ++z) pattern[zeros[z]] = (mask >> z) & 1 ? 1 : -1;
    sum = sum + coefficient(omega2_cyclic_rep(pattern), vec, vec);
  }
  return sum * Complex(1.0 / choices);
}

Multiplier sigma_term(std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  const std::array<int, 2> eps{coin(rng) ? 1 : -1, coin(rng) ? 1 : -1};
  const ModuleVector vec = pair_vector(random_c2(rng), random_c2(rng));
  return coefficient(sigma2_cyclic_rep(eps), vec, vec);
}

}  // namespace

TraceSample trace_image_sample(ConeSystem which, int count, std::uint64_t seed, double tol) {
  if (count < 1) throw InvalidArgument("trace_image_sample: count must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  const System sys = which == ConeSystem::Omega2 ? System::trivial_cyclic(2) : System::shift_cyclic(2);
  TraceSample out;
  out.min_real_tr0 = std::numeric_limits<double>::infinity();
  for (int i = 0; i < count; ++i) {
    Multiplier t = Multiplier::zero(sys);
    const int m = terms(rng);
    for (int j = 0; j < m; ++j) {
      const double w = weight(rng);
      t = t + (which == ConeSystem::Omega2 ? omega_term(rng) : sigma_term(rng)) * Complex(w);
    }
    if (!is_positive_definite(t, tol).positive) ++out.pd_failures;
    const TracePoint p = trace_point(t);
    out.max_abs_imag_tr1 = std::max(out.max_abs_imag_tr1, std::abs(p.tr1.imag()));
    out.min_real_tr0 = std::min(out.min_real_tr0, p.tr0.real());
    out.points.push_back(p);
  }
  return out;
}

}  // namespace cstardyn
