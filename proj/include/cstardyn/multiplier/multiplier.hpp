#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "cstardyn/core/group_action.hpp"
#include "cstardyn/core/types.hpp"
#include "cstardyn/equivrep/equivariant_rep.hpp"

namespace cstardyn {

/// A multiplier T: G x C^n -> C^n, linear in the second variable, stored as
/// the standard n x n matrix of each T_g.
class Multiplier {
 public:
  Multiplier(System system, std::vector<CMatrix> mats);

  static Multiplier zero(const System& system);
  /// T_g = id for every g.
  static Multiplier unit(const System& system);
  /// delta_{g,e} id.
  static Multiplier identity_supported(const System& system);

  const System& system() const { return system_; }
  const CMatrix& at(int g) const { return mats_[g]; }
  const std::vector<CMatrix>& mats() const { return mats_; }
  CVector apply(int g, const CVector& a) const;

  /// {g : max |T_g| > tol}.
  std::vector<int> support(double tol = kDefaultTol) const;
  /// max_g max |T_g - S_g|.
  double distance(const Multiplier& other) const;

  Multiplier operator+(const Multiplier& other) const;
  Multiplier operator-(const Multiplier& other) const;
  Multiplier operator*(Complex s) const;

 private:
  System system_;
  std::vector<CMatrix> mats_;
};

/// T(g, a) = <xi, rho(a) v(g) eta>.
Multiplier coefficient(const EquivariantRep& rep, const ModuleVector& xi, const ModuleVector& eta);

/// (T.S)_g = T_g o S_g.
Multiplier multiply(const Multiplier& t, const Multiplier& s);

/// T^mu(g, a) = mu(g) a.
Multiplier from_group_function(const System& system, std::span<const Complex> mu);

/// Rank of the multipliers as vectors of the |G| n^2 dimensional space.
int span_dimension(std::span<const Multiplier> ms, double tol = kDefaultTol);

/// delta_{p,m} E_{kl}: the matrix units of L(Z_n, C^n).
Multiplier matrix_unit_multiplier(const System& system, int k, int l, int p);

/// Witness that a kernel matrix fails to be positive.
struct PdWitness {
  /// Fibrewise criterion: point x and basis index k.
  int x = -1;
  int k = -1;
  /// Sampled definition: the tuple (g_i, a_i) and the point x.
  std::vector<int> group_elements;
  std::vector<CVector> algebra_elements;
  CVector eigenvector;
  double eigenvalue = 0.0;
};

struct PdCertificate {
  bool positive = false;
  /// Minimal eigenvalue over all matrices examined.
  double min_eigenvalue = 0.0;
  double hermitian_residual = 0.0;
  std::optional<PdWitness> witness;
};

/// The |G| x |G| matrix with (i, j) entry
/// [alpha_{g_i}(T_{g_i^{-1} g_j}(alpha_{g_i}^{-1}(e_k)))]_x over the
/// enumeration g = 0..|G|-1.
CMatrix pd_kernel_matrix(const Multiplier& t, int x, int k);

/// Sigma-positive definiteness through the fibrewise criterion: T is positive
/// definite iff every pd_kernel_matrix(t, x, k) is positive semidefinite.
PdCertificate is_positive_definite(const Multiplier& t, double tol = kDefaultTol);

/// Randomised test of the definition itself: tuples of length <= 2|G| with
/// random g_i and random a_i; returns the first violation found.
PdCertificate pd_sample_oracle(const Multiplier& t, int trials, std::uint64_t seed, double tol = kDefaultTol);

/// The PSD test on the A-valued matrix of a given tuple, one scalar matrix per
/// point. Exposed for witness replay.
CMatrix definition_matrix_at(const Multiplier& t, std::span<const int> gs, std::span<const CVector> as, int x);

/// ||T|| as an interval. lower = max_g ||T_g||_{inf->inf}; upper = best
/// ||xi|| ||eta|| over known realisations (infinity if none).
struct NormBounds {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  bool consistent = true;
};

struct Realization {
  EquivariantRep rep;
  ModuleVector xi;
  ModuleVector eta;
};

/// ||T_g|| as an operator on (C^n, sup norm): the max absolute row sum.
double sup_operator_norm(const CMatrix& m);

NormBounds norm_bounds(const Multiplier& t, std::span<const Realization> realizations, double tol = kDefaultTol);

struct Truncation {
  /// coefficient(rep, xi_S1, eta_S2).
  Multiplier truncated;
  /// Bounds on ||T - T_eps||: lower from the sup of block norms, upper from
  /// ||xi_{S1^c}|| ||eta|| + ||xi_S1|| ||eta_{S2^c}||.
  NormBounds deviation;
  /// ||xi_S1|| ||eta_S2||, an upper bound for ||T_eps||, and ||xi|| ||eta||.
  double truncated_norm_upper = 0.0;
  double full_norm_upper = 0.0;
};

Truncation truncate_realization(const EquivariantRep& rep, const ModuleVector& xi, const ModuleVector& eta,
                                const std::vector<int>& s1, const std::vector<int>& s2);

/// Given (rep, xi, eta) realising T with nonempty support S, the regular
/// representation of rep with xi spread over S and eta placed at e.
Realization realize_via_regular(const Multiplier& t, const Realization& realization, double tol = kDefaultTol);

}  // namespace cstardyn
