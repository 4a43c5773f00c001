#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cstardyn/multiplier/multiplier.hpp"

namespace cstardyn {

enum class ConeSystem { Omega2, Sigma2 };

/// (tr T_0, tr T_1) of a multiplier of a system with two group elements.
struct TracePoint {
  Complex tr0;
  Complex tr1;
};

struct TraceSample {
  std::vector<TracePoint> points;
  /// Samples that failed is_positive_definite (expected to stay 0).
  int pd_failures = 0;
  double max_abs_imag_tr1 = 0.0;
  double min_real_tr0 = 0.0;
};

TracePoint trace_point(const Multiplier& t);

/// Draws positive definite multipliers as nonnegative combinations (one to
/// three terms) of coefficients of the classified cyclic representations
/// with random vectors; sign patterns use {-1, 0, 1} for Omega_2 (a zero is
/// the average of both signs) and {-1, 1} for Sigma_2.
TraceSample trace_image_sample(ConeSystem which, int count, std::uint64_t seed, double tol = kDefaultTol);

/// Stated versus computed trace regions.
extern const std::string_view kTraceDiscrepancyNote;

}  // namespace cstardyn
