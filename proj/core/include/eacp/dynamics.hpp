#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eacp/algebra.hpp"

namespace eacp {

/// One application of the evolution operator V(x) = x^2:
/// x'_j = u sum_i a_ij x_i, u' = u sum_i b_i x_i.
AlgebraElement evolution_step(const Algebra& alg, const AlgebraElement& x);

/// Binary64 version of evolution_step, coordinates (x_1, ..., x_n, u).
std::vector<double> evolution_step(const Algebra& alg,
                                   const std::vector<double>& x);

enum class TrajectoryStatus {
  fixed_point,
  reached_zero,
  cycle,
  budget_exhausted,
  magnitude_overflow,
};
std::string to_string(TrajectoryStatus status);

enum class TrajectoryMode { exact, approximate };

struct TrajectoryOptions {
  std::size_t max_steps = 100;
  TrajectoryMode mode = TrajectoryMode::exact;
  /// Relative tolerance for fixed-point and zero detection (approximate).
  double tolerance = 1e-9;
  /// Per-coordinate cap on numerator plus denominator bits (exact).
  std::size_t max_bits = 4096;
  /// Number of recent points remembered for cycle detection (exact).
  std::size_t cycle_window = 64;
  /// Float magnitude beyond which iteration stops (approximate).
  double max_magnitude = 1e300;
};

/// Trajectory x_0, x_1 = V(x_0), ... Exactly one of the point lists is
/// filled, depending on the mode. `steps` is the index of the last point:
/// for fixed_point it is the k with V(x_k) = x_k, for reached_zero the first
/// k > 0 with x_k = 0, for cycle the k at which x_k repeats an earlier point.
struct TrajectoryRecord {
  TrajectoryMode mode = TrajectoryMode::exact;
  std::vector<AlgebraElement> exact_points;
  std::vector<std::vector<double>> float_points;
  TrajectoryStatus status = TrajectoryStatus::budget_exhausted;
  std::size_t steps = 0;
  std::optional<std::size_t> cycle_length;
};

/// Throws std::invalid_argument for max_steps = 0 or a nonpositive
/// tolerance in approximate mode.
TrajectoryRecord trajectory(const Algebra& alg, const AlgebraElement& x0,
                            const TrajectoryOptions& options);

}  // namespace eacp
