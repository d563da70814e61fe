#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace aqlab::optimize {

struct OptimizerConfig {
  double x_tolerance = 1e-4;
  double f_tolerance = 1e-4;
  // 0 selects the default budget of 200 * dimension evaluations.
  std::size_t max_evaluations = 0;
  // Absolute per-coordinate step for the initial simplex. Warm-started
  // coordinates are frequently exactly zero, so relative steps would collapse.
  double simplex_step = 0.05;
  // One additional run seeded at the found optimum, keeping the better result.
  bool shrink_restart = false;
};

struct OptimizationResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;  // tolerances met before the budget ran out
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free Nelder-Mead minimization: reflection 1, expansion 2,
/// contraction 0.5, shrink 0.5. Converged when both the max coordinate
/// spread and the max value spread of the simplex (relative to its best
/// vertex) fall below the tolerances. Fully deterministic.
OptimizationResult minimize(const Objective& f, std::span<const double> x0,
                            const OptimizerConfig& cfg = {});

}  // namespace aqlab::optimize
