#pragma once

#include <span>

#include "aqlab/pauli.hpp"
#include "aqlab/problem.hpp"

namespace aqlab::resources {

/// Normalized-error level that defines "solved" for gate-count comparisons.
inline constexpr double kErrorThreshold = 0.05;

/// CNOTs needed to compile one circuit layer: 2 per nonzero-weight ZZ term of
/// the cost evolution, plus 2 when the mixer rotation couples two qubits.
/// Single-qubit mixers and the global transverse sums compile without CNOTs;
/// the Z_0 field is a bare phase rotation.
long cnot_cost_of_layer(const problem::CostHamiltonian& h,
                        const sim::MixerOperator& mixer);

/// Per-layer snapshot of a finished run, in layer order starting at layer 0
/// (the bare reference state, which costs nothing).
struct LayerUsage {
  double norm_error = 0.0;
  long cnot_cumulative = 0;
  int n_parameters = 0;
};

struct ResourceCount {
  bool reached_threshold = false;
  int layers_used = 0;  // crossing layer, or the final layer if never crossed
  long cnot_total = 0;
  int n_parameters = 0;
};

/// First layer whose normalized error is <= threshold, scanning from layer 0.
/// Runs that never cross keep their final-layer counts with the flag false;
/// cost averages exclude them.
ResourceCount resources_to_threshold(std::span<const LayerUsage> layers,
                                     double threshold = kErrorThreshold);

}  // namespace aqlab::resources
