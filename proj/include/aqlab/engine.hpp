#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "aqlab/ansatz.hpp"
#include "aqlab/nelder_mead.hpp"
#include "aqlab/pool.hpp"
#include "aqlab/problem.hpp"
#include "aqlab/state.hpp"

namespace aqlab::adapt {

/// When every pool gradient is below this, the selection is flagged as
/// degenerate and falls back to the first pool element in canonical order.
inline constexpr double kDegenerateGradient = 1e-12;

enum class Algorithm { Adapt, Qaoa };
enum class SymmetryMode { Preserve, Break };

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);
std::string mode_name(SymmetryMode m);
SymmetryMode mode_from_name(const std::string& name);

/// Gradient scan over a pool on exp(-i gamma0 H) |psi|: one energy derivative
/// i<[A, H]> per element. Two-qubit entries are rescaled by (1 - delta)
/// before the argmax; ties keep the earliest element in canonical order.
struct SelectionReport {
  std::vector<double> gradients;  // raw derivatives, pool order
  std::vector<double> scaled;     // after the two-qubit (1 - delta) factor
  int chosen_index = -1;
  bool degenerate = false;
};

SelectionReport select_mixer(const sim::QuantumState& psi,
                             const problem::CostHamiltonian& h,
                             const OperatorPool& pool, double gamma0,
                             double delta);

struct EngineConfig {
  Algorithm algorithm = Algorithm::Adapt;
  SymmetryMode mode = SymmetryMode::Preserve;
  PoolConnectivity connectivity = PoolConnectivity::Full;
  int p_max = 15;
  double delta = 0.0;    // two-qubit gradient penalty (negative = bonus)
  double gamma0 = 0.01;  // probe angle for selection and warm starts
  optimize::OptimizerConfig optimizer;
};

/// One row per layer; layer 0 is the bare reference state.
struct LayerTrace {
  int layer = 0;
  double energy = 0.0;
  double norm_error = 0.0;
  double ent_middle = 0.0;
  double ent_single_avg = 0.0;
  std::string mixer_token = "-";
  long cnot_cumulative = 0;
  int n_params = 0;
  long optimizer_evals = 0;
  bool degenerate_selection = false;
  // Largest |gradient| seen among pool elements that anticommute with the
  // global bit-flip; stays at numerical zero in symmetry-preserving runs.
  double max_anticommuting_gradient = 0.0;
};

struct RunRecord {
  int instance_id = 0;
  Algorithm algorithm = Algorithm::Adapt;
  SymmetryMode mode = SymmetryMode::Preserve;
  PoolConnectivity connectivity = PoolConnectivity::Full;
  double delta = 0.0;
  std::vector<LayerTrace> layers;
  ansatz::AnsatzProgram program;  // grown mixers with their optimal parameters
  problem::GroundTruth truth;
};

/// Runs the layer-growth loop on one instance: select (or fix) the mixer,
/// warm start, optimize, record. The symmetry mode picks the Hamiltonian
/// variant and the reference state; entropies are conditioned on a qubit-0
/// measurement in Preserve mode and taken raw in Break mode.
RunRecord grow_and_optimize(const problem::ProblemInstance& inst,
                            const EngineConfig& cfg);

std::string run_csv_header();
void append_run_csv(std::ostream& os, const RunRecord& rec);

}  // namespace aqlab::adapt
