#pragma once

#include <span>
#include <string>
#include <vector>

#include "aqlab/pauli.hpp"
#include "aqlab/problem.hpp"
#include "aqlab/state.hpp"

namespace aqlab::ansatz {

enum class Reference { AllPlus, SymmetryBroken };

struct Layer {
  sim::MixerOperator mixer;
};

/// Alternating cost/mixer circuit applied to a product reference state.
/// Parameters are ordered (gamma_1, beta_1, ..., gamma_p, beta_p); layer l
/// applies exp(-i gamma_l H) then exp(-i beta_l A_l).
struct AnsatzProgram {
  int n_qubits = 0;
  Reference reference = Reference::AllPlus;
  std::vector<Layer> layers;
  std::vector<double> parameters;  // 2 * layers.size() once populated
};

sim::QuantumState reference_state(Reference ref, int n_qubits);

sim::QuantumState evaluate(const AnsatzProgram& prog, std::span<const double> params,
                           const problem::CostHamiltonian& h);
double energy_of(const AnsatzProgram& prog, std::span<const double> params,
                 const problem::CostHamiltonian& h);

/// Previous optimum extended by (gamma0, 0) for the next layer.
std::vector<double> warm_start_params(std::span<const double> prev, double gamma0);

/// Caches the diagonal of H and the reference state for optimization loops.
class Evaluator {
 public:
  Evaluator(const problem::CostHamiltonian& h, int n_qubits, Reference ref);

  sim::QuantumState state(std::span<const Layer> layers,
                          std::span<const double> params) const;
  double energy(std::span<const Layer> layers, std::span<const double> params) const;
  double energy_of_state(const sim::QuantumState& psi) const;

  std::span<const double> diagonal() const { return diag_; }
  int n_qubits() const { return n_qubits_; }

 private:
  int n_qubits_;
  std::vector<double> diag_;
  sim::QuantumState reference_;
};

/// JSON array of {"gamma", "beta", "mixer"} objects, one per layer.
std::string to_json(const AnsatzProgram& prog);
AnsatzProgram ansatz_from_json(const std::string& text, int n_qubits,
                               Reference ref = Reference::AllPlus);

}  // namespace aqlab::ansatz
