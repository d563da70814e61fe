#include "aqlab/ansatz.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace aqlab::ansatz {

sim::QuantumState reference_state(Reference ref, int n_qubits) {
  return ref == Reference::AllPlus ? sim::init_plus_state(n_qubits)
                                   : sim::init_symmetry_broken_state(n_qubits);
}

Evaluator::Evaluator(const problem::CostHamiltonian& h, int n_qubits, Reference ref)
    : n_qubits_(n_qubits),
      diag_(sim::diagonal_energy_table(h.terms(), n_qubits)),
      reference_(reference_state(ref, n_qubits)) {}

sim::QuantumState Evaluator::state(std::span<const Layer> layers,
                                   std::span<const double> params) const {
  if (params.size() != 2 * layers.size())
    throw std::invalid_argument("expected two parameters per layer");
  sim::QuantumState psi = reference_;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    psi.apply_phase_table(diag_, params[2 * l]);
    psi.apply_pauli_rotation(layers[l].mixer, params[2 * l + 1]);
  }
  return psi;
}

double Evaluator::energy_of_state(const sim::QuantumState& psi) const {
  if (psi.dim() != diag_.size()) throw std::invalid_argument("dimension mismatch");
  double e = 0.0;
  for (std::uint64_t z = 0; z < psi.dim(); ++z) e += diag_[z] * std::norm(psi[z]);
  return e;
}

double Evaluator::energy(std::span<const Layer> layers,
                         std::span<const double> params) const {
  return energy_of_state(state(layers, params));
}

sim::QuantumState evaluate(const AnsatzProgram& prog, std::span<const double> params,
                           const problem::CostHamiltonian& h) {
  const Evaluator ev(h, prog.n_qubits, prog.reference);
  return ev.state(prog.layers, params);
}

double energy_of(const AnsatzProgram& prog, std::span<const double> params,
                 const problem::CostHamiltonian& h) {
  const Evaluator ev(h, prog.n_qubits, prog.reference);
  return ev.energy(prog.layers, params);
}

std::vector<double> warm_start_params(std::span<const double> prev, double gamma0) {
  if (prev.size() % 2 != 0) throw std::invalid_argument("parameter count must be even");
  std::vector<double> out(prev.begin(), prev.end());
  out.push_back(gamma0);
  out.push_back(0.0);
  return out;
}

std::string to_json(const AnsatzProgram& prog) {
  if (prog.parameters.size() != 2 * prog.layers.size())
    throw std::invalid_argument("program parameters not populated");
  auto arr = nlohmann::json::array();
  for (std::size_t l = 0; l < prog.layers.size(); ++l) {
    arr.push_back({{"gamma", prog.parameters[2 * l]},
                   {"beta", prog.parameters[2 * l + 1]},
                   {"mixer", prog.layers[l].mixer.token()}});
  }
  return arr.dump(2);
}

AnsatzProgram ansatz_from_json(const std::string& text, int n_qubits, Reference ref) {
  const auto j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("ansatz JSON must be an array");
  AnsatzProgram prog;
  prog.n_qubits = n_qubits;
  prog.reference = ref;
  for (const auto& item : j) {
    const auto mixer = sim::MixerOperator::parse_token(item.at("mixer").get<std::string>());
    if (mixer.kind == sim::MixerOperator::Kind::PauliString)
      mixer.string.validate(n_qubits);
    prog.layers.push_back({mixer});
    prog.parameters.push_back(item.at("gamma").get<double>());
    prog.parameters.push_back(item.at("beta").get<double>());
  }
  return prog;
}

}  // namespace aqlab::ansatz
