#include "aqlab/resources.hpp"

#include <stdexcept>

namespace aqlab::resources {

long cnot_cost_of_layer(const problem::CostHamiltonian& h,
                        const sim::MixerOperator& mixer) {
  long cnots = 0;
  for (const auto& term : h.zz_terms) {
    if (term.coefficient != 0.0) cnots += 2;
  }
  if (mixer.is_two_qubit()) cnots += 2;
  return cnots;
}

ResourceCount resources_to_threshold(std::span<const LayerUsage> layers,
                                     double threshold) {
  if (layers.empty()) throw std::invalid_argument("no layers to scan");
  if (threshold <= 0.0) throw std::invalid_argument("threshold must be positive");

  for (std::size_t l = 0; l < layers.size(); ++l) {
    if (layers[l].norm_error <= threshold) {
      return ResourceCount{true, static_cast<int>(l), layers[l].cnot_cumulative,
                           layers[l].n_parameters};
    }
  }
  const auto& last = layers.back();
  return ResourceCount{false, static_cast<int>(layers.size()) - 1,
                       last.cnot_cumulative, last.n_parameters};
}

}  // namespace aqlab::resources
