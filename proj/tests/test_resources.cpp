#include "aqlab/resources.hpp"

#include <stdexcept>
#include <vector>

#include "aqlab/pauli.hpp"
#include "aqlab/problem.hpp"
#include "doctest.h"

namespace {

using namespace aqlab;

TEST_CASE("layer cost counts cost-evolution and mixer entanglers") {
  const auto complete6 = problem::generate_instance(6, 5, 3);  // 15 edges
  const auto h = problem::build_hamiltonian(complete6, 0.05);

  CHECK(resources::cnot_cost_of_layer(h, sim::MixerOperator::global_x()) == 30);
  CHECK(resources::cnot_cost_of_layer(h, sim::MixerOperator::global_y()) == 30);
  CHECK(resources::cnot_cost_of_layer(
            h, sim::MixerOperator::pauli(sim::PauliTerm::single(2, sim::Axis::Y))) == 30);
  CHECK(resources::cnot_cost_of_layer(
            h, sim::MixerOperator::pauli(
                   sim::PauliTerm::pair(0, sim::Axis::X, 3, sim::Axis::Y))) == 32);

  // The field rotation is free: same counts without it.
  const auto h_plain = problem::build_hamiltonian(complete6, 0.0);
  CHECK(resources::cnot_cost_of_layer(h_plain, sim::MixerOperator::global_x()) == 30);

  const problem::CostHamiltonian empty;
  CHECK(resources::cnot_cost_of_layer(
            empty, sim::MixerOperator::pauli(
                       sim::PauliTerm::single(0, sim::Axis::X))) == 0);
}

TEST_CASE("zero-weight couplings compile away") {
  problem::WeightedGraph g;
  g.n_vertices = 4;
  g.edges = {{0, 1, 0.4}, {0, 2, 0.0}, {1, 3, 0.7}, {2, 3, 0.0}};
  const auto h = problem::build_hamiltonian(g, 0.0);

  CHECK(resources::cnot_cost_of_layer(h, sim::MixerOperator::global_x()) == 4);
  CHECK(resources::cnot_cost_of_layer(
            h, sim::MixerOperator::pauli(
                   sim::PauliTerm::pair(1, sim::Axis::Y, 2, sim::Axis::Y))) == 6);
}

TEST_CASE("threshold scan reports the first crossing") {
  const std::vector<resources::LayerUsage> layers = {
      {0.50, 0, 0}, {0.20, 30, 2}, {0.04, 62, 4}, {0.01, 94, 6}};

  const auto count = resources::resources_to_threshold(layers);
  CHECK(count.reached_threshold);
  CHECK(count.layers_used == 2);
  CHECK(count.cnot_total == 62);
  CHECK(count.n_parameters == 4);

  // A tighter threshold moves the crossing later.
  const auto tight = resources::resources_to_threshold(layers, 0.02);
  CHECK(tight.reached_threshold);
  CHECK(tight.layers_used == 3);
  CHECK(tight.cnot_total == 94);

  // Landing exactly on the threshold counts as crossing.
  const std::vector<resources::LayerUsage> exact = {{0.5, 0, 0}, {0.05, 30, 2}};
  const auto at = resources::resources_to_threshold(exact);
  CHECK(at.reached_threshold);
  CHECK(at.layers_used == 1);
  CHECK(at.cnot_total == 30);
  CHECK(at.n_parameters == 2);
}

TEST_CASE("threshold scan can cross at the reference layer") {
  const std::vector<resources::LayerUsage> layers = {{0.01, 0, 0}, {0.001, 30, 2}};
  const auto count = resources::resources_to_threshold(layers);
  CHECK(count.reached_threshold);
  CHECK(count.layers_used == 0);
  CHECK(count.cnot_total == 0);
  CHECK(count.n_parameters == 0);
}

TEST_CASE("runs that never cross keep final-layer counts and the flag down") {
  const std::vector<resources::LayerUsage> layers = {
      {0.50, 0, 0}, {0.30, 30, 2}, {0.06, 62, 4}};
  const auto count = resources::resources_to_threshold(layers);
  CHECK_FALSE(count.reached_threshold);
  CHECK(count.layers_used == 2);
  CHECK(count.cnot_total == 62);
  CHECK(count.n_parameters == 4);
}

TEST_CASE("threshold scan validates its inputs") {
  CHECK_THROWS_AS(resources::resources_to_threshold({}), std::invalid_argument);
  const std::vector<resources::LayerUsage> layers = {{0.5, 0, 0}};
  CHECK_THROWS_AS(resources::resources_to_threshold(layers, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(resources::resources_to_threshold(layers, -0.1), std::invalid_argument);
}

}  // namespace
