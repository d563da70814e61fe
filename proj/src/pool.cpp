#include "aqlab/pool.hpp"

#include <algorithm>
#include <stdexcept>

namespace aqlab::adapt {

const char* connectivity_name(PoolConnectivity c) {
  switch (c) {
    case PoolConnectivity::Full: return "full";
    case PoolConnectivity::Ladder: return "ladder";
    case PoolConnectivity::Linear: return "linear";
  }
  throw std::logic_error("bad connectivity");
}

PoolConnectivity connectivity_from_name(const std::string& name) {
  if (name == "full") return PoolConnectivity::Full;
  if (name == "ladder") return PoolConnectivity::Ladder;
  if (name == "linear") return PoolConnectivity::Linear;
  throw std::invalid_argument("unknown pool connectivity: " + name);
}

std::vector<std::pair<int, int>> ladder_edges(int n_qubits) {
  if (n_qubits < 2 || n_qubits % 2 != 0)
    throw std::invalid_argument("ladder needs an even qubit count >= 2");
  std::vector<std::pair<int, int>> edges;
  // Rungs: (0,1), (2,3), ...; rails: (q, q+2).
  for (int q = 0; q + 1 < n_qubits; q += 2) edges.emplace_back(q, q + 1);
  for (int q = 0; q + 2 < n_qubits; ++q) edges.emplace_back(q, q + 2);
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<std::pair<int, int>> path_edges(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("path needs at least two qubits");
  std::vector<std::pair<int, int>> edges;
  for (int q = 0; q + 1 < n_qubits; ++q) edges.emplace_back(q, q + 1);
  return edges;
}

OperatorPool build_pool(int n_qubits, PoolConnectivity c) {
  if (n_qubits < 2) throw std::invalid_argument("pool needs at least two qubits");

  OperatorPool pool;
  pool.n_qubits = n_qubits;
  pool.connectivity = c;

  pool.elements.push_back(sim::MixerOperator::global_x());
  pool.elements.push_back(sim::MixerOperator::global_y());
  for (int q = 0; q < n_qubits; ++q) {
    pool.elements.push_back(sim::MixerOperator::pauli(sim::PauliTerm::single(q, sim::Axis::X)));
    pool.elements.push_back(sim::MixerOperator::pauli(sim::PauliTerm::single(q, sim::Axis::Y)));
  }

  // Ordered pairs allowed by the connectivity.
  std::vector<std::pair<int, int>> pairs;
  if (c == PoolConnectivity::Full) {
    for (int j = 0; j < n_qubits; ++j)
      for (int k = 0; k < n_qubits; ++k)
        if (j != k) pairs.emplace_back(j, k);
  } else {
    const auto edges = c == PoolConnectivity::Ladder ? ladder_edges(n_qubits)
                                                     : path_edges(n_qubits);
    for (const auto& [a, b] : edges) {
      pairs.emplace_back(a, b);
      pairs.emplace_back(b, a);
    }
    std::sort(pairs.begin(), pairs.end());
  }

  using AxisPair = std::pair<sim::Axis, sim::Axis>;
  const AxisPair types[] = {{sim::Axis::X, sim::Axis::X},
                            {sim::Axis::Y, sim::Axis::Y},
                            {sim::Axis::X, sim::Axis::Y},
                            {sim::Axis::X, sim::Axis::Z},
                            {sim::Axis::Y, sim::Axis::Z}};
  for (const auto& [aj, ak] : types)
    for (const auto& [j, k] : pairs)
      pool.elements.push_back(sim::MixerOperator::pauli(sim::PauliTerm::pair(j, aj, k, ak)));

  return pool;
}

}  // namespace aqlab::adapt
