#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aqlab/pauli.hpp"

namespace aqlab::adapt {

enum class PoolConnectivity { Full, Ladder, Linear };

const char* connectivity_name(PoolConnectivity c);
PoolConnectivity connectivity_from_name(const std::string& name);

/// Mixer pool in canonical order: the global sums M and N, one-qubit X/Y
/// per qubit, then two-qubit strings grouped by type (XX, YY, XY, XZ, YZ)
/// over ordered pairs (j, k), j != k. Both orientations are kept for every
/// type, so the Full pool has 2 + 2n + 5n(n-1) elements. Restricted pools
/// keep only ordered pairs lying on ladder or path edges; the one-qubit and
/// global elements always remain.
struct OperatorPool {
  int n_qubits = 0;
  PoolConnectivity connectivity = PoolConnectivity::Full;
  std::vector<sim::MixerOperator> elements;
};

OperatorPool build_pool(int n_qubits, PoolConnectivity c);

/// Edges of the 2 x (n/2) grid hosting qubit q at (q mod 2, q div 2).
/// Requires even n >= 2.
std::vector<std::pair<int, int>> ladder_edges(int n_qubits);
/// Edges of the path 0-1-...-(n-1).
std::vector<std::pair<int, int>> path_edges(int n_qubits);

}  // namespace aqlab::adapt
