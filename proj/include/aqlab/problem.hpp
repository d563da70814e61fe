#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aqlab/pauli.hpp"

namespace aqlab::problem {

struct WeightedEdge {
  int i = 0;
  int j = 0;
  double w = 0.0;
};

/// Undirected simple graph. Every edge satisfies i < j and the edge list is
/// sorted lexicographically.
struct WeightedGraph {
  int n_vertices = 0;
  std::vector<WeightedEdge> edges;

  double total_weight() const;
  void validate() const;
};

/// Random degree-regular instance. degree == n-1 yields the complete graph;
/// other degrees come from a rejection-sampled pairing model. Weights are
/// i.i.d. uniform on {0.1, 0.2, ..., 0.9}, drawn in sorted-edge order.
/// All randomness derives from mt19937_64(seed) with explicit bit
/// arithmetic, so results are identical across standard libraries.
WeightedGraph generate_instance(int n, int degree, std::uint64_t seed);

/// Ising encoding of weighted Max-Cut: sum over edges of (w/2) Z_i Z_j, plus
/// a symmetry-breaking field f Z_0 when f > 0.
struct CostHamiltonian {
  std::vector<sim::PauliTerm> zz_terms;
  std::optional<sim::PauliTerm> field_term;

  // Field first (when present), then the edge terms.
  std::vector<sim::PauliTerm> terms() const;
};

CostHamiltonian build_hamiltonian(const WeightedGraph& g, double f);

struct GroundTruth {
  double min_energy = 0.0;  // minimum of the full Hamiltonian, field included
  std::vector<std::uint64_t> ground_states;
  // total_weight/2 minus the minimum of the ZZ part alone; the field never
  // enters, so normalized errors in both symmetry modes share one scale.
  double max_cut_value = 0.0;

  int degeneracy() const { return static_cast<int>(ground_states.size()); }
};

/// Exhaustive enumeration over all 2^n spin configurations, n <= 24.
GroundTruth brute_force(const CostHamiltonian& h, int n_qubits);

/// (energy - truth.min_energy) / truth.max_cut_value
double normalized_error(double energy, const GroundTruth& truth);

/// One generated problem with both Hamiltonian variants.
struct ProblemInstance {
  int id = 0;
  std::uint64_t seed = 0;
  int degree = 0;
  double f = 0.0;
  WeightedGraph graph;
  CostHamiltonian h;        // f = 0
  CostHamiltonian h_field;  // field f on qubit 0
};

ProblemInstance make_instance(int id, int n, int degree, std::uint64_t seed, double f);

std::string to_json(const ProblemInstance& inst);
ProblemInstance instance_from_json(const std::string& text);

}  // namespace aqlab::problem
