#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "aqlab/state.hpp"

namespace aqlab::testutil {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double gaussian(std::mt19937_64& rng) {
  const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

inline sim::QuantumState random_state(int n_qubits, std::mt19937_64& rng) {
  sim::QuantumState psi(n_qubits);
  double norm2 = 0.0;
  for (auto& a : psi.amplitudes()) {
    a = {gaussian(rng), gaussian(rng)};
    norm2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : psi.amplitudes()) a *= inv;
  return psi;
}

// Random Z-only Hamiltonian: every pair gets a ZZ coupling, optionally a
// single-qubit Z field on qubit 0.
inline std::vector<sim::PauliTerm> random_zz_terms(int n_qubits, std::mt19937_64& rng,
                                                   bool with_field = false) {
  std::vector<sim::PauliTerm> terms;
  if (with_field) terms.push_back(sim::PauliTerm::z(0, 0.05));
  for (int i = 0; i < n_qubits; ++i)
    for (int j = i + 1; j < n_qubits; ++j)
      terms.push_back(sim::PauliTerm::zz(i, j, uniform01(rng) - 0.5));
  return terms;
}

}  // namespace aqlab::testutil
