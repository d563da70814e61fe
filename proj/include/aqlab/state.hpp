#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "aqlab/pauli.hpp"

namespace aqlab::sim {

using cplx = std::complex<double>;

inline constexpr int kMaxQubits = 20;
inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kImagTolerance = 1e-10;

/// Dense statevector on n <= kMaxQubits qubits. Bit q of the amplitude index
/// holds the computational basis state of qubit q.
class QuantumState {
 public:
  explicit QuantumState(int n_qubits);  // |0...0>

  int n_qubits() const { return n_qubits_; }
  std::uint64_t dim() const { return amps_.size(); }

  cplx& operator[](std::uint64_t z) { return amps_[z]; }
  const cplx& operator[](std::uint64_t z) const { return amps_[z]; }
  std::span<cplx> amplitudes() { return amps_; }
  std::span<const cplx> amplitudes() const { return amps_; }

  double norm() const;
  // Throws std::runtime_error when |norm - 1| exceeds kNormTolerance.
  void check_norm() const;

  /// exp(-i gamma H) for H given as Z-only Pauli terms.
  void apply_diagonal_evolution(std::span<const PauliTerm> diagonal_terms, double gamma);

  /// Same evolution from a precomputed table of diagonal eigenvalues <z|H|z>.
  void apply_phase_table(std::span<const double> energies, double gamma);

  /// exp(-i beta A) for a mixer A.
  void apply_pauli_rotation(const MixerOperator& op, double beta);

 private:
  int n_qubits_;
  std::vector<cplx> amps_;
};

QuantumState init_plus_state(int n_qubits);
// |1> on qubit 0, |+> on the rest.
QuantumState init_symmetry_broken_state(int n_qubits);

// Diagonal eigenvalue <z|H|z> of a Z-only term list.
double diagonal_energy(std::span<const PauliTerm> terms, std::uint64_t z);
std::vector<double> diagonal_energy_table(std::span<const PauliTerm> terms, int n_qubits);

// |phi> = c * P |psi> for one Pauli string (coefficient included).
QuantumState apply_term(const QuantumState& psi, const PauliTerm& term);
// |phi> = sum_k c_k P_k |psi>.
QuantumState apply_terms(const QuantumState& psi, std::span<const PauliTerm> terms);
// |phi> = A |psi> for a mixer used as a linear operator (not the rotation).
QuantumState apply_operator(const QuantumState& psi, const MixerOperator& op);

cplx inner_product(const QuantumState& bra, const QuantumState& ket);

/// <psi| sum_k c_k P_k |psi>. Throws std::runtime_error when the imaginary
/// residue exceeds kImagTolerance (non-Hermitian input or a numerics bug).
double expectation(const QuantumState& psi, std::span<const PauliTerm> terms);

/// <psi| i[A, H] |psi>: the derivative at beta = 0 of
/// <psi| e^{+i beta A} H e^{-i beta A} |psi>.
double commutator_expectation(const QuantumState& psi, const MixerOperator& a,
                              std::span<const PauliTerm> h_terms);
/// Same with H|psi> precomputed, for scans that reuse it across many mixers.
double commutator_expectation(const QuantumState& psi, const MixerOperator& a,
                              const QuantumState& h_psi);

}  // namespace aqlab::sim
