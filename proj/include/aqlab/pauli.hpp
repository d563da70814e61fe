#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace aqlab::sim {

enum class Axis : std::uint8_t { X, Y, Z };

char axis_char(Axis a);

// One tensor factor of a Pauli string.
struct PauliFactor {
  int qubit = 0;
  Axis axis = Axis::Z;
};

/// Real-weighted Pauli string. Factors act on distinct qubits and are kept
/// sorted by qubit index. Qubit q lives on bit q of the amplitude index
/// (qubit 0 = least significant bit).
struct PauliTerm {
  std::vector<PauliFactor> factors;
  double coefficient = 1.0;

  static PauliTerm z(int qubit, double coeff);
  static PauliTerm zz(int i, int j, double coeff);
  static PauliTerm single(int qubit, Axis a);
  static PauliTerm pair(int j, Axis axis_j, int k, Axis axis_k);

  bool diagonal() const;  // all factors Z
  // Throws std::invalid_argument on out-of-range, duplicate or unsorted qubits.
  void validate(int n_qubits) const;
};

/// A mixer is either a unit-coefficient Pauli string or one of the global
/// transverse sums sum_i X_i / sum_i Y_i. The global sums consist of
/// commuting factors, so their rotations split factor-by-factor.
struct MixerOperator {
  enum class Kind : std::uint8_t { GlobalX, GlobalY, PauliString };

  Kind kind = Kind::GlobalX;
  PauliTerm string;  // meaningful only for Kind::PauliString, coefficient 1

  static MixerOperator global_x();
  static MixerOperator global_y();
  static MixerOperator pauli(PauliTerm t);

  bool is_two_qubit() const;

  // True when the operator anticommutes with the bit-flip symmetry
  // F = prod_i X_i, i.e. when the string has an odd number of Y/Z factors.
  // The global Y sum anticommutes, the global X sum commutes.
  bool anticommutes_with_flip() const;

  // "M", "N", or the string spelled factor by factor: "X3", "X0Y4", "Y2Z5".
  std::string token() const;
  static MixerOperator parse_token(const std::string& tok);

  bool operator==(const MixerOperator& other) const;
};

}  // namespace aqlab::sim
