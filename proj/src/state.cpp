#include "aqlab/state.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace aqlab::sim {

namespace {

constexpr cplx kImagUnit{0.0, 1.0};

double parity_sign(std::uint64_t bits) {
  return (std::popcount(bits) & 1) ? -1.0 : 1.0;
}

// i^k for k = 0..3
cplx i_pow(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Bit masks describing the action of a Pauli string on basis states:
// P|z> = phase(z) |z ^ flip>, phase(z) = i^{#Y} * (-1)^{popcount(z & sign)}.
struct StringMasks {
  std::uint64_t flip = 0;
  std::uint64_t sign = 0;
  int y_count = 0;
};

StringMasks masks_of(const PauliTerm& t) {
  StringMasks m;
  for (const auto& f : t.factors) {
    const std::uint64_t bit = std::uint64_t{1} << f.qubit;
    switch (f.axis) {
      case Axis::X: m.flip |= bit; break;
      case Axis::Y: m.flip |= bit; m.sign |= bit; ++m.y_count; break;
      case Axis::Z: m.sign |= bit; break;
    }
  }
  return m;
}

}  // namespace

QuantumState::QuantumState(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::invalid_argument("qubit count out of range");
  amps_.assign(std::uint64_t{1} << n_qubits, cplx{0.0, 0.0});
  amps_[0] = 1.0;
}

double QuantumState::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void QuantumState::check_norm() const {
  if (std::abs(norm() - 1.0) > kNormTolerance)
    throw std::runtime_error("statevector norm drifted beyond tolerance");
}

void QuantumState::apply_diagonal_evolution(std::span<const PauliTerm> diagonal_terms,
                                            double gamma) {
  std::vector<std::pair<std::uint64_t, double>> zmasks;
  zmasks.reserve(diagonal_terms.size());
  for (const auto& t : diagonal_terms) {
    t.validate(n_qubits_);
    if (!t.diagonal())
      throw std::invalid_argument("diagonal evolution requires Z-only terms");
    zmasks.emplace_back(masks_of(t).sign, t.coefficient);
  }
  const std::uint64_t d = dim();
  for (std::uint64_t z = 0; z < d; ++z) {
    double e = 0.0;
    for (const auto& [mask, c] : zmasks) e += c * parity_sign(z & mask);
    amps_[z] *= std::polar(1.0, -gamma * e);
  }
}

void QuantumState::apply_phase_table(std::span<const double> energies, double gamma) {
  if (energies.size() != amps_.size())
    throw std::invalid_argument("energy table size mismatch");
  const std::uint64_t d = dim();
  for (std::uint64_t z = 0; z < d; ++z)
    amps_[z] *= std::polar(1.0, -gamma * energies[z]);
}

void QuantumState::apply_pauli_rotation(const MixerOperator& op, double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const std::uint64_t d = dim();

  if (op.kind == MixerOperator::Kind::GlobalX) {
    for (int q = 0; q < n_qubits_; ++q) {
      const std::uint64_t bit = std::uint64_t{1} << q;
      for (std::uint64_t z = 0; z < d; ++z) {
        if (z & bit) continue;
        const cplx a0 = amps_[z];
        const cplx a1 = amps_[z | bit];
        amps_[z] = c * a0 - kImagUnit * s * a1;
        amps_[z | bit] = c * a1 - kImagUnit * s * a0;
      }
    }
    return;
  }

  if (op.kind == MixerOperator::Kind::GlobalY) {
    for (int q = 0; q < n_qubits_; ++q) {
      const std::uint64_t bit = std::uint64_t{1} << q;
      for (std::uint64_t z = 0; z < d; ++z) {
        if (z & bit) continue;
        const cplx a0 = amps_[z];
        const cplx a1 = amps_[z | bit];
        amps_[z] = c * a0 - s * a1;
        amps_[z | bit] = c * a1 + s * a0;
      }
    }
    return;
  }

  op.string.validate(n_qubits_);
  if (op.string.factors.empty())
    throw std::invalid_argument("empty mixer string");
  const StringMasks m = masks_of(op.string);
  const cplx ip = i_pow(m.y_count);

  if (m.flip == 0) {
    // Z-only string: pure phases exp(-i beta * (+-1)).
    const cplx ph_plus = std::polar(1.0, -beta);
    const cplx ph_minus = std::polar(1.0, beta);
    for (std::uint64_t z = 0; z < d; ++z)
      amps_[z] *= (std::popcount(z & m.sign) & 1) ? ph_minus : ph_plus;
    return;
  }

  // Visit each (z, z ^ flip) pair once via the highest flipped bit.
  const std::uint64_t top = std::uint64_t{1} << (63 - std::countl_zero(m.flip));
  for (std::uint64_t z = 0; z < d; ++z) {
    if (z & top) continue;
    const std::uint64_t w = z ^ m.flip;
    const cplx phase_z = ip * parity_sign(z & m.sign);
    const cplx phase_w = ip * parity_sign(w & m.sign);
    const cplx az = amps_[z];
    const cplx aw = amps_[w];
    amps_[z] = c * az - kImagUnit * s * phase_w * aw;
    amps_[w] = c * aw - kImagUnit * s * phase_z * az;
  }
}

QuantumState init_plus_state(int n_qubits) {
  QuantumState psi(n_qubits);
  const double a = std::pow(2.0, -0.5 * n_qubits);
  for (auto& amp : psi.amplitudes()) amp = a;
  return psi;
}

QuantumState init_symmetry_broken_state(int n_qubits) {
  QuantumState psi(n_qubits);
  psi[0] = 0.0;
  const double a = std::pow(2.0, -0.5 * (n_qubits - 1));
  const std::uint64_t d = psi.dim();
  for (std::uint64_t z = 0; z < d; ++z) psi[z] = (z & 1) ? a : 0.0;
  return psi;
}

double diagonal_energy(std::span<const PauliTerm> terms, std::uint64_t z) {
  double e = 0.0;
  for (const auto& t : terms) {
    if (!t.diagonal())
      throw std::invalid_argument("diagonal energy requires Z-only terms");
    e += t.coefficient * parity_sign(z & masks_of(t).sign);
  }
  return e;
}

std::vector<double> diagonal_energy_table(std::span<const PauliTerm> terms, int n_qubits) {
  std::vector<std::pair<std::uint64_t, double>> zmasks;
  zmasks.reserve(terms.size());
  for (const auto& t : terms) {
    t.validate(n_qubits);
    if (!t.diagonal())
      throw std::invalid_argument("diagonal energy requires Z-only terms");
    zmasks.emplace_back(masks_of(t).sign, t.coefficient);
  }
  std::vector<double> table(std::uint64_t{1} << n_qubits, 0.0);
  for (std::uint64_t z = 0; z < table.size(); ++z) {
    double e = 0.0;
    for (const auto& [mask, c] : zmasks) e += c * parity_sign(z & mask);
    table[z] = e;
  }
  return table;
}

QuantumState apply_term(const QuantumState& psi, const PauliTerm& term) {
  term.validate(psi.n_qubits());
  QuantumState out(psi.n_qubits());
  out[0] = 0.0;
  const StringMasks m = masks_of(term);
  const cplx ip = i_pow(m.y_count);
  const std::uint64_t d = psi.dim();
  for (std::uint64_t z = 0; z < d; ++z)
    out[z ^ m.flip] = term.coefficient * ip * parity_sign(z & m.sign) * psi[z];
  return out;
}

QuantumState apply_terms(const QuantumState& psi, std::span<const PauliTerm> terms) {
  QuantumState out(psi.n_qubits());
  out[0] = 0.0;
  const std::uint64_t d = psi.dim();
  for (const auto& t : terms) {
    t.validate(psi.n_qubits());
    const StringMasks m = masks_of(t);
    const cplx scale = t.coefficient * i_pow(m.y_count);
    for (std::uint64_t z = 0; z < d; ++z)
      out[z ^ m.flip] += scale * parity_sign(z & m.sign) * psi[z];
  }
  return out;
}

QuantumState apply_operator(const QuantumState& psi, const MixerOperator& op) {
  if (op.kind == MixerOperator::Kind::PauliString) {
    PauliTerm t = op.string;
    t.coefficient = 1.0;
    return apply_term(psi, t);
  }
  QuantumState out(psi.n_qubits());
  out[0] = 0.0;
  const std::uint64_t d = psi.dim();
  for (int q = 0; q < psi.n_qubits(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (op.kind == MixerOperator::Kind::GlobalX) {
      for (std::uint64_t z = 0; z < d; ++z) out[z ^ bit] += psi[z];
    } else {
      for (std::uint64_t z = 0; z < d; ++z)
        out[z ^ bit] += kImagUnit * ((z & bit) ? -1.0 : 1.0) * psi[z];
    }
  }
  return out;
}

cplx inner_product(const QuantumState& bra, const QuantumState& ket) {
  if (bra.dim() != ket.dim()) throw std::invalid_argument("dimension mismatch");
  cplx s{0.0, 0.0};
  const std::uint64_t d = bra.dim();
  for (std::uint64_t z = 0; z < d; ++z) s += std::conj(bra[z]) * ket[z];
  return s;
}

double expectation(const QuantumState& psi, std::span<const PauliTerm> terms) {
  cplx acc{0.0, 0.0};
  const std::uint64_t d = psi.dim();
  for (const auto& t : terms) {
    t.validate(psi.n_qubits());
    const StringMasks m = masks_of(t);
    const cplx scale = t.coefficient * i_pow(m.y_count);
    cplx v{0.0, 0.0};
    for (std::uint64_t u = 0; u < d; ++u) {
      const std::uint64_t z = u ^ m.flip;
      v += std::conj(psi[u]) * parity_sign(z & m.sign) * psi[z];
    }
    acc += scale * v;
  }
  if (std::abs(acc.imag()) > kImagTolerance)
    throw std::runtime_error("expectation value has nonreal residue");
  return acc.real();
}

double commutator_expectation(const QuantumState& psi, const MixerOperator& a,
                              const QuantumState& h_psi) {
  const QuantumState a_psi = apply_operator(psi, a);
  // i<[A,H]> = i(<AH> - <HA>) = -2 Im <A psi | H psi> for Hermitian A, H.
  return -2.0 * inner_product(a_psi, h_psi).imag();
}

double commutator_expectation(const QuantumState& psi, const MixerOperator& a,
                              std::span<const PauliTerm> h_terms) {
  return commutator_expectation(psi, a, apply_terms(psi, h_terms));
}

}  // namespace aqlab::sim
