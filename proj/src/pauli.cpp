#include "aqlab/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace aqlab::sim {

char axis_char(Axis a) {
  switch (a) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  throw std::logic_error("bad axis");
}

PauliTerm PauliTerm::z(int qubit, double coeff) {
  return PauliTerm{{{qubit, Axis::Z}}, coeff};
}

PauliTerm PauliTerm::zz(int i, int j, double coeff) {
  PauliTerm t{{{i, Axis::Z}, {j, Axis::Z}}, coeff};
  if (t.factors[0].qubit > t.factors[1].qubit) std::swap(t.factors[0], t.factors[1]);
  return t;
}

PauliTerm PauliTerm::single(int qubit, Axis a) {
  return PauliTerm{{{qubit, a}}, 1.0};
}

PauliTerm PauliTerm::pair(int j, Axis axis_j, int k, Axis axis_k) {
  PauliTerm t{{{j, axis_j}, {k, axis_k}}, 1.0};
  if (t.factors[0].qubit > t.factors[1].qubit) std::swap(t.factors[0], t.factors[1]);
  return t;
}

bool PauliTerm::diagonal() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const PauliFactor& f) { return f.axis == Axis::Z; });
}

void PauliTerm::validate(int n_qubits) const {
  int prev = -1;
  for (const auto& f : factors) {
    if (f.qubit < 0 || f.qubit >= n_qubits)
      throw std::invalid_argument("pauli factor qubit out of range");
    if (f.qubit <= prev)
      throw std::invalid_argument("pauli factors must be sorted on distinct qubits");
    prev = f.qubit;
  }
}

MixerOperator MixerOperator::global_x() { return MixerOperator{Kind::GlobalX, {}}; }
MixerOperator MixerOperator::global_y() { return MixerOperator{Kind::GlobalY, {}}; }

MixerOperator MixerOperator::pauli(PauliTerm t) {
  if (t.factors.empty())
    throw std::invalid_argument("mixer string must have at least one factor");
  t.coefficient = 1.0;
  std::sort(t.factors.begin(), t.factors.end(),
            [](const PauliFactor& a, const PauliFactor& b) { return a.qubit < b.qubit; });
  return MixerOperator{Kind::PauliString, std::move(t)};
}

bool MixerOperator::is_two_qubit() const {
  return kind == Kind::PauliString && string.factors.size() == 2;
}

bool MixerOperator::anticommutes_with_flip() const {
  if (kind == Kind::GlobalX) return false;
  if (kind == Kind::GlobalY) return true;
  int odd = 0;
  for (const auto& f : string.factors)
    if (f.axis != Axis::X) ++odd;
  return (odd % 2) == 1;
}

std::string MixerOperator::token() const {
  if (kind == Kind::GlobalX) return "M";
  if (kind == Kind::GlobalY) return "N";
  std::string out;
  for (const auto& f : string.factors) {
    out += axis_char(f.axis);
    out += std::to_string(f.qubit);
  }
  return out;
}

MixerOperator MixerOperator::parse_token(const std::string& tok) {
  if (tok == "M") return global_x();
  if (tok == "N") return global_y();
  PauliTerm t;
  std::size_t i = 0;
  while (i < tok.size()) {
    Axis a;
    switch (tok[i]) {
      case 'X': a = Axis::X; break;
      case 'Y': a = Axis::Y; break;
      case 'Z': a = Axis::Z; break;
      default: throw std::invalid_argument("bad mixer token: " + tok);
    }
    ++i;
    if (i >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[i])))
      throw std::invalid_argument("bad mixer token: " + tok);
    int q = 0;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
      q = q * 10 + (tok[i] - '0');
      ++i;
    }
    t.factors.push_back({q, a});
  }
  if (t.factors.empty()) throw std::invalid_argument("bad mixer token: " + tok);
  return pauli(std::move(t));
}

bool MixerOperator::operator==(const MixerOperator& other) const {
  if (kind != other.kind) return false;
  if (kind != Kind::PauliString) return true;
  if (string.factors.size() != other.string.factors.size()) return false;
  for (std::size_t i = 0; i < string.factors.size(); ++i) {
    if (string.factors[i].qubit != other.string.factors[i].qubit ||
        string.factors[i].axis != other.string.factors[i].axis)
      return false;
  }
  return true;
}

}  // namespace aqlab::sim
