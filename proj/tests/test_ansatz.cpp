#include "aqlab/ansatz.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace aqlab;
using ansatz::AnsatzProgram;
using ansatz::Layer;
using ansatz::Reference;
using sim::Axis;
using sim::MixerOperator;
using sim::PauliTerm;

namespace {

AnsatzProgram triangle_program(int layers) {
  AnsatzProgram prog;
  prog.n_qubits = 3;
  std::vector<MixerOperator> mixers = {
      MixerOperator::global_x(),
      MixerOperator::pauli(PauliTerm::pair(0, Axis::Y, 2, Axis::Z)),
      MixerOperator::pauli(PauliTerm::single(1, Axis::Y)),
      MixerOperator::pauli(PauliTerm::pair(1, Axis::X, 2, Axis::X))};
  for (int l = 0; l < layers; ++l) prog.layers.push_back({mixers[l % mixers.size()]});
  return prog;
}

problem::CostHamiltonian triangle_h(double f) {
  problem::WeightedGraph g{3, {{0, 1, 0.2}, {0, 2, 0.5}, {1, 2, 0.8}}};
  return problem::build_hamiltonian(g, f);
}

}  // namespace

TEST_CASE("reference states match the initializers") {
  const auto plus = ansatz::reference_state(Reference::AllPlus, 2);
  CHECK(std::abs(plus[3] - sim::cplx{0.5, 0.0}) < 1e-14);
  const auto broken = ansatz::reference_state(Reference::SymmetryBroken, 2);
  CHECK(std::abs(broken[0]) == 0.0);
  CHECK(std::abs(broken[1] - sim::cplx{M_SQRT1_2, 0.0}) < 1e-14);
}

TEST_CASE("zero layers returns the reference state") {
  AnsatzProgram prog;
  prog.n_qubits = 4;
  const auto h = triangle_h(0.0);
  const auto psi = ansatz::evaluate(prog, {}, h);
  const auto ref = sim::init_plus_state(4);
  for (std::uint64_t z = 0; z < psi.dim(); ++z) CHECK(std::abs(psi[z] - ref[z]) < 1e-14);
}

TEST_CASE("evaluation matches the dense unitary product") {
  std::mt19937_64 rng(77);
  for (const double f : {0.0, 0.05}) {
    const auto h = triangle_h(f);
    const auto dense_h = oracle::terms_matrix(h.terms(), 3);
    for (int p = 1; p <= 4; ++p) {
      auto prog = triangle_program(p);
      prog.reference = f > 0.0 ? Reference::SymmetryBroken : Reference::AllPlus;
      std::vector<double> params(2 * p);
      for (auto& v : params) v = 2.0 * testutil::uniform01(rng) - 1.0;

      std::vector<MixerOperator> mixers;
      for (const auto& l : prog.layers) mixers.push_back(l.mixer);
      const oracle::Vector ref = oracle::dense_ansatz(
          prog.reference == Reference::AllPlus ? oracle::plus_vector(3)
                                               : oracle::broken_vector(3),
          dense_h, mixers, params);

      const auto psi = ansatz::evaluate(prog, params, h);
      CHECK(oracle::max_abs_diff(psi, ref) < 1e-11);
      CHECK(ansatz::energy_of(prog, params, h) ==
            doctest::Approx(oracle::dense_energy(ref, dense_h)).epsilon(1e-10));
    }
  }
}

TEST_CASE("parameter count must be twice the layer count") {
  const auto prog = triangle_program(2);
  const auto h = triangle_h(0.0);
  std::vector<double> bad(3, 0.1);
  CHECK_THROWS_AS(ansatz::evaluate(prog, bad, h), std::invalid_argument);
}

TEST_CASE("warm start appends gamma0 and zero") {
  const std::vector<double> prev = {0.3, -0.2};
  const auto next = ansatz::warm_start_params(prev, 0.01);
  REQUIRE(next.size() == 4);
  CHECK(next[0] == 0.3);
  CHECK(next[1] == -0.2);
  CHECK(next[2] == 0.01);
  CHECK(next[3] == 0.0);
  const auto first = ansatz::warm_start_params({}, 0.01);
  REQUIRE(first.size() == 2);
  CHECK(first[0] == 0.01);
  CHECK(first[1] == 0.0);
}

TEST_CASE("warm-started layer leaves the energy unchanged") {
  // The appended layer evolves by H (commutes with H) and rotates by zero.
  const auto h = triangle_h(0.05);
  auto prog = triangle_program(2);
  prog.reference = Reference::SymmetryBroken;
  const std::vector<double> params = {0.4, -0.7, 0.2, 0.9};
  const double e2 = ansatz::energy_of(prog, params, h);

  auto grown = prog;
  grown.layers.push_back({MixerOperator::pauli(PauliTerm::pair(0, Axis::X, 1, Axis::Y))});
  const auto warm = ansatz::warm_start_params(params, 0.01);
  const double e3 = ansatz::energy_of(grown, warm, h);
  CHECK(e3 == doctest::Approx(e2).epsilon(1e-12));
}

TEST_CASE("flip symmetry is preserved by symmetric programs") {
  // All-plus reference, ZZ cost, M mixer: amplitudes of z and ~z stay equal.
  const auto h = triangle_h(0.0);
  AnsatzProgram prog;
  prog.n_qubits = 3;
  prog.layers = {{MixerOperator::global_x()}, {MixerOperator::global_x()}};
  const std::vector<double> params = {0.8, 0.3, -0.4, 1.1};
  const auto psi = ansatz::evaluate(prog, params, h);
  for (std::uint64_t z = 0; z < psi.dim(); ++z)
    CHECK(std::abs(psi[z] - psi[z ^ 7]) < 1e-12);
}

TEST_CASE("evaluator matches the free functions and caches correctly") {
  std::mt19937_64 rng(78);
  const auto h = triangle_h(0.05);
  auto prog = triangle_program(3);
  prog.reference = Reference::SymmetryBroken;
  const ansatz::Evaluator ev(h, 3, prog.reference);
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<double> params(6);
    for (auto& v : params) v = 2.0 * testutil::uniform01(rng) - 1.0;
    const auto a = ansatz::evaluate(prog, params, h);
    const auto b = ev.state(prog.layers, params);
    for (std::uint64_t z = 0; z < a.dim(); ++z) CHECK(std::abs(a[z] - b[z]) < 1e-14);
    CHECK(ev.energy(prog.layers, params) ==
          doctest::Approx(ansatz::energy_of(prog, params, h)).epsilon(1e-12));
  }
}

TEST_CASE("ansatz JSON round trip") {
  auto prog = triangle_program(3);
  prog.parameters = {0.1, 0.2, -0.3, 0.4, 0.5, -0.6};
  const auto text = ansatz::to_json(prog);
  const auto back = ansatz::ansatz_from_json(text, 3);
  REQUIRE(back.layers.size() == prog.layers.size());
  CHECK(back.parameters == prog.parameters);
  for (std::size_t l = 0; l < prog.layers.size(); ++l)
    CHECK(back.layers[l].mixer.token() == prog.layers[l].mixer.token());
}

TEST_CASE("ansatz JSON rejects out-of-range qubits and bad tokens") {
  CHECK_THROWS_AS(ansatz::ansatz_from_json(
                      R"([{"gamma": 0.1, "beta": 0.2, "mixer": "X7"}])", 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(ansatz::ansatz_from_json(
                      R"([{"gamma": 0.1, "beta": 0.2, "mixer": "Q0"}])", 3),
                  std::invalid_argument);
}
