#include "aqlab/problem.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "aqlab/state.hpp"

using namespace aqlab;
using problem::build_hamiltonian;
using problem::brute_force;
using problem::generate_instance;
using problem::WeightedGraph;

namespace {

std::vector<int> degrees_of(const WeightedGraph& g) {
  std::vector<int> deg(g.n_vertices, 0);
  for (const auto& e : g.edges) {
    ++deg[e.i];
    ++deg[e.j];
  }
  return deg;
}

}  // namespace

// ---------- instance generation ----------

TEST_CASE("complete graph has all pairs and weights from the grid") {
  const auto g = generate_instance(6, 5, 17);
  CHECK(g.edges.size() == 15);
  const auto deg = degrees_of(g);
  CHECK(std::all_of(deg.begin(), deg.end(), [](int d) { return d == 5; }));
  for (const auto& e : g.edges) {
    const double scaled = e.w * 10.0;
    CHECK(std::abs(scaled - std::round(scaled)) < 1e-9);
    CHECK(e.w >= 0.1 - 1e-12);
    CHECK(e.w <= 0.9 + 1e-12);
  }
}

TEST_CASE("pairing model produces simple regular graphs") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 44ull, 99ull}) {
    const auto g = generate_instance(8, 3, seed);
    CHECK(g.edges.size() == 12);  // 8 * 3 / 2
    const auto deg = degrees_of(g);
    CHECK(std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; }));
    g.validate();  // no self loops, no duplicates, sorted
  }
}

TEST_CASE("generation is deterministic in the seed") {
  const auto a = generate_instance(6, 3, 1234);
  const auto b = generate_instance(6, 3, 1234);
  const auto c = generate_instance(6, 3, 1235);
  REQUIRE(a.edges.size() == b.edges.size());
  bool same = true;
  for (std::size_t k = 0; k < a.edges.size(); ++k)
    same = same && a.edges[k].i == b.edges[k].i && a.edges[k].j == b.edges[k].j &&
           a.edges[k].w == b.edges[k].w;
  CHECK(same);
  bool differs = c.edges.size() != a.edges.size();
  for (std::size_t k = 0; !differs && k < a.edges.size(); ++k)
    differs = a.edges[k].i != c.edges[k].i || a.edges[k].j != c.edges[k].j ||
              a.edges[k].w != c.edges[k].w;
  CHECK(differs);
}

TEST_CASE("infeasible degree requests are rejected") {
  CHECK_THROWS_AS(generate_instance(5, 3, 1), std::invalid_argument);   // odd n * degree
  CHECK_THROWS_AS(generate_instance(4, 4, 1), std::invalid_argument);   // degree >= n
  CHECK_THROWS_AS(generate_instance(4, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_instance(1, 1, 1), std::invalid_argument);
}

// ---------- Hamiltonian construction ----------

TEST_CASE("hamiltonian carries w/2 couplings and the optional field") {
  WeightedGraph g{2, {{0, 1, 0.5}}};
  const auto h0 = build_hamiltonian(g, 0.0);
  CHECK(h0.zz_terms.size() == 1);
  CHECK(h0.zz_terms[0].coefficient == doctest::Approx(0.25));
  CHECK_FALSE(h0.field_term.has_value());

  const auto hf = build_hamiltonian(g, 0.05);
  REQUIRE(hf.field_term.has_value());
  CHECK(hf.field_term->coefficient == doctest::Approx(0.05));
  CHECK(hf.field_term->factors.size() == 1);
  CHECK(hf.field_term->factors[0].qubit == 0);
  CHECK(hf.terms().size() == 2);
  CHECK_THROWS_AS(build_hamiltonian(g, -0.1), std::invalid_argument);
}

// ---------- brute force ----------

TEST_CASE("single edge with field has the expected ground state") {
  WeightedGraph g{2, {{0, 1, 0.5}}};
  const auto truth = brute_force(build_hamiltonian(g, 0.05), 2);
  CHECK(truth.min_energy == doctest::Approx(-0.30).epsilon(1e-12));
  REQUIRE(truth.degeneracy() == 1);
  CHECK(truth.ground_states[0] == 1);  // qubit 0 = 1, qubit 1 = 0
  CHECK(truth.max_cut_value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("equal-weight triangle is six-fold degenerate") {
  WeightedGraph g{3, {{0, 1, 0.3}, {0, 2, 0.3}, {1, 2, 0.3}}};
  const auto truth = brute_force(build_hamiltonian(g, 0.0), 3);
  CHECK(truth.min_energy == doctest::Approx(-0.15).epsilon(1e-12));
  CHECK(truth.degeneracy() == 6);  // every state except 000 and 111
  CHECK(truth.max_cut_value == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("without the field ground states come in complement pairs") {
  const auto g = generate_instance(6, 5, 7);
  const auto truth = brute_force(build_hamiltonian(g, 0.0), 6);
  const std::uint64_t full = (1u << 6) - 1;
  for (const auto z : truth.ground_states) {
    CHECK(std::find(truth.ground_states.begin(), truth.ground_states.end(), z ^ full) !=
          truth.ground_states.end());
  }
  CHECK(truth.degeneracy() % 2 == 0);
}

TEST_CASE("max cut identity holds for random instances") {
  // max_cut = sum_w/2 - min_z E_zz(z), checked against a direct cut maximum.
  std::mt19937_64 seeds(5);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 3 + static_cast<int>(seeds() % 4);  // 3..6
    int degree = n - 1;
    if (rep % 3 == 1 && (n % 2 == 0)) degree = n / 2;
    WeightedGraph g;
    try {
      g = generate_instance(n, degree, seeds());
    } catch (const std::invalid_argument&) {
      continue;
    }
    const auto truth = brute_force(build_hamiltonian(g, 0.0), n);
    double best_cut = 0.0;
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
      double cut = 0.0;
      for (const auto& e : g.edges)
        if (((z >> e.i) & 1) != ((z >> e.j) & 1)) cut += e.w;
      best_cut = std::max(best_cut, cut);
    }
    CHECK(truth.max_cut_value == doctest::Approx(best_cut).epsilon(1e-10));
  }
}

TEST_CASE("the field is a small perturbation on complete-graph instances") {
  // f = 0.05 should leave max_cut far larger than the field scale.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = generate_instance(6, 5, seed);
    const auto t0 = brute_force(build_hamiltonian(g, 0.0), 6);
    const auto tf = brute_force(build_hamiltonian(g, 0.05), 6);
    CHECK(tf.min_energy <= t0.min_energy + 1e-12);  // field lowers some state
    CHECK(t0.min_energy - tf.min_energy <= 0.05 + 1e-12);
    CHECK(tf.max_cut_value == doctest::Approx(t0.max_cut_value).epsilon(1e-12));
    CHECK(t0.max_cut_value > 0.5);
  }
}

TEST_CASE("brute force agrees with statevector expectation on basis states") {
  const auto g = generate_instance(4, 3, 3);
  const auto h = build_hamiltonian(g, 0.05);
  const auto truth = brute_force(h, 4);
  const auto terms = h.terms();
  for (const auto z : truth.ground_states) {
    sim::QuantumState psi(4);
    psi[0] = 0.0;
    psi[z] = 1.0;
    CHECK(sim::expectation(psi, terms) == doctest::Approx(truth.min_energy).epsilon(1e-10));
  }
}

// ---------- normalized error ----------

TEST_CASE("normalized error is zero at the optimum and scales by the cut") {
  WeightedGraph g{2, {{0, 1, 0.5}}};
  const auto truth = brute_force(build_hamiltonian(g, 0.0), 2);
  CHECK(problem::normalized_error(truth.min_energy, truth) == doctest::Approx(0.0));
  CHECK(problem::normalized_error(truth.min_energy + 0.25, truth) ==
        doctest::Approx(0.5).epsilon(1e-12));
  problem::GroundTruth empty;
  CHECK_THROWS_AS(problem::normalized_error(0.0, empty), std::domain_error);
}

// ---------- serialization ----------

TEST_CASE("instance JSON round trip preserves the graph") {
  const auto inst = problem::make_instance(3, 6, 5, 41, 0.05);
  const auto text = problem::to_json(inst);
  const auto back = problem::instance_from_json(text);
  CHECK(back.graph.n_vertices == inst.graph.n_vertices);
  CHECK(back.degree == inst.degree);
  CHECK(back.seed == inst.seed);
  CHECK(back.f == inst.f);
  REQUIRE(back.graph.edges.size() == inst.graph.edges.size());
  for (std::size_t k = 0; k < inst.graph.edges.size(); ++k) {
    CHECK(back.graph.edges[k].i == inst.graph.edges[k].i);
    CHECK(back.graph.edges[k].j == inst.graph.edges[k].j);
    CHECK(back.graph.edges[k].w == inst.graph.edges[k].w);  // bit-exact decimals
  }
  CHECK(back.h.zz_terms.size() == inst.graph.edges.size());
  CHECK(back.h_field.field_term.has_value());
}
