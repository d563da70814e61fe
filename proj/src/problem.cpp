#include "aqlab/problem.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace aqlab::problem {

namespace {

// rng() % m has bias below 2^-60 for m <= 9; irrelevant here but kept out of
// std::uniform_int_distribution for cross-platform determinism.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t m) { return rng() % m; }

// Fisher-Yates with the portable draw above.
template <typename T>
void portable_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[draw_below(rng, i)]);
}

std::vector<WeightedEdge> pairing_model_edges(int n, int degree, std::mt19937_64& rng) {
  constexpr int kMaxAttempts = 20000;
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * degree);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    stubs.clear();
    for (int v = 0; v < n; ++v)
      for (int d = 0; d < degree; ++d) stubs.push_back(v);
    portable_shuffle(stubs, rng);

    std::set<std::pair<int, int>> seen;
    bool ok = true;
    for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
      int a = stubs[k], b = stubs[k + 1];
      if (a == b) {
        ok = false;
        break;
      }
      if (a > b) std::swap(a, b);
      if (!seen.insert({a, b}).second) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    std::vector<WeightedEdge> edges;
    edges.reserve(seen.size());
    for (const auto& [a, b] : seen) edges.push_back({a, b, 0.0});
    return edges;
  }
  throw std::runtime_error("pairing model failed to produce a simple graph");
}

}  // namespace

double WeightedGraph::total_weight() const {
  double s = 0.0;
  for (const auto& e : edges) s += e.w;
  return s;
}

void WeightedGraph::validate() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    if (e.i < 0 || e.j >= n_vertices || e.i >= e.j)
      throw std::invalid_argument("edge endpoints must satisfy 0 <= i < j < n");
    if (!seen.insert({e.i, e.j}).second)
      throw std::invalid_argument("duplicate edge");
    if (e.w < 0.0) throw std::invalid_argument("negative edge weight");
  }
  if (!std::is_sorted(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        return std::pair{a.i, a.j} < std::pair{b.i, b.j};
      }))
    throw std::invalid_argument("edge list must be sorted");
}

WeightedGraph generate_instance(int n, int degree, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  if (degree < 1 || degree >= n) throw std::invalid_argument("degree must be in [1, n-1]");
  if ((n * degree) % 2 != 0)
    throw std::invalid_argument("n * degree must be even for a regular graph");

  std::mt19937_64 rng(seed);
  WeightedGraph g;
  g.n_vertices = n;

  if (degree == n - 1) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j, 0.0});
  } else {
    g.edges = pairing_model_edges(n, degree, rng);
  }

  std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
    return std::pair{a.i, a.j} < std::pair{b.i, b.j};
  });
  for (auto& e : g.edges) e.w = 0.1 * static_cast<double>(1 + draw_below(rng, 9));

  g.validate();
  return g;
}

std::vector<sim::PauliTerm> CostHamiltonian::terms() const {
  std::vector<sim::PauliTerm> out;
  out.reserve(zz_terms.size() + 1);
  if (field_term) out.push_back(*field_term);
  out.insert(out.end(), zz_terms.begin(), zz_terms.end());
  return out;
}

CostHamiltonian build_hamiltonian(const WeightedGraph& g, double f) {
  g.validate();
  if (f < 0.0) throw std::invalid_argument("field strength must be nonnegative");
  CostHamiltonian h;
  h.zz_terms.reserve(g.edges.size());
  for (const auto& e : g.edges) h.zz_terms.push_back(sim::PauliTerm::zz(e.i, e.j, 0.5 * e.w));
  if (f > 0.0) h.field_term = sim::PauliTerm::z(0, f);
  return h;
}

GroundTruth brute_force(const CostHamiltonian& h, int n_qubits) {
  if (n_qubits < 1 || n_qubits > 24)
    throw std::invalid_argument("brute force supports 1..24 qubits");

  struct MaskTerm {
    std::uint64_t mask;
    double coeff;
  };
  std::vector<MaskTerm> zz;
  zz.reserve(h.zz_terms.size());
  double field_coeff = 0.0;
  for (const auto& t : h.zz_terms) {
    t.validate(n_qubits);
    std::uint64_t mask = 0;
    for (const auto& f : t.factors) mask |= std::uint64_t{1} << f.qubit;
    zz.push_back({mask, t.coefficient});
  }
  if (h.field_term) {
    h.field_term->validate(n_qubits);
    field_coeff = h.field_term->coefficient;
  }

  GroundTruth truth;
  double min_full = std::numeric_limits<double>::infinity();
  double min_zz = std::numeric_limits<double>::infinity();
  double zz_weight_sum = 0.0;
  for (const auto& t : zz) zz_weight_sum += t.coeff;

  const std::uint64_t d = std::uint64_t{1} << n_qubits;
  for (std::uint64_t z = 0; z < d; ++z) {
    double e_zz = 0.0;
    for (const auto& t : zz)
      e_zz += (std::popcount(z & t.mask) & 1) ? -t.coeff : t.coeff;
    const double e_full = e_zz + ((z & 1) ? -field_coeff : field_coeff);
    min_zz = std::min(min_zz, e_zz);
    if (e_full < min_full) {
      min_full = e_full;
      truth.ground_states.clear();
      truth.ground_states.push_back(z);
    } else if (e_full == min_full) {
      truth.ground_states.push_back(z);
    }
  }

  truth.min_energy = min_full;
  truth.max_cut_value = zz_weight_sum - min_zz;  // sum_w/2 - min <ZZ part>
  return truth;
}

double normalized_error(double energy, const GroundTruth& truth) {
  if (truth.max_cut_value <= 0.0)
    throw std::domain_error("normalized error needs a positive max-cut value");
  return (energy - truth.min_energy) / truth.max_cut_value;
}

ProblemInstance make_instance(int id, int n, int degree, std::uint64_t seed, double f) {
  ProblemInstance inst;
  inst.id = id;
  inst.seed = seed;
  inst.degree = degree;
  inst.f = f;
  inst.graph = generate_instance(n, degree, seed);
  inst.h = build_hamiltonian(inst.graph, 0.0);
  inst.h_field = build_hamiltonian(inst.graph, f);
  return inst;
}

std::string to_json(const ProblemInstance& inst) {
  nlohmann::json j;
  j["n"] = inst.graph.n_vertices;
  j["degree"] = inst.degree;
  j["seed"] = inst.seed;
  j["f"] = inst.f;
  auto edges = nlohmann::json::array();
  for (const auto& e : inst.graph.edges) edges.push_back({e.i, e.j, e.w});
  j["edges"] = edges;
  return j.dump(2);
}

ProblemInstance instance_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ProblemInstance inst;
  inst.graph.n_vertices = j.at("n").get<int>();
  inst.degree = j.at("degree").get<int>();
  inst.seed = j.at("seed").get<std::uint64_t>();
  inst.f = j.at("f").get<double>();
  for (const auto& e : j.at("edges"))
    inst.graph.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>()});
  inst.graph.validate();
  inst.h = build_hamiltonian(inst.graph, 0.0);
  inst.h_field = build_hamiltonian(inst.graph, inst.f);
  return inst;
}

}  // namespace aqlab::problem
