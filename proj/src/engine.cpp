#include "aqlab/engine.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "aqlab/csv.hpp"
#include "aqlab/entanglement.hpp"
#include "aqlab/resources.hpp"

namespace aqlab::adapt {

std::string algorithm_name(Algorithm a) {
  return a == Algorithm::Adapt ? "adapt" : "qaoa";
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "adapt") return Algorithm::Adapt;
  if (name == "qaoa") return Algorithm::Qaoa;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::string mode_name(SymmetryMode m) {
  return m == SymmetryMode::Preserve ? "preserve" : "break";
}

SymmetryMode mode_from_name(const std::string& name) {
  if (name == "preserve") return SymmetryMode::Preserve;
  if (name == "break") return SymmetryMode::Break;
  throw std::invalid_argument("unknown symmetry mode: " + name);
}

SelectionReport select_mixer(const sim::QuantumState& psi,
                             const problem::CostHamiltonian& h,
                             const OperatorPool& pool, double gamma0,
                             double delta) {
  if (pool.elements.empty()) throw std::invalid_argument("empty operator pool");
  const auto terms = h.terms();

  sim::QuantumState probe = psi;
  probe.apply_diagonal_evolution(terms, gamma0);
  const sim::QuantumState h_probe = sim::apply_terms(probe, terms);

  SelectionReport report;
  report.gradients.reserve(pool.elements.size());
  report.scaled.reserve(pool.elements.size());
  double best = -1.0;
  for (std::size_t i = 0; i < pool.elements.size(); ++i) {
    const auto& elem = pool.elements[i];
    const double g = sim::commutator_expectation(probe, elem, h_probe);
    const double scaled = elem.is_two_qubit() ? (1.0 - delta) * g : g;
    report.gradients.push_back(g);
    report.scaled.push_back(scaled);
    if (std::abs(scaled) > best) {
      best = std::abs(scaled);
      report.chosen_index = static_cast<int>(i);
    }
  }
  if (best < kDegenerateGradient) {
    report.degenerate = true;
    report.chosen_index = 0;
  }
  return report;
}

namespace {

struct Entropies {
  double middle = 0.0;
  double single_avg = 0.0;
};

// Preserve-mode states stay even under the global bit flip, which keeps a
// solution/anti-solution superposition alive. Conditioning on a qubit-0
// measurement removes that contribution so converged runs read as zero.
Entropies measure_entropies(const sim::QuantumState& psi, SymmetryMode mode) {
  const auto middle = ent::Bipartition::middle(psi.n_qubits());
  if (mode == SymmetryMode::Preserve) {
    return {ent::projected_entropy(psi, 0, middle),
            ent::projected_average_single_qubit_entropy(psi, 0)};
  }
  return {ent::entanglement_entropy(psi, middle),
          ent::average_single_qubit_entropy(psi)};
}

double one_norm(std::span<const sim::PauliTerm> terms) {
  double total = 0.0;
  for (const auto& t : terms) total += std::abs(t.coefficient);
  return total;
}

using csv::fmt;

}  // namespace

RunRecord grow_and_optimize(const problem::ProblemInstance& inst,
                            const EngineConfig& cfg) {
  if (cfg.p_max < 0) throw std::invalid_argument("p_max must be nonnegative");
  const int n = inst.graph.n_vertices;

  const problem::CostHamiltonian& h =
      cfg.mode == SymmetryMode::Preserve ? inst.h : inst.h_field;
  const ansatz::Reference reference =
      (cfg.algorithm == Algorithm::Adapt && cfg.mode == SymmetryMode::Break)
          ? ansatz::Reference::SymmetryBroken
          : ansatz::Reference::AllPlus;

  RunRecord rec;
  rec.instance_id = inst.id;
  rec.algorithm = cfg.algorithm;
  rec.mode = cfg.mode;
  rec.connectivity = cfg.connectivity;
  rec.delta = cfg.delta;
  rec.truth = problem::brute_force(h, n);
  rec.program.n_qubits = n;
  rec.program.reference = reference;

  const ansatz::Evaluator evaluator(h, n, reference);
  OperatorPool pool;
  if (cfg.algorithm == Algorithm::Adapt) pool = build_pool(n, cfg.connectivity);

  // A warm-started layer evolves by exp(-i gamma0 H) and an identity mixer
  // rotation, which commutes with H, so the energy must not move.
  const double warm_tol =
      std::max(1e-9, one_norm(h.terms()) * cfg.gamma0 * 10.0);

  std::vector<double> params;
  sim::QuantumState psi = evaluator.state({}, {});
  long cnot_cumulative = 0;

  LayerTrace base;
  base.layer = 0;
  base.energy = evaluator.energy_of_state(psi);
  base.norm_error = problem::normalized_error(base.energy, rec.truth);
  const auto base_ent = measure_entropies(psi, cfg.mode);
  base.ent_middle = base_ent.middle;
  base.ent_single_avg = base_ent.single_avg;
  rec.layers.push_back(base);

  for (int layer = 1; layer <= cfg.p_max; ++layer) {
    LayerTrace trace;
    trace.layer = layer;

    sim::MixerOperator mixer = sim::MixerOperator::global_x();
    if (cfg.algorithm == Algorithm::Adapt) {
      const SelectionReport report =
          select_mixer(psi, h, pool, cfg.gamma0, cfg.delta);
      mixer = pool.elements[report.chosen_index];
      trace.degenerate_selection = report.degenerate;
      for (std::size_t i = 0; i < pool.elements.size(); ++i) {
        if (!pool.elements[i].anticommutes_with_flip()) continue;
        trace.max_anticommuting_gradient = std::max(
            trace.max_anticommuting_gradient, std::abs(report.gradients[i]));
      }
    }

    rec.program.layers.push_back(ansatz::Layer{mixer});
    params = ansatz::warm_start_params(params, cfg.gamma0);

    const double warm_energy = evaluator.energy(rec.program.layers, params);
    if (std::abs(warm_energy - rec.layers.back().energy) > warm_tol) {
      throw std::logic_error("warm-started layer moved the energy");
    }

    const auto result = optimize::minimize(
        [&](std::span<const double> x) {
          return evaluator.energy(rec.program.layers, x);
        },
        params, cfg.optimizer);

    params = result.x;
    psi = evaluator.state(rec.program.layers, params);

    cnot_cumulative += resources::cnot_cost_of_layer(h, mixer);
    trace.energy = result.value;
    trace.norm_error = problem::normalized_error(result.value, rec.truth);
    const auto ents = measure_entropies(psi, cfg.mode);
    trace.ent_middle = ents.middle;
    trace.ent_single_avg = ents.single_avg;
    trace.mixer_token = mixer.token();
    trace.cnot_cumulative = cnot_cumulative;
    trace.n_params = 2 * layer;
    trace.optimizer_evals = static_cast<long>(result.evaluations);
    rec.layers.push_back(std::move(trace));
  }

  rec.program.parameters = params;
  return rec;
}

std::string run_csv_header() {
  return "instance_id,algo,mode,pool,delta,layer,energy,norm_error,ent_middle,"
         "ent_single_avg,mixer_token,cnot_cumulative,n_params,optimizer_evals";
}

void append_run_csv(std::ostream& os, const RunRecord& rec) {
  for (const auto& t : rec.layers) {
    os << rec.instance_id << ',' << algorithm_name(rec.algorithm) << ','
       << mode_name(rec.mode) << ',' << connectivity_name(rec.connectivity)
       << ',' << fmt(rec.delta) << ',' << t.layer << ',' << fmt(t.energy) << ','
       << fmt(t.norm_error) << ',' << fmt(t.ent_middle) << ','
       << fmt(t.ent_single_avg) << ',' << t.mixer_token << ','
       << t.cnot_cumulative << ',' << t.n_params << ',' << t.optimizer_evals
       << '\n';
  }
}

}  // namespace aqlab::adapt
