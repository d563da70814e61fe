#include "aqlab/entanglement.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include "aqlab/rng.hpp"

namespace aqlab::ent {

namespace {

// Scatter table: bits of a dense subindex placed at the given qubit positions.
std::vector<std::uint64_t> scatter_table(const std::vector<int>& qubits) {
  const std::size_t dim = std::size_t{1} << qubits.size();
  std::vector<std::uint64_t> table(dim, 0);
  for (std::size_t a = 0; a < dim; ++a) {
    std::uint64_t z = 0;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      if ((a >> i) & 1u) z |= std::uint64_t{1} << qubits[i];
    }
    table[a] = z;
  }
  return table;
}

// Eigenvalues of the reduced density matrix on the smaller side of the cut,
// descending. Negative round-off is clamped to zero.
std::vector<double> reduced_eigenvalues(const sim::QuantumState& psi,
                                        const Bipartition& cut) {
  const int n = psi.n_qubits();
  cut.validate(n);

  std::vector<int> side = cut.qubits_a;
  std::vector<int> rest;
  rest.reserve(n - side.size());
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(side.begin(), side.end(), q)) rest.push_back(q);
  }
  if (side.size() > rest.size()) std::swap(side, rest);

  const auto off_s = scatter_table(side);
  const auto off_r = scatter_table(rest);
  const auto amps = psi.amplitudes();

  Eigen::MatrixXcd m(off_s.size(), off_r.size());
  for (std::size_t b = 0; b < off_r.size(); ++b) {
    for (std::size_t a = 0; a < off_s.size(); ++a) {
      m(a, b) = amps[off_s[a] | off_r[b]];
    }
  }

  const Eigen::MatrixXcd rho = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("reduced density matrix eigensolve failed");
  }

  std::vector<double> lambdas(solver.eigenvalues().size());
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    lambdas[i] = std::max(0.0, solver.eigenvalues()(i));
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return lambdas;
}

double entropy_from_lambdas(const std::vector<double>& lambdas, LogBase base) {
  double s = 0.0;
  for (const double lam : lambdas) {
    if (lam > kSchmidtCutoff) s -= lam * std::log(lam);
  }
  if (base == LogBase::Two) s /= std::log(2.0);
  return s;
}

double outcome_probability(const sim::QuantumState& psi, int qubit,
                           int outcome) {
  const auto amps = psi.amplitudes();
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  double p = 0.0;
  for (std::uint64_t z = 0; z < amps.size(); ++z) {
    if (((z & bit) != 0) == (outcome != 0)) p += std::norm(amps[z]);
  }
  return p;
}

}  // namespace

Bipartition Bipartition::middle(int n_qubits) {
  Bipartition cut;
  for (int q = 0; q < n_qubits / 2; ++q) cut.qubits_a.push_back(q);
  cut.validate(n_qubits);
  return cut;
}

Bipartition Bipartition::single(int qubit) { return Bipartition{{qubit}}; }

void Bipartition::validate(int n_qubits) const {
  if (qubits_a.empty() ||
      qubits_a.size() >= static_cast<std::size_t>(n_qubits)) {
    throw std::invalid_argument("bipartition must be a proper non-empty subset");
  }
  for (std::size_t i = 0; i < qubits_a.size(); ++i) {
    if (qubits_a[i] < 0 || qubits_a[i] >= n_qubits) {
      throw std::invalid_argument("bipartition qubit out of range");
    }
    if (i > 0 && qubits_a[i] <= qubits_a[i - 1]) {
      throw std::invalid_argument(
          "bipartition qubits must be strictly increasing");
    }
  }
}

std::vector<double> schmidt_coefficients(const sim::QuantumState& psi,
                                         const Bipartition& cut) {
  auto lambdas = reduced_eigenvalues(psi, cut);
  for (double& lam : lambdas) lam = std::sqrt(lam);
  return lambdas;
}

double entanglement_entropy(const sim::QuantumState& psi,
                            const Bipartition& cut, LogBase base) {
  return entropy_from_lambdas(reduced_eigenvalues(psi, cut), base);
}

double average_single_qubit_entropy(const sim::QuantumState& psi,
                                    LogBase base) {
  double total = 0.0;
  for (int q = 0; q < psi.n_qubits(); ++q) {
    total += entanglement_entropy(psi, Bipartition::single(q), base);
  }
  return total / psi.n_qubits();
}

std::pair<sim::QuantumState, double> project_qubit(const sim::QuantumState& psi,
                                                   int qubit, int outcome) {
  if (qubit < 0 || qubit >= psi.n_qubits()) {
    throw std::invalid_argument("projection qubit out of range");
  }
  if (outcome != 0 && outcome != 1) {
    throw std::invalid_argument("projection outcome must be 0 or 1");
  }
  const double p = outcome_probability(psi, qubit, outcome);
  if (p <= kSchmidtCutoff) {
    throw std::domain_error("projection outcome has negligible probability");
  }

  sim::QuantumState branch(psi.n_qubits());
  const auto src = psi.amplitudes();
  const auto dst = branch.amplitudes();
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const double scale = 1.0 / std::sqrt(p);
  for (std::uint64_t z = 0; z < src.size(); ++z) {
    const bool keep = ((z & bit) != 0) == (outcome != 0);
    dst[z] = keep ? src[z] * scale : sim::cplx{};
  }
  return {std::move(branch), p};
}

double projected_entropy(const sim::QuantumState& psi, int qubit,
                         const Bipartition& cut, LogBase base) {
  double s = 0.0;
  for (int outcome = 0; outcome < 2; ++outcome) {
    const double p = outcome_probability(psi, qubit, outcome);
    if (p <= kSchmidtCutoff) continue;
    const auto branch = project_qubit(psi, qubit, outcome).first;
    s += p * entanglement_entropy(branch, cut, base);
  }
  return s;
}

double projected_average_single_qubit_entropy(const sim::QuantumState& psi,
                                              int qubit, LogBase base) {
  double s = 0.0;
  for (int outcome = 0; outcome < 2; ++outcome) {
    const double p = outcome_probability(psi, qubit, outcome);
    if (p <= kSchmidtCutoff) continue;
    const auto branch = project_qubit(psi, qubit, outcome).first;
    s += p * average_single_qubit_entropy(branch, base);
  }
  return s;
}

std::vector<SpectrumLevel> entanglement_spectrum(const sim::QuantumState& psi,
                                                 const Bipartition& cut) {
  const auto lambdas = reduced_eigenvalues(psi, cut);
  std::vector<SpectrumLevel> spectrum(lambdas.size());
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    spectrum[k].clamped = lambdas[k] <= kSchmidtCutoff;
    spectrum[k].xi = spectrum[k].clamped
                         ? std::numeric_limits<double>::infinity()
                         : -std::log(lambdas[k]);
  }
  return spectrum;
}

SpectrumAccumulator::SpectrumAccumulator(int n_levels)
    : sum_(n_levels, 0.0), sum_sq_(n_levels, 0.0), count_(n_levels, 0) {
  if (n_levels <= 0) throw std::invalid_argument("n_levels must be positive");
}

void SpectrumAccumulator::add(const std::vector<SpectrumLevel>& spectrum,
                              double ent_cut, double ent_single_avg) {
  if (spectrum.size() != sum_.size()) {
    throw std::invalid_argument("spectrum size mismatch");
  }
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    if (spectrum[k].clamped) continue;
    sum_[k] += spectrum[k].xi;
    sum_sq_[k] += spectrum[k].xi * spectrum[k].xi;
    ++count_[k];
  }
  ++n_samples_;
  ent_cut_sum_ += ent_cut;
  ent_single_sum_ += ent_single_avg;
}

void SpectrumAccumulator::merge(const SpectrumAccumulator& other) {
  if (other.sum_.size() != sum_.size()) {
    throw std::invalid_argument("accumulator size mismatch");
  }
  for (std::size_t k = 0; k < sum_.size(); ++k) {
    sum_[k] += other.sum_[k];
    sum_sq_[k] += other.sum_sq_[k];
    count_[k] += other.count_[k];
  }
  n_samples_ += other.n_samples_;
  ent_cut_sum_ += other.ent_cut_sum_;
  ent_single_sum_ += other.ent_single_sum_;
}

double SpectrumAccumulator::level_mean(int k) const {
  if (count_[k] == 0) return 0.0;
  return sum_[k] / count_[k];
}

double SpectrumAccumulator::level_std(int k) const {
  if (count_[k] == 0) return 0.0;
  const double mean = sum_[k] / count_[k];
  const double var = std::max(0.0, sum_sq_[k] / count_[k] - mean * mean);
  return std::sqrt(var);
}

double SpectrumAccumulator::mean_entropy_cut() const {
  return n_samples_ == 0 ? 0.0 : ent_cut_sum_ / n_samples_;
}

double SpectrumAccumulator::mean_entropy_single_avg() const {
  return n_samples_ == 0 ? 0.0 : ent_single_sum_ / n_samples_;
}

namespace {

void accumulate_middle_cut(SpectrumAccumulator& acc,
                           const sim::QuantumState& psi) {
  const Bipartition cut = Bipartition::middle(psi.n_qubits());
  acc.add(entanglement_spectrum(psi, cut), entanglement_entropy(psi, cut),
          average_single_qubit_entropy(psi));
}

}  // namespace

SpectrumAccumulator sample_circuit_spectrum(const ansatz::AnsatzProgram& program,
                                            const problem::CostHamiltonian& h,
                                            int n_samples, std::uint64_t seed) {
  if (n_samples <= 0) throw std::invalid_argument("n_samples must be positive");
  const int n = program.n_qubits;
  SpectrumAccumulator acc(1 << (n / 2));

  const ansatz::Evaluator evaluator(h, n, program.reference);
  std::mt19937_64 gen(seed);
  std::vector<double> params(2 * program.layers.size());
  for (int s = 0; s < n_samples; ++s) {
    for (double& p : params) p = rng::uniform(gen, 0.0, 20.0 * M_PI);
    const sim::QuantumState psi = evaluator.state(program.layers, params);
    accumulate_middle_cut(acc, psi);
  }
  return acc;
}

SpectrumAccumulator sample_haar_spectrum(int n_qubits, int n_samples,
                                         std::uint64_t seed) {
  if (n_samples <= 0) throw std::invalid_argument("n_samples must be positive");
  SpectrumAccumulator acc(1 << (n_qubits / 2));

  std::mt19937_64 gen(seed);
  for (int s = 0; s < n_samples; ++s) {
    sim::QuantumState psi(n_qubits);
    const auto amps = psi.amplitudes();
    double norm_sq = 0.0;
    for (auto& a : amps) {
      a = {rng::gaussian(gen), rng::gaussian(gen)};
      norm_sq += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amps) a *= scale;
    accumulate_middle_cut(acc, psi);
  }
  return acc;
}

}  // namespace aqlab::ent
