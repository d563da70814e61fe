#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "aqlab/ansatz.hpp"
#include "aqlab/problem.hpp"
#include "aqlab/state.hpp"

namespace aqlab::ent {

/// Eigenvalues of a reduced density matrix below this are treated as exact
/// zeros: excluded from entropies and reported as clamped spectrum levels.
inline constexpr double kSchmidtCutoff = 1e-12;

enum class LogBase { Two, Natural };

/// Subset of qubit indices forming the A side of a bipartition.
struct Bipartition {
  std::vector<int> qubits_a;  // strictly increasing, 1 <= size <= n-1

  static Bipartition middle(int n_qubits);  // {0, ..., n/2 - 1}
  static Bipartition single(int qubit);     // {qubit}
  void validate(int n_qubits) const;
};

/// Schmidt coefficients (singular values of the amplitude matrix), descending.
/// Sized by the smaller subsystem dimension; the squares sum to 1.
std::vector<double> schmidt_coefficients(const sim::QuantumState& psi,
                                         const Bipartition& cut);

/// Bipartite entanglement entropy of |psi><psi| across the cut.
double entanglement_entropy(const sim::QuantumState& psi,
                            const Bipartition& cut,
                            LogBase base = LogBase::Two);

/// Mean of the n single-qubit entropies.
double average_single_qubit_entropy(const sim::QuantumState& psi,
                                    LogBase base = LogBase::Two);

/// Projective measurement of one qubit: renormalized post-measurement state
/// (still n qubits) and the outcome probability. Throws std::domain_error if
/// the outcome has probability <= kSchmidtCutoff.
std::pair<sim::QuantumState, double> project_qubit(const sim::QuantumState& psi,
                                                   int qubit, int outcome);

/// Probability-weighted average of the branch entropies after measuring
/// `qubit` in the computational basis. Branches with negligible probability
/// contribute zero.
double projected_entropy(const sim::QuantumState& psi, int qubit,
                         const Bipartition& cut, LogBase base = LogBase::Two);

/// Probability-weighted average (over measurement branches of `qubit`) of the
/// mean single-qubit entropy. The average inside each branch runs over all n
/// qubits; the measured one contributes zero there by construction.
double projected_average_single_qubit_entropy(const sim::QuantumState& psi,
                                              int qubit,
                                              LogBase base = LogBase::Two);

/// Entanglement spectrum: xi_k = -ln(lambda_k), ascending in xi. Levels with
/// lambda <= kSchmidtCutoff are clamped: xi holds the +infinity sentinel and
/// averaged spectra exclude them. exp(-xi) summed over all levels is 1.
struct SpectrumLevel {
  double xi = 0.0;
  bool clamped = false;
};
std::vector<SpectrumLevel> entanglement_spectrum(const sim::QuantumState& psi,
                                                 const Bipartition& cut);

/// Streaming per-level moments across samples. Clamped levels are excluded
/// from that level's mean/std but the level keeps its index.
class SpectrumAccumulator {
 public:
  explicit SpectrumAccumulator(int n_levels);

  void add(const std::vector<SpectrumLevel>& spectrum, double ent_cut,
           double ent_single_avg);
  void merge(const SpectrumAccumulator& other);

  int n_levels() const { return static_cast<int>(sum_.size()); }
  long n_samples() const { return n_samples_; }
  long level_count(int k) const { return count_[k]; }
  double level_mean(int k) const;
  double level_std(int k) const;  // population std
  double mean_entropy_cut() const;
  double mean_entropy_single_avg() const;

 private:
  std::vector<double> sum_;
  std::vector<double> sum_sq_;
  std::vector<long> count_;
  long n_samples_ = 0;
  double ent_cut_sum_ = 0.0;
  double ent_single_sum_ = 0.0;
};

/// Evaluates a fixed mixer sequence at random parameters drawn uniformly
/// from [0, 20*pi) and accumulates middle-cut spectra and entropies.
SpectrumAccumulator sample_circuit_spectrum(const ansatz::AnsatzProgram& program,
                                            const problem::CostHamiltonian& h,
                                            int n_samples, std::uint64_t seed);

/// Same statistics for Haar-random states (Gaussian amplitudes, normalized).
SpectrumAccumulator sample_haar_spectrum(int n_qubits, int n_samples,
                                         std::uint64_t seed);

}  // namespace aqlab::ent
