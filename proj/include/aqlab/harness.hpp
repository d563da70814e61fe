#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "aqlab/engine.hpp"
#include "aqlab/nelder_mead.hpp"
#include "aqlab/resources.hpp"

namespace aqlab::harness {

/// One experiment sweep: a family of random instances pushed through the
/// growth loop under a single algorithm/mode/pool/delta setting.
struct ExperimentConfig {
  int n_qubits = 6;
  int degree = 5;
  int n_instances = 50;
  std::uint64_t base_seed = 1000;  // instance k uses base_seed + k
  adapt::Algorithm algorithm = adapt::Algorithm::Adapt;
  adapt::SymmetryMode mode = adapt::SymmetryMode::Preserve;
  adapt::PoolConnectivity connectivity = adapt::PoolConnectivity::Full;
  double delta = 0.0;
  double f = 0.05;
  double gamma0 = 0.01;
  int p_max = -1;  // -1 resolves to 20 at n = 8 and 15 otherwise
  int jobs = 1;
  std::string out_dir;  // empty keeps everything in memory
  optimize::OptimizerConfig optimizer;

  int resolved_p_max() const;
  void validate() const;
  adapt::EngineConfig engine_config() const;
};

std::string to_json(const ExperimentConfig& cfg);
/// Starts from `base` and overrides the keys present in the text; unknown
/// keys throw std::invalid_argument.
ExperimentConfig config_from_json(const std::string& text,
                                  const ExperimentConfig& base = {});

struct LayerAggregate {
  int layer = 0;
  double mean_error = 0.0;
  double median_error = 0.0;
  double mean_ent_middle = 0.0;
  double median_ent_middle = 0.0;
  double mean_ent_single = 0.0;
  double median_ent_single = 0.0;
};

/// Per-layer mean and median across instances, layers 1..p_max.
struct AggregateSeries {
  std::vector<LayerAggregate> layers;
};

AggregateSeries aggregate_records(std::span<const adapt::RunRecord> records,
                                  int p_max);
std::string aggregate_csv(const AggregateSeries& agg);

/// algo,mode,pool,mean_cnot,std_cnot,mean_params,std_params,n_excluded over
/// the runs that crossed the error threshold.
struct ResourceSummary {
  adapt::Algorithm algorithm = adapt::Algorithm::Adapt;
  adapt::SymmetryMode mode = adapt::SymmetryMode::Preserve;
  adapt::PoolConnectivity connectivity = adapt::PoolConnectivity::Full;
  double mean_cnot = 0.0;
  double std_cnot = 0.0;  // population std over crossing runs
  double mean_params = 0.0;
  double std_params = 0.0;
  int n_excluded = 0;
  int n_counted = 0;
};

ResourceSummary summarize_resources(std::span<const adapt::RunRecord> records,
                                    const ExperimentConfig& cfg,
                                    double threshold = resources::kErrorThreshold);
std::string resources_csv(const ResourceSummary& summary);

struct SweepResult {
  ExperimentConfig config;  // with p_max resolved
  std::vector<adapt::RunRecord> records;  // surviving runs, instance order
  std::vector<int> failed_instances;
  AggregateSeries aggregate;
  ResourceSummary resources;
};

/// Runs every instance (in parallel when jobs > 1), writes per-instance and
/// summary files when out_dir is set, and aggregates in instance order.
/// Per-instance failures are logged to stderr and excluded.
SweepResult run_sweep(const ExperimentConfig& cfg);

struct DeltaSeriesRow {
  double delta = 0.0;
  int layer = 0;
  double mean_d_error = 0.0;
  double median_d_error = 0.0;
  double mean_d_ent_middle = 0.0;
  double median_d_ent_middle = 0.0;
  double mean_d_ent_single = 0.0;
  double median_d_ent_single = 0.0;
};

/// Per-instance metric differences against the delta = 0 run of the same
/// seed-locked instance set, aggregated per layer.
struct DeltaComparison {
  std::vector<DeltaSeriesRow> rows;
  std::vector<int> failed_instances;  // union across the compared sweeps
};

DeltaComparison run_delta_comparison(const ExperimentConfig& cfg,
                                     std::span<const double> deltas);
std::string delta_csv(const DeltaComparison& cmp);

/// Averaged random-parameter entanglement data. Ansatz rows carry the layer
/// index; Haar baseline rows use layer = -1. Per layer, level rows hold
/// cross-graph statistics of per-graph mean spectrum levels, and the summary
/// row (level_index = -1) holds mean entropies: mean_xi column = middle-cut
/// entropy, std_xi column = single-qubit-average entropy.
struct SpectrumRow {
  int layer = 0;
  int level_index = 0;
  double mean_xi = 0.0;
  double std_xi = 0.0;
};

struct SpectrumStudy {
  std::vector<SpectrumRow> rows;
};

SpectrumStudy run_spectrum_study(const ExperimentConfig& cfg,
                                 int n_param_samples, int n_graphs);
SpectrumStudy haar_baseline_study(int n_qubits, int n_samples,
                                  std::uint64_t base_seed);
std::string spectrum_csv(const SpectrumStudy& study);

struct ScatterPoint {
  int instance_id = 0;
  std::string algo;
  double max_ent_middle = 0.0;
  double final_norm_error = 0.0;
};

struct ScatterResult {
  std::vector<ScatterPoint> points;
  double spearman_rho = 0.0;
};

/// Per record: the largest middle-cut entropy over optimized layers >= 1
/// against the final normalized error, with the rank correlation of the two
/// columns across records.
ScatterResult scatter_max_entropy_vs_final_error(
    std::span<const adapt::RunRecord> records);
std::string scatter_csv(const ScatterResult& scatter);

/// Spearman rho with average ranks on ties; 0 when either column is constant.
double spearman_rank_correlation(std::span<const double> x,
                                 std::span<const double> y);

/// Reduced view of one emitted run CSV (a single instance).
struct ParsedRun {
  int instance_id = 0;
  std::string algo;
  std::string mode;
  std::string pool;
  double delta = 0.0;
  struct Row {
    int layer = 0;
    double energy = 0.0;
    double norm_error = 0.0;
    double ent_middle = 0.0;
    double ent_single_avg = 0.0;
    std::string mixer_token;
    long cnot_cumulative = 0;
    int n_params = 0;
    long optimizer_evals = 0;
  };
  std::vector<Row> rows;
};

ParsedRun parse_run_csv(std::istream& is);
/// All runs/run_*.csv under a sweep output directory, sorted by filename.
std::vector<ParsedRun> read_run_dir(const std::string& sweep_dir);
/// RunRecord with the fields scatter/aggregation need (truth left empty).
adapt::RunRecord run_record_from_parsed(const ParsedRun& parsed);

}  // namespace aqlab::harness
