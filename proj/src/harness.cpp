#include "aqlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>

#include "aqlab/ansatz.hpp"
#include "aqlab/csv.hpp"
#include "aqlab/entanglement.hpp"
#include "aqlab/rng.hpp"
#include "json.hpp"

namespace aqlab::harness {

namespace fs = std::filesystem;
using csv::fmt;
using nlohmann::json;

int ExperimentConfig::resolved_p_max() const {
  if (p_max >= 0) return p_max;
  return n_qubits == 8 ? 20 : 15;
}

void ExperimentConfig::validate() const {
  if (n_qubits < 2 || n_qubits > sim::kMaxQubits) {
    throw std::invalid_argument("n_qubits out of range");
  }
  if (degree < 1 || degree >= n_qubits) {
    throw std::invalid_argument("degree must be in [1, n_qubits - 1]");
  }
  if ((n_qubits * degree) % 2 != 0) {
    throw std::invalid_argument("n_qubits * degree must be even");
  }
  if (n_instances < 1) throw std::invalid_argument("n_instances must be positive");
  if (f < 0.0) throw std::invalid_argument("f must be nonnegative");
  if (gamma0 <= 0.0) throw std::invalid_argument("gamma0 must be positive");
  if (jobs < 1) throw std::invalid_argument("jobs must be positive");
  if (algorithm == adapt::Algorithm::Adapt &&
      connectivity == adapt::PoolConnectivity::Ladder && n_qubits % 2 != 0) {
    throw std::invalid_argument("ladder pools require an even qubit count");
  }
}

adapt::EngineConfig ExperimentConfig::engine_config() const {
  adapt::EngineConfig cfg;
  cfg.algorithm = algorithm;
  cfg.mode = mode;
  cfg.connectivity = connectivity;
  cfg.p_max = resolved_p_max();
  cfg.delta = delta;
  cfg.gamma0 = gamma0;
  cfg.optimizer = optimizer;
  return cfg;
}

std::string to_json(const ExperimentConfig& cfg) {
  json j;
  j["n_qubits"] = cfg.n_qubits;
  j["degree"] = cfg.degree;
  j["n_instances"] = cfg.n_instances;
  j["base_seed"] = cfg.base_seed;
  j["algo"] = adapt::algorithm_name(cfg.algorithm);
  j["mode"] = adapt::mode_name(cfg.mode);
  j["pool"] = adapt::connectivity_name(cfg.connectivity);
  j["delta"] = cfg.delta;
  j["f"] = cfg.f;
  j["gamma0"] = cfg.gamma0;
  j["p_max"] = cfg.p_max;
  j["jobs"] = cfg.jobs;
  j["out_dir"] = cfg.out_dir;
  j["optimizer"] = {{"x_tolerance", cfg.optimizer.x_tolerance},
                    {"f_tolerance", cfg.optimizer.f_tolerance},
                    {"max_evaluations", cfg.optimizer.max_evaluations},
                    {"simplex_step", cfg.optimizer.simplex_step},
                    {"shrink_restart", cfg.optimizer.shrink_restart}};
  return j.dump(2);
}

ExperimentConfig config_from_json(const std::string& text,
                                  const ExperimentConfig& base) {
  const json j = json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");

  ExperimentConfig cfg = base;
  for (const auto& [key, value] : j.items()) {
    if (key == "n_qubits") cfg.n_qubits = value.get<int>();
    else if (key == "degree") cfg.degree = value.get<int>();
    else if (key == "n_instances") cfg.n_instances = value.get<int>();
    else if (key == "base_seed") cfg.base_seed = value.get<std::uint64_t>();
    else if (key == "algo") cfg.algorithm = adapt::algorithm_from_name(value.get<std::string>());
    else if (key == "mode") cfg.mode = adapt::mode_from_name(value.get<std::string>());
    else if (key == "pool") cfg.connectivity = adapt::connectivity_from_name(value.get<std::string>());
    else if (key == "delta") cfg.delta = value.get<double>();
    else if (key == "f") cfg.f = value.get<double>();
    else if (key == "gamma0") cfg.gamma0 = value.get<double>();
    else if (key == "p_max") cfg.p_max = value.get<int>();
    else if (key == "jobs") cfg.jobs = value.get<int>();
    else if (key == "out_dir") cfg.out_dir = value.get<std::string>();
    else if (key == "optimizer") {
      if (!value.is_object()) throw std::invalid_argument("optimizer must be an object");
      for (const auto& [opt_key, opt_value] : value.items()) {
        if (opt_key == "x_tolerance") cfg.optimizer.x_tolerance = opt_value.get<double>();
        else if (opt_key == "f_tolerance") cfg.optimizer.f_tolerance = opt_value.get<double>();
        else if (opt_key == "max_evaluations") cfg.optimizer.max_evaluations = opt_value.get<std::size_t>();
        else if (opt_key == "simplex_step") cfg.optimizer.simplex_step = opt_value.get<double>();
        else if (opt_key == "shrink_restart") cfg.optimizer.shrink_restart = opt_value.get<bool>();
        else throw std::invalid_argument("unknown optimizer key: " + opt_key);
      }
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
  return cfg;
}

namespace {

double mean_of(std::span<const double> values) {
  double total = 0.0;
  for (const double v : values) total += v;
  return values.empty() ? 0.0 : total / values.size();
}

double population_std(std::span<const double> values) {
  if (values.empty()) return 0.0;
  const double mean = mean_of(values);
  double ss = 0.0;
  for (const double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / values.size());
}

double median_of(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

void write_text_atomic(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string());
    os << content;
    if (!os.good()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string padded_id(int k) {
  std::ostringstream os;
  os.width(3);
  os.fill('0');
  os << k;
  return os.str();
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

AggregateSeries aggregate_records(std::span<const adapt::RunRecord> records,
                                  int p_max) {
  AggregateSeries agg;
  if (records.empty()) return agg;
  for (const auto& rec : records) {
    if (rec.layers.size() != static_cast<std::size_t>(p_max) + 1) {
      throw std::invalid_argument("record layer count does not match p_max");
    }
  }

  agg.layers.reserve(p_max);
  for (int l = 1; l <= p_max; ++l) {
    std::vector<double> err, mid, single;
    err.reserve(records.size());
    for (const auto& rec : records) {
      err.push_back(rec.layers[l].norm_error);
      mid.push_back(rec.layers[l].ent_middle);
      single.push_back(rec.layers[l].ent_single_avg);
    }
    LayerAggregate row;
    row.layer = l;
    row.mean_error = mean_of(err);
    row.median_error = median_of(err);
    row.mean_ent_middle = mean_of(mid);
    row.median_ent_middle = median_of(mid);
    row.mean_ent_single = mean_of(single);
    row.median_ent_single = median_of(single);
    agg.layers.push_back(row);
  }
  return agg;
}

std::string aggregate_csv(const AggregateSeries& agg) {
  std::string out =
      "layer,mean_error,median_error,mean_ent_middle,median_ent_middle,"
      "mean_ent_single,median_ent_single\n";
  for (const auto& row : agg.layers) {
    out += std::to_string(row.layer) + ',' + fmt(row.mean_error) + ',' +
           fmt(row.median_error) + ',' + fmt(row.mean_ent_middle) + ',' +
           fmt(row.median_ent_middle) + ',' + fmt(row.mean_ent_single) + ',' +
           fmt(row.median_ent_single) + '\n';
  }
  return out;
}

ResourceSummary summarize_resources(std::span<const adapt::RunRecord> records,
                                    const ExperimentConfig& cfg,
                                    double threshold) {
  ResourceSummary summary;
  summary.algorithm = cfg.algorithm;
  summary.mode = cfg.mode;
  summary.connectivity = cfg.connectivity;

  std::vector<double> cnots, params;
  for (const auto& rec : records) {
    std::vector<resources::LayerUsage> usage;
    usage.reserve(rec.layers.size());
    for (const auto& t : rec.layers) {
      usage.push_back({t.norm_error, t.cnot_cumulative, t.n_params});
    }
    const auto count = resources::resources_to_threshold(usage, threshold);
    if (!count.reached_threshold) {
      ++summary.n_excluded;
      continue;
    }
    cnots.push_back(static_cast<double>(count.cnot_total));
    params.push_back(static_cast<double>(count.n_parameters));
  }
  summary.n_counted = static_cast<int>(cnots.size());
  summary.mean_cnot = mean_of(cnots);
  summary.std_cnot = population_std(cnots);
  summary.mean_params = mean_of(params);
  summary.std_params = population_std(params);
  return summary;
}

std::string resources_csv(const ResourceSummary& summary) {
  std::string out =
      "algo,mode,pool,mean_cnot,std_cnot,mean_params,std_params,n_excluded\n";
  out += adapt::algorithm_name(summary.algorithm) + std::string(1, ',') +
         adapt::mode_name(summary.mode) + ',' +
         adapt::connectivity_name(summary.connectivity) + ',' +
         fmt(summary.mean_cnot) + ',' + fmt(summary.std_cnot) + ',' +
         fmt(summary.mean_params) + ',' + fmt(summary.std_params) + ',' +
         std::to_string(summary.n_excluded) + '\n';
  return out;
}

namespace {

void write_instance_files(const std::string& out_dir,
                          const problem::ProblemInstance& inst,
                          const adapt::RunRecord& rec) {
  const std::string id = padded_id(inst.id);
  write_text_atomic(fs::path(out_dir) / "instances" / ("instance_" + id + ".json"),
                    problem::to_json(inst) + "\n");

  std::ostringstream run;
  run << adapt::run_csv_header() << '\n';
  adapt::append_run_csv(run, rec);
  write_text_atomic(fs::path(out_dir) / "runs" / ("run_" + id + ".csv"), run.str());

  write_text_atomic(fs::path(out_dir) / "runs" / ("ansatz_" + id + ".json"),
                    ansatz::to_json(rec.program) + "\n");
}

}  // namespace

SweepResult run_sweep(const ExperimentConfig& cfg_in) {
  ExperimentConfig cfg = cfg_in;
  cfg.p_max = cfg.resolved_p_max();
  cfg.validate();

  const bool emit = !cfg.out_dir.empty();
  if (emit) {
    fs::create_directories(fs::path(cfg.out_dir) / "instances");
    fs::create_directories(fs::path(cfg.out_dir) / "runs");
  }

  const adapt::EngineConfig engine_cfg = cfg.engine_config();
  std::vector<std::optional<adapt::RunRecord>> slots(cfg.n_instances);
  std::vector<int> failed;
  std::mutex failure_mutex;
  std::atomic<int> next{0};

  auto worker = [&] {
    for (int k; (k = next.fetch_add(1)) < cfg.n_instances;) {
      try {
        const auto inst = problem::make_instance(k, cfg.n_qubits, cfg.degree,
                                                 cfg.base_seed + k, cfg.f);
        auto rec = adapt::grow_and_optimize(inst, engine_cfg);
        if (emit) write_instance_files(cfg.out_dir, inst, rec);
        slots[k] = std::move(rec);
      } catch (const std::exception& e) {
        const std::lock_guard lock(failure_mutex);
        failed.push_back(k);
        std::cerr << "instance " << k << " failed: " << e.what() << '\n';
      }
    }
  };

  const int n_workers = std::min(std::max(cfg.jobs, 1), cfg.n_instances);
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(n_workers);
    for (int t = 0; t < n_workers; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  std::sort(failed.begin(), failed.end());

  SweepResult result;
  result.config = cfg;
  result.failed_instances = std::move(failed);
  for (auto& slot : slots) {
    if (slot) result.records.push_back(std::move(*slot));
  }
  result.aggregate = aggregate_records(result.records, cfg.p_max);
  result.resources = summarize_resources(result.records, cfg);

  if (emit) {
    write_text_atomic(fs::path(cfg.out_dir) / "aggregate.csv",
                      aggregate_csv(result.aggregate));
    write_text_atomic(fs::path(cfg.out_dir) / "resources.csv",
                      resources_csv(result.resources));
    write_text_atomic(fs::path(cfg.out_dir) / "config.json", to_json(cfg) + "\n");
  }
  if (!result.failed_instances.empty()) {
    std::cerr << result.failed_instances.size() << " of " << cfg.n_instances
              << " instances failed and were excluded\n";
  }
  return result;
}

DeltaComparison run_delta_comparison(const ExperimentConfig& cfg_in,
                                     std::span<const double> deltas) {
  if (deltas.empty()) throw std::invalid_argument("no delta values given");

  ExperimentConfig cfg = cfg_in;
  cfg.p_max = cfg.resolved_p_max();
  cfg.validate();

  ExperimentConfig sub = cfg;
  sub.out_dir.clear();

  sub.delta = 0.0;
  const SweepResult base = run_sweep(sub);

  std::vector<SweepResult> variants;
  variants.reserve(deltas.size());
  for (const double d : deltas) {
    sub.delta = d;
    variants.push_back(run_sweep(sub));
  }

  // Only instances that survived every compared sweep enter the differences.
  std::vector<int> common;
  for (const auto& rec : base.records) common.push_back(rec.instance_id);
  auto intersect = [&common](const SweepResult& sweep) {
    std::vector<int> kept;
    for (const int id : common) {
      for (const auto& rec : sweep.records) {
        if (rec.instance_id == id) {
          kept.push_back(id);
          break;
        }
      }
    }
    common = kept;
  };
  for (const auto& v : variants) intersect(v);

  auto records_by_id = [](const SweepResult& sweep) {
    std::unordered_map<int, const adapt::RunRecord*> map;
    for (const auto& rec : sweep.records) map[rec.instance_id] = &rec;
    return map;
  };
  const auto base_map = records_by_id(base);

  DeltaComparison cmp;
  for (std::size_t v = 0; v < variants.size(); ++v) {
    const auto var_map = records_by_id(variants[v]);
    for (int l = 1; l <= cfg.p_max; ++l) {
      std::vector<double> d_err, d_mid, d_single;
      d_err.reserve(common.size());
      for (const int id : common) {
        const auto& rv = var_map.at(id)->layers[l];
        const auto& rb = base_map.at(id)->layers[l];
        d_err.push_back(rv.norm_error - rb.norm_error);
        d_mid.push_back(rv.ent_middle - rb.ent_middle);
        d_single.push_back(rv.ent_single_avg - rb.ent_single_avg);
      }
      DeltaSeriesRow row;
      row.delta = deltas[v];
      row.layer = l;
      row.mean_d_error = mean_of(d_err);
      row.median_d_error = median_of(d_err);
      row.mean_d_ent_middle = mean_of(d_mid);
      row.median_d_ent_middle = median_of(d_mid);
      row.mean_d_ent_single = mean_of(d_single);
      row.median_d_ent_single = median_of(d_single);
      cmp.rows.push_back(row);
    }
  }

  std::vector<int> failed = base.failed_instances;
  for (const auto& v : variants) {
    failed.insert(failed.end(), v.failed_instances.begin(),
                  v.failed_instances.end());
  }
  std::sort(failed.begin(), failed.end());
  failed.erase(std::unique(failed.begin(), failed.end()), failed.end());
  cmp.failed_instances = std::move(failed);

  if (!cfg.out_dir.empty()) {
    fs::create_directories(cfg.out_dir);
    write_text_atomic(fs::path(cfg.out_dir) / "delta_comparison.csv", delta_csv(cmp));
  }
  return cmp;
}

std::string delta_csv(const DeltaComparison& cmp) {
  std::string out =
      "delta,layer,mean_d_error,median_d_error,mean_d_ent_middle,"
      "median_d_ent_middle,mean_d_ent_single,median_d_ent_single\n";
  for (const auto& row : cmp.rows) {
    out += fmt(row.delta) + ',' + std::to_string(row.layer) + ',' +
           fmt(row.mean_d_error) + ',' + fmt(row.median_d_error) + ',' +
           fmt(row.mean_d_ent_middle) + ',' + fmt(row.median_d_ent_middle) +
           ',' + fmt(row.mean_d_ent_single) + ',' +
           fmt(row.median_d_ent_single) + '\n';
  }
  return out;
}

namespace {

struct GraphSpectrum {
  // per layer: per-level mean xi of the graph's samples (levels that never
  // unclamp are absent), plus the graph's mean entropies
  std::vector<std::vector<std::optional<double>>> level_means;
  std::vector<double> ent_cut;
  std::vector<double> ent_single;
};

void append_accumulator_rows(SpectrumStudy& study, int layer_tag,
                             const ent::SpectrumAccumulator& acc) {
  for (int k = 0; k < acc.n_levels(); ++k) {
    if (acc.level_count(k) == 0) continue;
    study.rows.push_back({layer_tag, k, acc.level_mean(k), acc.level_std(k)});
  }
  study.rows.push_back(
      {layer_tag, -1, acc.mean_entropy_cut(), acc.mean_entropy_single_avg()});
}

}  // namespace

SpectrumStudy run_spectrum_study(const ExperimentConfig& cfg_in,
                                 int n_param_samples, int n_graphs) {
  if (n_param_samples < 1) throw std::invalid_argument("need at least one sample");
  if (n_graphs < 1) throw std::invalid_argument("need at least one graph");

  ExperimentConfig cfg = cfg_in;
  cfg.p_max = cfg.resolved_p_max();
  cfg.validate();
  const int p_max = cfg.p_max;
  const int n_levels = 1 << (cfg.n_qubits / 2);

  std::cerr << "substream spectrum-params[0] seed="
            << rng::substream_seed(cfg.base_seed, "spectrum-params", 0)
            << ", haar seed=" << rng::substream_seed(cfg.base_seed, "haar", 0)
            << '\n';

  std::vector<GraphSpectrum> graphs;
  graphs.reserve(n_graphs);
  for (int g = 0; g < n_graphs; ++g) {
    const auto inst = problem::make_instance(g, cfg.n_qubits, cfg.degree,
                                             cfg.base_seed + g, cfg.f);
    const problem::CostHamiltonian& h =
        cfg.mode == adapt::SymmetryMode::Preserve ? inst.h : inst.h_field;

    ansatz::AnsatzProgram grown;
    if (cfg.algorithm == adapt::Algorithm::Adapt) {
      grown = adapt::grow_and_optimize(inst, cfg.engine_config()).program;
    } else {
      grown.n_qubits = cfg.n_qubits;
      grown.reference = ansatz::Reference::AllPlus;
      for (int l = 0; l < p_max; ++l) {
        grown.layers.push_back({sim::MixerOperator::global_x()});
      }
    }

    GraphSpectrum gs;
    for (int l = 0; l <= p_max; ++l) {
      ansatz::AnsatzProgram prefix;
      prefix.n_qubits = grown.n_qubits;
      prefix.reference = grown.reference;
      prefix.layers.assign(grown.layers.begin(), grown.layers.begin() + l);

      const std::uint64_t seed = rng::substream_seed(
          cfg.base_seed, "spectrum-params",
          static_cast<std::uint64_t>(g) * (p_max + 1) + l);
      const auto acc = ent::sample_circuit_spectrum(prefix, h, n_param_samples, seed);

      std::vector<std::optional<double>> means(n_levels);
      for (int k = 0; k < n_levels; ++k) {
        if (acc.level_count(k) > 0) means[k] = acc.level_mean(k);
      }
      gs.level_means.push_back(std::move(means));
      gs.ent_cut.push_back(acc.mean_entropy_cut());
      gs.ent_single.push_back(acc.mean_entropy_single_avg());
    }
    graphs.push_back(std::move(gs));
  }

  SpectrumStudy study;
  for (int l = 0; l <= p_max; ++l) {
    for (int k = 0; k < n_levels; ++k) {
      std::vector<double> values;
      for (const auto& gs : graphs) {
        if (gs.level_means[l][k]) values.push_back(*gs.level_means[l][k]);
      }
      if (values.empty()) continue;
      study.rows.push_back({l, k, mean_of(values), population_std(values)});
    }
    std::vector<double> cut, single;
    for (const auto& gs : graphs) {
      cut.push_back(gs.ent_cut[l]);
      single.push_back(gs.ent_single[l]);
    }
    study.rows.push_back({l, -1, mean_of(cut), mean_of(single)});
  }

  const auto haar = ent::sample_haar_spectrum(
      cfg.n_qubits, n_param_samples * n_graphs,
      rng::substream_seed(cfg.base_seed, "haar", 0));
  append_accumulator_rows(study, -1, haar);

  if (!cfg.out_dir.empty()) {
    fs::create_directories(cfg.out_dir);
    write_text_atomic(fs::path(cfg.out_dir) / "spectrum.csv", spectrum_csv(study));
  }
  return study;
}

SpectrumStudy haar_baseline_study(int n_qubits, int n_samples,
                                  std::uint64_t base_seed) {
  const auto acc = ent::sample_haar_spectrum(
      n_qubits, n_samples, rng::substream_seed(base_seed, "haar", 0));
  SpectrumStudy study;
  append_accumulator_rows(study, -1, acc);
  return study;
}

std::string spectrum_csv(const SpectrumStudy& study) {
  std::string out = "layer,level_index,mean_xi,std_xi\n";
  for (const auto& row : study.rows) {
    out += std::to_string(row.layer) + ',' + std::to_string(row.level_index) +
           ',' + fmt(row.mean_xi) + ',' + fmt(row.std_xi) + '\n';
  }
  return out;
}

ScatterResult scatter_max_entropy_vs_final_error(
    std::span<const adapt::RunRecord> records) {
  ScatterResult result;
  std::vector<double> max_ents, finals;
  for (const auto& rec : records) {
    if (rec.layers.empty()) continue;
    double max_ent = 0.0;
    for (std::size_t l = 1; l < rec.layers.size(); ++l) {
      max_ent = std::max(max_ent, rec.layers[l].ent_middle);
    }
    const double final_error = rec.layers.back().norm_error;
    result.points.push_back({rec.instance_id,
                             adapt::algorithm_name(rec.algorithm), max_ent,
                             final_error});
    max_ents.push_back(max_ent);
    finals.push_back(final_error);
  }
  result.spearman_rho = spearman_rank_correlation(max_ents, finals);
  return result;
}

std::string scatter_csv(const ScatterResult& scatter) {
  std::string out = "instance_id,algo,max_ent_middle,final_norm_error\n";
  for (const auto& p : scatter.points) {
    out += std::to_string(p.instance_id) + ',' + p.algo + ',' +
           fmt(p.max_ent_middle) + ',' + fmt(p.final_norm_error) + '\n';
  }
  return out;
}

namespace {

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });

  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double shared = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = shared;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman_rank_correlation(std::span<const double> x,
                                 std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
  const std::size_t n = x.size();
  if (n < 2) return 0.0;

  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double mx = mean_of(rx);
  const double my = mean_of(ry);
  double cov = 0.0, vx = 0.0, vy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cov += (rx[i] - mx) * (ry[i] - my);
    vx += (rx[i] - mx) * (rx[i] - mx);
    vy += (ry[i] - my) * (ry[i] - my);
  }
  if (vx == 0.0 || vy == 0.0) return 0.0;
  return cov / std::sqrt(vx * vy);
}

ParsedRun parse_run_csv(std::istream& is) {
  std::string header;
  if (!std::getline(is, header) || header != adapt::run_csv_header()) {
    throw std::invalid_argument("unexpected run CSV header");
  }

  ParsedRun run;
  bool first = true;
  for (std::string line; std::getline(is, line);) {
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 14) {
      throw std::invalid_argument("run CSV row must have 14 fields");
    }
    const int id = static_cast<int>(csv::parse_long(fields[0]));
    if (first) {
      run.instance_id = id;
      run.algo = fields[1];
      run.mode = fields[2];
      run.pool = fields[3];
      run.delta = csv::parse_double(fields[4]);
      first = false;
    } else if (id != run.instance_id) {
      throw std::invalid_argument("run CSV mixes instance ids");
    }

    ParsedRun::Row row;
    row.layer = static_cast<int>(csv::parse_long(fields[5]));
    row.energy = csv::parse_double(fields[6]);
    row.norm_error = csv::parse_double(fields[7]);
    row.ent_middle = csv::parse_double(fields[8]);
    row.ent_single_avg = csv::parse_double(fields[9]);
    row.mixer_token = fields[10];
    row.cnot_cumulative = csv::parse_long(fields[11]);
    row.n_params = static_cast<int>(csv::parse_long(fields[12]));
    row.optimizer_evals = csv::parse_long(fields[13]);
    run.rows.push_back(std::move(row));
  }
  if (first) throw std::invalid_argument("run CSV has no data rows");
  return run;
}

std::vector<ParsedRun> read_run_dir(const std::string& sweep_dir) {
  const fs::path runs = fs::path(sweep_dir) / "runs";
  if (!fs::is_directory(runs)) {
    throw std::invalid_argument("no runs directory under " + sweep_dir);
  }

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(runs)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.rfind("run_", 0) == 0 &&
        entry.path().extension() == ".csv") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<ParsedRun> parsed;
  parsed.reserve(files.size());
  for (const auto& file : files) {
    std::ifstream is(file);
    if (!is) throw std::runtime_error("cannot open " + file.string());
    parsed.push_back(parse_run_csv(is));
  }
  return parsed;
}

adapt::RunRecord run_record_from_parsed(const ParsedRun& parsed) {
  adapt::RunRecord rec;
  rec.instance_id = parsed.instance_id;
  rec.algorithm = adapt::algorithm_from_name(parsed.algo);
  rec.mode = adapt::mode_from_name(parsed.mode);
  rec.connectivity = adapt::connectivity_from_name(parsed.pool);
  rec.delta = parsed.delta;
  rec.layers.reserve(parsed.rows.size());
  for (const auto& row : parsed.rows) {
    adapt::LayerTrace t;
    t.layer = row.layer;
    t.energy = row.energy;
    t.norm_error = row.norm_error;
    t.ent_middle = row.ent_middle;
    t.ent_single_avg = row.ent_single_avg;
    t.mixer_token = row.mixer_token;
    t.cnot_cumulative = row.cnot_cumulative;
    t.n_params = row.n_params;
    t.optimizer_evals = row.optimizer_evals;
    rec.layers.push_back(std::move(t));
  }
  return rec;
}

}  // namespace aqlab::harness
