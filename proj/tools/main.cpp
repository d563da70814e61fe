// Command line front end for the sweep, delta, spectrum, scatter, and
// baseline studies. Emits plot-ready CSV files; exit code 0 on full
// success, 2 when some instances failed and were excluded.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aqlab/csv.hpp"
#include "aqlab/harness.hpp"

namespace {

namespace fs = std::filesystem;
using namespace aqlab;

struct CommonFlags {
  harness::ExperimentConfig cfg;
  std::string algo = "adapt";
  std::string mode = "preserve";
  std::string pool = "full";
  std::string config_path;
};

void add_common_flags(CLI::App& app, CommonFlags& flags) {
  app.add_option("--qubits", flags.cfg.n_qubits, "number of qubits");
  app.add_option("--degree", flags.cfg.degree, "graph degree");
  app.add_option("--instances", flags.cfg.n_instances, "number of instances");
  app.add_option("--seed", flags.cfg.base_seed, "base seed");
  app.add_option("--algo", flags.algo, "adapt or qaoa");
  app.add_option("--mode", flags.mode, "preserve or break");
  app.add_option("--pool", flags.pool, "full, ladder, or linear");
  app.add_option("--delta", flags.cfg.delta, "two-qubit selection penalty");
  app.add_option("--f", flags.cfg.f, "symmetry-breaking field strength");
  app.add_option("--gamma0", flags.cfg.gamma0, "probe angle / warm-start gamma");
  app.add_option("--layers", flags.cfg.p_max, "maximum layer count");
  app.add_option("--out", flags.cfg.out_dir, "output directory");
  app.add_option("--jobs", flags.cfg.jobs, "worker pool size");
  app.add_option("--config", flags.config_path,
                 "JSON config file; its keys override flags");
}

harness::ExperimentConfig resolve_config(const CommonFlags& flags) {
  harness::ExperimentConfig cfg = flags.cfg;
  cfg.algorithm = adapt::algorithm_from_name(flags.algo);
  cfg.mode = adapt::mode_from_name(flags.mode);
  cfg.connectivity = adapt::connectivity_from_name(flags.pool);
  if (!flags.config_path.empty()) {
    std::ifstream is(flags.config_path);
    if (!is) throw std::runtime_error("cannot open " + flags.config_path);
    std::ostringstream os;
    os << is.rdbuf();
    cfg = harness::config_from_json(os.str(), cfg);
  }
  return cfg;
}

int finish(std::size_t n_failed, int n_total) {
  if (n_failed == 0) return 0;
  std::cerr << n_failed << " of " << n_total << " instances failed\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted Max-Cut QAOA / adaptive-ansatz laboratory"};
  app.require_subcommand(1);

  CommonFlags flags;

  auto* sweep = app.add_subcommand("sweep", "optimize a seeded instance set");
  add_common_flags(*sweep, flags);

  auto* delta = app.add_subcommand("delta", "compare selection penalties");
  add_common_flags(*delta, flags);
  std::vector<double> delta_values = {0.1, -0.1, 0.5, -0.5};
  delta->add_option("--deltas", delta_values, "penalty values to compare");

  auto* spectrum = app.add_subcommand("spectrum", "random-parameter spectrum study");
  add_common_flags(*spectrum, flags);
  int n_samples = 200;
  int n_graphs = 10;
  spectrum->add_option("--samples", n_samples, "parameter samples per layer");
  spectrum->add_option("--graphs", n_graphs, "graph instances to average");

  auto* scatter = app.add_subcommand("scatter", "peak entanglement vs final error");
  std::string runs_dir;
  std::string scatter_out;
  scatter->add_option("--runs", runs_dir, "sweep output directory to read")
      ->required();
  scatter->add_option("--out", scatter_out, "where to write scatter.csv");

  auto* baseline = app.add_subcommand("baseline", "Haar reference spectrum");
  int base_qubits = 6;
  int base_samples = 2000;
  std::uint64_t base_seed = 1000;
  std::string base_out;
  baseline->add_option("--qubits", base_qubits, "number of qubits");
  baseline->add_option("--samples", base_samples, "number of random states");
  baseline->add_option("--seed", base_seed, "base seed");
  baseline->add_option("--out", base_out, "where to write haar.csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      const auto result = harness::run_sweep(resolve_config(flags));
      std::cout << harness::aggregate_csv(result.aggregate);
      return finish(result.failed_instances.size(), result.config.n_instances);
    }

    if (delta->parsed()) {
      const auto cfg = resolve_config(flags);
      const auto cmp = harness::run_delta_comparison(cfg, delta_values);
      std::cout << harness::delta_csv(cmp);
      return finish(cmp.failed_instances.size(), cfg.n_instances);
    }

    if (spectrum->parsed()) {
      const auto cfg = resolve_config(flags);
      const auto study = harness::run_spectrum_study(cfg, n_samples, n_graphs);
      std::cout << harness::spectrum_csv(study);
      return 0;
    }

    if (scatter->parsed()) {
      const auto parsed = harness::read_run_dir(runs_dir);
      std::vector<adapt::RunRecord> records;
      records.reserve(parsed.size());
      for (const auto& p : parsed) {
        records.push_back(harness::run_record_from_parsed(p));
      }
      const auto result = harness::scatter_max_entropy_vs_final_error(records);
      std::cout << harness::scatter_csv(result);
      std::cerr << "spearman_rho=" << csv::fmt(result.spearman_rho) << '\n';
      if (!scatter_out.empty()) {
        fs::create_directories(scatter_out);
        std::ofstream os(fs::path(scatter_out) / "scatter.csv");
        os << harness::scatter_csv(result);
      }
      return 0;
    }

    const auto study = harness::haar_baseline_study(base_qubits, base_samples,
                                                    base_seed);
    std::cout << harness::spectrum_csv(study);
    if (!base_out.empty()) {
      fs::create_directories(base_out);
      std::ofstream os(fs::path(base_out) / "haar.csv");
      os << harness::spectrum_csv(study);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
