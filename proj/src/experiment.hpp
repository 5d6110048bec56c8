#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "baselines.hpp"
#include "noise.hpp"
#include "search.hpp"

namespace rmsc {

// Typed view of the flat key=value configuration. Unknown keys are rejected
// so typos fail loudly.
struct ExperimentConfig {
  std::string manifest;
  std::string labels;
  std::string truth;  // optional evaluation truth for classify
  std::string output_dir = ".";

  std::vector<std::string> methods = {"robust"};

  double label_fraction = 0.3;
  std::vector<double> fractions = {0.05, 0.1, 0.2, 0.3, 0.4};
  int repeats = 10;
  std::uint64_t seed = 1;
  int workers = 1;

  // classifier
  double penalty_strength = 0.7;
  double solver_tol = 1e-8;
  int solver_max_iter = 0;

  // dual program, final quality
  double c = 0.1;
  double c0 = 10.0;
  double pgd_step = 1.0;
  int pgd_max_iter = 500;
  double pgd_grad_tol = 1e-6;

  // dual program inside cross-validation (cheaper; scoring only needs ranks)
  double cv_solver_tol = 1e-6;
  int cv_pgd_max_iter = 150;
  double cv_pgd_grad_tol = 1e-4;
  int folds = 5;

  // hyper-parameter grids; one combination means no selection pass
  std::vector<double> grid_c;
  std::vector<double> grid_c0;

  // annealing search
  double temperature = 0.0;
  double d_thresh = -0.1;
  double p_thresh = 0.01;
  int m_l = 5;
  int m_u = 10;
  int max_sets = 0;

  // noise grid
  std::vector<NoiseModel> noise_models = {NoiseModel::erdos_renyi, NoiseModel::rewire,
                                          NoiseModel::adversarial};
  std::vector<NoiseIntensity> noise_intensities = {NoiseIntensity::low, NoiseIntensity::high};
  std::vector<int> noise_counts = {2, 4, 6};
  int rewire_base = 0;

  std::string cv_metric = "ap";  // or "accuracy"; applies wherever folds are scored

  // synthetic generator
  int synth_n = 100;
  double synth_positive_fraction = 0.4;
};

ExperimentConfig parse_experiment_config(const std::map<std::string, std::string>& kv);
std::map<std::string, std::string> load_config_file(const std::string& path);

// Derived method configs.
DualConfig final_dual_config(const ExperimentConfig& cfg);
SearchConfig search_config(const ExperimentConfig& cfg, std::uint64_t run_seed);

// Stable fingerprint of which nodes are labeled and how.
std::uint64_t label_sample_hash(const LabelVector& labels);

// Seed for one named stage of a run, derived from the experiment seed. The
// drivers use this so that, e.g., every method inside one repeat shares a
// run seed while different repeats do not.
std::uint64_t stage_seed(std::uint64_t seed, const std::string& tag);

// One scored run of a named method ("robust", "tss", "eql", "perf").
struct MethodOutput {
  std::vector<double> scores;
  std::vector<double> weights;  // per view position
  bool has_search = false;
  SearchResult search;
};

MethodOutput run_method(const std::string& method, const MultiGraph& mg,
                        const LabelVector& labels, const ExperimentConfig& cfg,
                        std::uint64_t run_seed);

// One row of an experiment results table.
struct ResultRow {
  std::string method;
  std::string noise_model = "none";
  std::string intensity = "none";
  int injected = 0;
  double label_fraction = 0.0;
  int repeat = 0;
  std::uint64_t sample_hash = 0;
  double ap = 0.0;
  bool ok = true;
  std::string error;
};

struct ResultsTable {
  std::vector<ResultRow> rows;

  void sort_rows();
  void write(const std::string& path) const;
  static ResultsTable read(const std::string& path);

  // mean/std (sample, n-1) per (method, model, intensity, injected, fraction)
  struct Summary {
    std::string method;
    std::string noise_model;
    std::string intensity;
    int injected = 0;
    double label_fraction = 0.0;
    int n = 0;
    double mean_ap = 0.0;
    double std_ap = 0.0;
  };
  std::vector<Summary> summarize() const;
  void write_summary(const std::string& path) const;
};

// Subcommand drivers. Each writes its CSV outputs under cfg.output_dir.
void run_classify(const ExperimentConfig& cfg);
void run_noise_test(const ExperimentConfig& cfg);
void run_label_sweep(const ExperimentConfig& cfg);
void run_gen_synthetic(const ExperimentConfig& cfg);

}  // namespace rmsc
