// Command-line front end. Everything substantive lives behind the C API in
// librmsc; this file only translates flags into configuration and picks the
// driver to run.

#include <rmsc.h>

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

namespace {

struct ConfigDeleter {
  void operator()(rmsc_config* cfg) const { rmsc_config_free(cfg); }
};
using ConfigPtr = std::unique_ptr<rmsc_config, ConfigDeleter>;

[[noreturn]] void die(const std::string& where) {
  std::fprintf(stderr, "error: %s: %s\n", where.c_str(), rmsc_last_error());
  std::exit(1);
}

// Options common to every subcommand. Typed flags override the config file;
// --set pairs override both.
struct Assignment {
  std::string flag, key, value;
};

struct Options {
  std::string config_file;
  std::vector<Assignment> assignments;
  std::vector<std::string> raw_sets;

  void add_basics(CLI::App* cmd) {
    cmd->add_option("--config", config_file, "key = value configuration file");
    cmd->add_option("--set", raw_sets, "extra setting, key=value (repeatable)")
        ->take_all();
    bind(cmd, "--output-dir", "output_dir", "directory for result files");
    bind(cmd, "--seed", "seed", "master random seed");
    bind(cmd, "--workers", "workers", "candidate evaluation threads");
  }

  void bind(CLI::App* cmd, const std::string& flag, const std::string& key,
            const std::string& help) {
    cmd->add_option_function<std::string>(
        flag,
        [this, flag, key](const std::string& value) {
          assignments.push_back({flag, key, value});
        },
        help);
  }

  ConfigPtr build() const {
    rmsc_config* raw = nullptr;
    if (rmsc_config_create(&raw) != RMSC_OK) die("config");
    ConfigPtr cfg(raw);
    if (!config_file.empty() && rmsc_config_load(cfg.get(), config_file.c_str()) != RMSC_OK)
      die("--config");
    for (const auto& a : assignments)
      if (rmsc_config_set(cfg.get(), a.key.c_str(), a.value.c_str()) != RMSC_OK)
        die(a.flag);
    for (const std::string& pair : raw_sets) {
      std::size_t eq = pair.find('=');
      if (eq == std::string::npos || eq == 0) {
        std::fprintf(stderr, "error: --set expects key=value, got '%s'\n", pair.c_str());
        std::exit(1);
      }
      std::string key = pair.substr(0, eq), value = pair.substr(eq + 1);
      if (rmsc_config_set(cfg.get(), key.c_str(), value.c_str()) != RMSC_OK)
        die("--set " + pair);
    }
    return cfg;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transductive classification over multiple graph views, with noisy-view "
               "filtering by annealed subset search"};
  app.require_subcommand(1);

  Options classify_opt, noise_opt, sweep_opt, gen_opt;

  CLI::App* classify = app.add_subcommand(
      "classify", "Score every node from a manifest of views and a partial labeling");
  classify_opt.add_basics(classify);
  classify_opt.bind(classify, "--manifest", "manifest", "view manifest file");
  classify_opt.bind(classify, "--labels", "labels", "partial ±1 labels, one 'node label' per line");
  classify_opt.bind(classify, "--truth", "truth", "held-out truth labels, enables evaluation output");
  classify_opt.bind(classify, "--method", "methods", "robust, tss, eql or perf");

  CLI::App* noise = app.add_subcommand(
      "noise-test", "Measure ranking quality as corrupted views are injected");
  noise_opt.add_basics(noise);
  noise_opt.bind(noise, "--manifest", "manifest", "view manifest file");
  noise_opt.bind(noise, "--labels", "labels", "full ground-truth labels");
  noise_opt.bind(noise, "--methods", "methods", "comma list of methods to compare");
  noise_opt.bind(noise, "--repeats", "repeats", "label samples per cell");
  noise_opt.bind(noise, "--label-fraction", "label_fraction", "fraction of nodes labeled");
  noise_opt.bind(noise, "--models", "noise_models", "comma list: er, rw, av");
  noise_opt.bind(noise, "--intensities", "noise_intensities", "comma list: low, high");
  noise_opt.bind(noise, "--counts", "noise_counts", "comma list of injected view counts");

  CLI::App* sweep = app.add_subcommand(
      "label-sweep", "Measure ranking quality as the labeled fraction grows");
  sweep_opt.add_basics(sweep);
  sweep_opt.bind(sweep, "--manifest", "manifest", "view manifest file");
  sweep_opt.bind(sweep, "--labels", "labels", "full ground-truth labels");
  sweep_opt.bind(sweep, "--methods", "methods", "comma list of methods to compare");
  sweep_opt.bind(sweep, "--repeats", "repeats", "label samples per fraction");
  sweep_opt.bind(sweep, "--fractions", "fractions", "comma list of labeled fractions");

  CLI::App* gen = app.add_subcommand(
      "gen-synthetic", "Write a planted benchmark: informative, aimless and misleading views");
  gen_opt.add_basics(gen);
  gen_opt.bind(gen, "--nodes", "synth_n", "node count");
  gen_opt.bind(gen, "--positive-fraction", "synth_positive_fraction",
               "fraction of nodes in the positive class");

  CLI11_PARSE(app, argc, argv);

  rmsc_status status = RMSC_OK;
  if (classify->parsed()) {
    status = rmsc_run_classify(classify_opt.build().get());
  } else if (noise->parsed()) {
    status = rmsc_run_noise_test(noise_opt.build().get());
  } else if (sweep->parsed()) {
    status = rmsc_run_label_sweep(sweep_opt.build().get());
  } else if (gen->parsed()) {
    status = rmsc_run_gen_synthetic(gen_opt.build().get());
  }

  if (status != RMSC_OK) {
    std::fprintf(stderr, "error: %s\n", rmsc_last_error());
    return 1;
  }
  return 0;
}
