#include "experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "io.hpp"

namespace rmsc {

namespace {

std::uint64_t fnv64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

double to_double(const std::string& key, const std::string& value) {
  char* end = nullptr;
  double v = std::strtod(value.c_str(), &end);
  if (value.empty() || *end != '\0' || !std::isfinite(v))
    fail(ErrorCode::config, "config key '" + key + "': bad number '" + value + "'");
  return v;
}

int to_int(const std::string& key, const std::string& value) {
  char* end = nullptr;
  long v = std::strtol(value.c_str(), &end, 10);
  if (value.empty() || *end != '\0')
    fail(ErrorCode::config, "config key '" + key + "': bad integer '" + value + "'");
  return static_cast<int>(v);
}

// Scores of failed rows are stored as "nan".
double to_score(const std::string& key, const std::string& value) {
  char* end = nullptr;
  double v = std::strtod(value.c_str(), &end);
  if (value.empty() || *end != '\0')
    fail(ErrorCode::parse, "field '" + key + "': bad number '" + value + "'");
  return v;
}

std::uint64_t to_uint64(const std::string& key, const std::string& value) {
  char* end = nullptr;
  unsigned long long v = std::strtoull(value.c_str(), &end, 10);
  if (value.empty() || *end != '\0')
    fail(ErrorCode::config, "config key '" + key + "': bad unsigned integer '" + value + "'");
  return static_cast<std::uint64_t>(v);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(value);
  while (std::getline(is, item, ',')) {
    std::size_t b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    std::size_t e = item.find_last_not_of(" \t");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<double> to_double_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  for (const std::string& item : split_list(value)) out.push_back(to_double(key, item));
  return out;
}

std::vector<int> to_int_list(const std::string& key, const std::string& value) {
  std::vector<int> out;
  for (const std::string& item : split_list(value)) out.push_back(to_int(key, item));
  return out;
}

const std::vector<std::string> kKnownMethods = {"robust", "tss", "eql", "perf"};

void check_method(const std::string& name) {
  if (std::find(kKnownMethods.begin(), kKnownMethods.end(), name) == kKnownMethods.end())
    fail(ErrorCode::config, "unknown method '" + name + "' (expected robust, tss, eql or perf)");
}

}  // namespace

std::uint64_t stage_seed(std::uint64_t seed, const std::string& tag) {
  return derive_seed(seed, fnv64(tag));
}

ExperimentConfig parse_experiment_config(const std::map<std::string, std::string>& kv) {
  ExperimentConfig cfg;
  for (const auto& [key, value] : kv) {
    if (key == "manifest") cfg.manifest = value;
    else if (key == "labels") cfg.labels = value;
    else if (key == "truth") cfg.truth = value;
    else if (key == "output_dir") cfg.output_dir = value;
    else if (key == "method" || key == "methods") {
      cfg.methods = split_list(value);
      if (cfg.methods.empty()) fail(ErrorCode::config, "config key 'methods': empty list");
      for (const std::string& name : cfg.methods) check_method(name);
    } else if (key == "label_fraction") cfg.label_fraction = to_double(key, value);
    else if (key == "fractions") cfg.fractions = to_double_list(key, value);
    else if (key == "repeats") cfg.repeats = to_int(key, value);
    else if (key == "seed") cfg.seed = to_uint64(key, value);
    else if (key == "workers") cfg.workers = to_int(key, value);
    else if (key == "penalty_strength") cfg.penalty_strength = to_double(key, value);
    else if (key == "solver_tol") cfg.solver_tol = to_double(key, value);
    else if (key == "solver_max_iter") cfg.solver_max_iter = to_int(key, value);
    else if (key == "c") cfg.c = to_double(key, value);
    else if (key == "c0") cfg.c0 = to_double(key, value);
    else if (key == "pgd_step") cfg.pgd_step = to_double(key, value);
    else if (key == "pgd_max_iter") cfg.pgd_max_iter = to_int(key, value);
    else if (key == "pgd_grad_tol") cfg.pgd_grad_tol = to_double(key, value);
    else if (key == "cv_solver_tol") cfg.cv_solver_tol = to_double(key, value);
    else if (key == "cv_pgd_max_iter") cfg.cv_pgd_max_iter = to_int(key, value);
    else if (key == "cv_pgd_grad_tol") cfg.cv_pgd_grad_tol = to_double(key, value);
    else if (key == "folds") cfg.folds = to_int(key, value);
    else if (key == "grid_c") cfg.grid_c = to_double_list(key, value);
    else if (key == "grid_c0") cfg.grid_c0 = to_double_list(key, value);
    else if (key == "temperature") cfg.temperature = to_double(key, value);
    else if (key == "d_thresh") cfg.d_thresh = to_double(key, value);
    else if (key == "p_thresh") cfg.p_thresh = to_double(key, value);
    else if (key == "m_l") cfg.m_l = to_int(key, value);
    else if (key == "m_u") cfg.m_u = to_int(key, value);
    else if (key == "max_sets") cfg.max_sets = to_int(key, value);
    else if (key == "noise_models") {
      cfg.noise_models.clear();
      for (const std::string& name : split_list(value))
        cfg.noise_models.push_back(noise_model_from_name(name));
    } else if (key == "noise_intensities") {
      cfg.noise_intensities.clear();
      for (const std::string& name : split_list(value))
        cfg.noise_intensities.push_back(intensity_from_name(name));
    } else if (key == "noise_counts") cfg.noise_counts = to_int_list(key, value);
    else if (key == "rewire_base") cfg.rewire_base = to_int(key, value);
    else if (key == "cv_metric") {
      if (value != "ap" && value != "accuracy")
        fail(ErrorCode::config, "config key 'cv_metric': expected ap or accuracy");
      cfg.cv_metric = value;
    } else if (key == "synth_n") cfg.synth_n = to_int(key, value);
    else if (key == "synth_positive_fraction") cfg.synth_positive_fraction = to_double(key, value);
    else fail(ErrorCode::config, "unknown config key '" + key + "'");
  }

  if (cfg.repeats < 1) fail(ErrorCode::config, "repeats must be at least 1");
  if (cfg.workers < 1) fail(ErrorCode::config, "workers must be at least 1");
  if (cfg.folds < 2) fail(ErrorCode::config, "folds must be at least 2");
  if (!(cfg.label_fraction > 0.0 && cfg.label_fraction <= 1.0))
    fail(ErrorCode::config, "label_fraction must lie in (0, 1]");
  for (double f : cfg.fractions)
    if (!(f > 0.0 && f <= 1.0)) fail(ErrorCode::config, "fractions must lie in (0, 1]");
  if (cfg.fractions.empty()) fail(ErrorCode::config, "fractions must not be empty");
  for (int count : cfg.noise_counts)
    if (count < 0) fail(ErrorCode::config, "noise_counts must be nonnegative");
  return cfg;
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    std::size_t b = body.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    std::size_t eq = body.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::parse, path + ":" + std::to_string(lineno) + ": expected key = value");
    auto trim = [](std::string s) {
      std::size_t lo = s.find_first_not_of(" \t\r\n");
      if (lo == std::string::npos) return std::string();
      std::size_t hi = s.find_last_not_of(" \t\r\n");
      return s.substr(lo, hi - lo + 1);
    };
    std::string key = trim(body.substr(0, eq));
    std::string value = trim(body.substr(eq + 1));
    if (key.empty())
      fail(ErrorCode::parse, path + ":" + std::to_string(lineno) + ": empty key");
    if (!kv.emplace(key, value).second)
      fail(ErrorCode::parse, path + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
  }
  return kv;
}

DualConfig final_dual_config(const ExperimentConfig& cfg) {
  DualConfig d;
  d.c = cfg.c;
  d.c0 = cfg.c0;
  d.step_size = cfg.pgd_step;
  d.max_iter = cfg.pgd_max_iter;
  d.grad_tol = cfg.pgd_grad_tol;
  d.solve.tol = cfg.solver_tol;
  d.solve.max_iter = cfg.solver_max_iter;
  return d;
}

namespace {

CvConfig cv_config(const ExperimentConfig& cfg) {
  CvConfig cv;
  cv.folds = cfg.folds;
  cv.penalty_strength = cfg.penalty_strength;
  cv.use_accuracy = cfg.cv_metric == "accuracy";
  cv.dual.c = cfg.c;
  cv.dual.c0 = cfg.c0;
  cv.dual.step_size = cfg.pgd_step;
  cv.dual.max_iter = cfg.cv_pgd_max_iter;
  cv.dual.grad_tol = cfg.cv_pgd_grad_tol;
  cv.dual.solve.tol = cfg.cv_solver_tol;
  cv.dual.solve.max_iter = cfg.solver_max_iter;
  return cv;
}

// Picks (c, c0) by full-set cross-validation when a grid with more than one
// combination is configured; otherwise the configured point is kept.
void select_hypers(ExperimentConfig& cfg, const MultiGraph& mg, const LabelVector& labels,
                   std::uint64_t seed) {
  std::vector<double> cs = cfg.grid_c.empty() ? std::vector<double>{cfg.c} : cfg.grid_c;
  std::vector<double> c0s = cfg.grid_c0.empty() ? std::vector<double>{cfg.c0} : cfg.grid_c0;
  if (cs.size() * c0s.size() <= 1) {
    if (!cs.empty()) cfg.c = cs[0];
    if (!c0s.empty()) cfg.c0 = c0s[0];
    return;
  }

  GraphSet full;
  for (int k = 0; k < mg.view_count(); ++k) full.ids.push_back(mg.view(k).id());
  std::sort(full.ids.begin(), full.ids.end());

  double best = -1.0;
  double best_c = cs[0], best_c0 = c0s[0];
  for (double c : cs) {
    for (double c0 : c0s) {
      ExperimentConfig trial = cfg;
      trial.c = c;
      trial.c0 = c0;
      double score = 0.0;
      try {
        score = cross_val_score(full, mg, labels, cv_config(trial), seed);
      } catch (const Error&) {
        continue;
      }
      if (score > best) {
        best = score;
        best_c = c;
        best_c0 = c0;
      }
    }
  }
  cfg.c = best_c;
  cfg.c0 = best_c0;
}

}  // namespace

SearchConfig search_config(const ExperimentConfig& cfg, std::uint64_t run_seed) {
  SearchConfig s;
  s.cv = cv_config(cfg);
  s.temperature = cfg.temperature;
  s.d_thresh = cfg.d_thresh;
  s.p_thresh = cfg.p_thresh;
  s.m_l = cfg.m_l;
  s.m_u = cfg.m_u;
  s.seed = run_seed;
  s.workers = cfg.workers;
  s.max_sets = cfg.max_sets;
  return s;
}

std::uint64_t label_sample_hash(const LabelVector& labels) {
  std::uint64_t h = 1469598103934665603ull;
  auto eat = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  for (int i : labels.labeled_nodes()) {
    eat(static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)));
    eat(labels.value(i) > 0 ? 1ull : 2ull);
  }
  return h;
}

MethodOutput run_method(const std::string& method, const MultiGraph& mg,
                        const LabelVector& labels, const ExperimentConfig& cfg,
                        std::uint64_t run_seed) {
  check_method(method);
  MethodOutput out;
  if (method == "robust") {
    out.search = robust_search(mg, labels, search_config(cfg, run_seed));
    out.scores = out.search.f;
    out.weights = out.search.weights_full;
    out.has_search = true;
  } else if (method == "tss") {
    BaselineResult res = baseline_tss(mg, labels, cfg.penalty_strength, final_dual_config(cfg));
    out.scores = std::move(res.f);
    out.weights = std::move(res.weights);
  } else if (method == "eql") {
    SolveOptions opt;
    opt.tol = cfg.solver_tol;
    opt.max_iter = cfg.solver_max_iter;
    BaselineResult res = baseline_equal_weights(mg, labels, cfg.penalty_strength, opt);
    out.scores = std::move(res.f);
    out.weights = std::move(res.weights);
  } else {  // perf
    BaselineResult res = baseline_perf_weights(mg, labels, cv_config(cfg), run_seed);
    out.scores = std::move(res.f);
    out.weights = std::move(res.weights);
  }
  return out;
}

void ResultsTable::sort_rows() {
  std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    if (a.noise_model != b.noise_model) return a.noise_model < b.noise_model;
    if (a.intensity != b.intensity) return a.intensity < b.intensity;
    if (a.injected != b.injected) return a.injected < b.injected;
    if (a.label_fraction != b.label_fraction) return a.label_fraction < b.label_fraction;
    if (a.method != b.method) return a.method < b.method;
    return a.repeat < b.repeat;
  });
}

void ResultsTable::write(const std::string& path) const {
  std::vector<std::vector<std::string>> out;
  out.reserve(rows.size());
  for (const ResultRow& r : rows) {
    out.push_back({r.method, r.noise_model, r.intensity, std::to_string(r.injected),
                   format_double(r.label_fraction), std::to_string(r.repeat),
                   std::to_string(r.sample_hash), format_double(r.ap), r.ok ? "1" : "0",
                   r.error});
  }
  write_csv(path,
            {"method", "noise_model", "intensity", "injected", "label_fraction", "repeat",
             "sample_hash", "ap", "ok", "error"},
            out);
}

ResultsTable ResultsTable::read(const std::string& path) {
  std::vector<std::vector<std::string>> raw = read_csv(path);
  if (raw.empty()) fail(ErrorCode::parse, path + ": empty results file");
  const std::vector<std::string> expect = {"method",       "noise_model", "intensity",
                                           "injected",     "label_fraction", "repeat",
                                           "sample_hash",  "ap",          "ok",
                                           "error"};
  if (raw[0] != expect) fail(ErrorCode::parse, path + ": unexpected results header");
  ResultsTable table;
  for (std::size_t i = 1; i < raw.size(); ++i) {
    const std::vector<std::string>& f = raw[i];
    if (f.size() != expect.size())
      fail(ErrorCode::parse, path + ": bad row width at line " + std::to_string(i + 1));
    ResultRow r;
    r.method = f[0];
    r.noise_model = f[1];
    r.intensity = f[2];
    r.injected = to_int("injected", f[3]);
    r.label_fraction = to_double("label_fraction", f[4]);
    r.repeat = to_int("repeat", f[5]);
    r.sample_hash = to_uint64("sample_hash", f[6]);
    r.ap = to_score("ap", f[7]);
    r.ok = f[8] == "1";
    r.error = f[9];
    table.rows.push_back(std::move(r));
  }
  return table;
}

std::vector<ResultsTable::Summary> ResultsTable::summarize() const {
  std::vector<Summary> out;
  auto key_of = [](const ResultRow& r) {
    return std::make_tuple(r.noise_model, r.intensity, r.injected, r.label_fraction, r.method);
  };
  std::vector<ResultRow> sorted = rows;
  std::stable_sort(sorted.begin(), sorted.end(), [&](const ResultRow& a, const ResultRow& b) {
    return key_of(a) < key_of(b);
  });
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    double sum = 0.0;
    int n = 0;
    while (j < sorted.size() && key_of(sorted[j]) == key_of(sorted[i])) {
      if (sorted[j].ok) {
        sum += sorted[j].ap;
        ++n;
      }
      ++j;
    }
    Summary s;
    s.method = sorted[i].method;
    s.noise_model = sorted[i].noise_model;
    s.intensity = sorted[i].intensity;
    s.injected = sorted[i].injected;
    s.label_fraction = sorted[i].label_fraction;
    s.n = n;
    if (n > 0) {
      s.mean_ap = sum / static_cast<double>(n);
      double var = 0.0;
      for (std::size_t k = i; k < j; ++k) {
        if (!sorted[k].ok) continue;
        double d = sorted[k].ap - s.mean_ap;
        var += d * d;
      }
      s.std_ap = n > 1 ? std::sqrt(var / static_cast<double>(n - 1)) : 0.0;
    }
    out.push_back(std::move(s));
    i = j;
  }
  return out;
}

void ResultsTable::write_summary(const std::string& path) const {
  std::vector<std::vector<std::string>> out;
  for (const Summary& s : summarize()) {
    out.push_back({s.method, s.noise_model, s.intensity, std::to_string(s.injected),
                   format_double(s.label_fraction), std::to_string(s.n), format_double(s.mean_ap),
                   format_double(s.std_ap)});
  }
  write_csv(path,
            {"method", "noise_model", "intensity", "injected", "label_fraction", "n", "mean_ap",
             "std_ap"},
            out);
}

namespace {

namespace fs = std::filesystem;

void ensure_output_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec && !fs::exists(dir))
    fail(ErrorCode::io, "cannot create output directory " + dir);
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

MultiGraph load_required_manifest(const ExperimentConfig& cfg) {
  if (cfg.manifest.empty()) fail(ErrorCode::config, "manifest path is required");
  return load_manifest(cfg.manifest);
}

LabelVector load_required_labels(const ExperimentConfig& cfg, int n) {
  if (cfg.labels.empty()) fail(ErrorCode::config, "labels path is required");
  return load_labels(cfg.labels, n);
}

// AP of the scores on the nodes hidden from the sample, judged by the truth.
double hidden_ap(const std::vector<double>& scores, const LabelVector& sample,
                 const LabelVector& truth) {
  std::vector<double> s;
  std::vector<int> t;
  for (int i : sample.unlabeled_nodes()) {
    if (truth.value(i) == 0) continue;
    s.push_back(scores[static_cast<std::size_t>(i)]);
    t.push_back(truth.value(i));
  }
  return average_precision(s, t);
}

void write_weights_csv(const std::string& path, const MultiGraph& mg,
                       const std::vector<double>& weights) {
  std::vector<std::vector<std::string>> rows;
  for (int k = 0; k < mg.view_count(); ++k)
    rows.push_back({std::to_string(mg.view(k).id()),
                    format_double(weights[static_cast<std::size_t>(k)])});
  write_csv(path, {"view", "weight"}, rows);
}

void write_removal_log_csv(const std::string& path, const SearchResult& search) {
  std::vector<std::vector<std::string>> rows;
  for (const SearchRecord& rec : search.log) {
    rows.push_back({std::to_string(rec.step), rec.parent.to_string(),
                    std::to_string(rec.removed_graph), format_double(rec.cv_score),
                    rec.accepted ? "1" : "0"});
  }
  write_csv(path, {"step", "parent_set", "removed_graph_id", "cv_score", "accepted"}, rows);
}

}  // namespace

void run_classify(const ExperimentConfig& cfg) {
  ensure_output_dir(cfg.output_dir);
  MultiGraph mg = load_required_manifest(cfg);
  LabelVector labels = load_required_labels(cfg, mg.size());
  if (labels.labeled_count() == 0)
    fail(ErrorCode::invalid, "classify: the label file labels no nodes");

  ExperimentConfig tuned = cfg;
  select_hypers(tuned, mg, labels, stage_seed(cfg.seed, "hypers"));

  const std::string method = tuned.methods.at(0);
  MethodOutput out = run_method(method, mg, labels, tuned, stage_seed(tuned.seed, "classify"));

  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i < mg.size(); ++i) {
    rows.push_back({std::to_string(i), format_double(out.scores[static_cast<std::size_t>(i)]),
                    std::to_string(labels.value(i))});
  }
  write_csv(join_path(tuned.output_dir, "results.csv"), {"node", "score", "input_label"}, rows);
  write_weights_csv(join_path(tuned.output_dir, "weights.csv"), mg, out.weights);
  if (out.has_search)
    write_removal_log_csv(join_path(tuned.output_dir, "removal_log.csv"), out.search);

  if (!tuned.truth.empty()) {
    LabelVector truth = load_labels(tuned.truth, mg.size());
    std::vector<double> s;
    std::vector<int> t;
    for (int i : labels.unlabeled_nodes()) {
      if (truth.value(i) == 0) continue;
      s.push_back(out.scores[static_cast<std::size_t>(i)]);
      t.push_back(truth.value(i));
    }
    std::vector<PrPoint> curve = precision_recall_curve(s, t);
    std::vector<std::vector<std::string>> pr;
    for (const PrPoint& pt : curve) {
      pr.push_back({std::to_string(pt.rank), format_double(pt.score), format_double(pt.recall),
                    format_double(pt.precision)});
    }
    write_csv(join_path(tuned.output_dir, "pr_curve.csv"),
              {"rank", "score", "recall", "precision"}, pr);

    double ap = average_precision(s, t);
    write_csv(join_path(tuned.output_dir, "metrics.csv"), {"metric", "value"},
              {{"ap", format_double(ap)},
               {"hidden_nodes", std::to_string(s.size())},
               {"method", method}});
  }
}

void run_noise_test(const ExperimentConfig& cfg) {
  ensure_output_dir(cfg.output_dir);
  MultiGraph clean = load_required_manifest(cfg);
  LabelVector truth = load_required_labels(cfg, clean.size());
  if (truth.labeled_count() != truth.size())
    fail(ErrorCode::invalid, "noise-test: the label file must provide ground truth for every node");

  std::vector<LabelVector> samples;
  for (int r = 0; r < cfg.repeats; ++r) {
    samples.push_back(sample_labeled_set(
        truth, cfg.label_fraction, stage_seed(cfg.seed, "sample:" + std::to_string(r))));
  }

  ExperimentConfig tuned = cfg;
  select_hypers(tuned, clean, samples[0], stage_seed(cfg.seed, "hypers"));

  ResultsTable table;
  auto score_cell = [&](const MultiGraph& mg, const std::string& model, const std::string& level,
                        int injected, const std::string& cell_tag) {
    for (int r = 0; r < tuned.repeats; ++r) {
      const LabelVector& sample = samples[static_cast<std::size_t>(r)];
      std::uint64_t run_seed = stage_seed(tuned.seed, "run:" + cell_tag + ":" + std::to_string(r));
      for (const std::string& method : tuned.methods) {
        ResultRow row;
        row.method = method;
        row.noise_model = model;
        row.intensity = level;
        row.injected = injected;
        row.label_fraction = tuned.label_fraction;
        row.repeat = r;
        row.sample_hash = label_sample_hash(sample);
        try {
          MethodOutput out = run_method(method, mg, sample, tuned, run_seed);
          row.ap = hidden_ap(out.scores, sample, truth);
        } catch (const Error& e) {
          row.ok = false;
          row.ap = std::nan("");
          row.error = e.what();
        }
        table.rows.push_back(std::move(row));
      }
    }
  };

  score_cell(clean, "none", "none", 0, "clean");

  for (NoiseModel model : tuned.noise_models) {
    for (NoiseIntensity intensity : tuned.noise_intensities) {
      for (int count : tuned.noise_counts) {
        std::string cell_tag = noise_model_name(model) + ":" + intensity_name(intensity) + ":" +
                               std::to_string(count);
        NoiseSpec spec;
        spec.model = model;
        spec.intensity = intensity;
        spec.count = count;
        spec.base_view = tuned.rewire_base;
        spec.seed = stage_seed(tuned.seed, "noise:" + cell_tag);
        MultiGraph noisy = inject(clean, spec, truth);
        score_cell(noisy, noise_model_name(model), intensity_name(intensity), count, cell_tag);
      }
    }
  }

  table.sort_rows();
  table.write(join_path(tuned.output_dir, "results.csv"));
  table.write_summary(join_path(tuned.output_dir, "summary.csv"));
}

void run_label_sweep(const ExperimentConfig& cfg) {
  ensure_output_dir(cfg.output_dir);
  MultiGraph mg = load_required_manifest(cfg);
  LabelVector truth = load_required_labels(cfg, mg.size());
  if (truth.labeled_count() != truth.size())
    fail(ErrorCode::invalid, "label-sweep: the label file must provide ground truth for every node");

  ExperimentConfig tuned = cfg;
  {
    LabelVector pilot = sample_labeled_set(
        truth, tuned.fractions[0], stage_seed(cfg.seed, "sweep-sample:0:0"));
    select_hypers(tuned, mg, pilot, stage_seed(cfg.seed, "hypers"));
  }

  ResultsTable table;
  for (std::size_t fi = 0; fi < tuned.fractions.size(); ++fi) {
    double fraction = tuned.fractions[fi];
    for (int r = 0; r < tuned.repeats; ++r) {
      LabelVector sample = sample_labeled_set(
          truth, fraction,
          stage_seed(tuned.seed, "sweep-sample:" + std::to_string(fi) + ":" + std::to_string(r)));
      std::uint64_t run_seed = stage_seed(
          tuned.seed, "sweep-run:" + std::to_string(fi) + ":" + std::to_string(r));
      for (const std::string& method : tuned.methods) {
        ResultRow row;
        row.method = method;
        row.label_fraction = fraction;
        row.repeat = r;
        row.sample_hash = label_sample_hash(sample);
        try {
          MethodOutput out = run_method(method, mg, sample, tuned, run_seed);
          row.ap = hidden_ap(out.scores, sample, truth);
        } catch (const Error& e) {
          row.ok = false;
          row.ap = std::nan("");
          row.error = e.what();
        }
        table.rows.push_back(std::move(row));
      }
    }
  }

  table.sort_rows();
  table.write(join_path(tuned.output_dir, "results.csv"));
  table.write_summary(join_path(tuned.output_dir, "summary.csv"));
}

void run_gen_synthetic(const ExperimentConfig& cfg) {
  ensure_output_dir(cfg.output_dir);
  PlantedConfig pc;
  pc.n = cfg.synth_n;
  pc.positive_fraction = cfg.synth_positive_fraction;
  pc.seed = cfg.seed;
  PlantedData data = planted_multigraph(pc);
  save_manifest(data.graph, cfg.output_dir);
  save_labels(join_path(cfg.output_dir, "truth.labels"), data.truth);
}

}  // namespace rmsc
