#include "rmsc.h"

#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "experiment.hpp"
#include "io.hpp"

using namespace rmsc;

namespace {

thread_local std::string g_last_error = "no error";

rmsc_status code_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::io: return RMSC_ERR_IO;
    case ErrorCode::parse: return RMSC_ERR_PARSE;
    case ErrorCode::invalid: return RMSC_ERR_INVALID;
    case ErrorCode::numeric: return RMSC_ERR_NUMERIC;
    case ErrorCode::config: return RMSC_ERR_CONFIG;
  }
  return RMSC_ERR_OTHER;
}

// Runs fn, converting exceptions to status codes and the last-error slot.
template <typename Fn>
rmsc_status guarded(Fn&& fn) {
  try {
    fn();
    return RMSC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return code_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RMSC_ERR_OTHER;
  } catch (...) {
    g_last_error = "unknown failure";
    return RMSC_ERR_OTHER;
  }
}

rmsc_status require(bool ok, const char* message) {
  if (ok) return RMSC_OK;
  g_last_error = message;
  return RMSC_ERR_INVALID;
}

}  // namespace

struct rmsc_multigraph {
  MultiGraph graph;
};

struct rmsc_labels {
  LabelVector labels;
};

struct rmsc_config {
  std::map<std::string, std::string> kv;
};

struct rmsc_result {
  MethodOutput output;
  std::vector<int> view_ids;
  std::vector<int> kept;
};

namespace {

template <typename Runner>
rmsc_status run_driver(const rmsc_config* cfg, Runner runner) {
  if (rmsc_status s = require(cfg != nullptr, "run: config is NULL")) return s;
  return guarded([&] { runner(parse_experiment_config(cfg->kv)); });
}

}  // namespace

extern "C" {

const char* rmsc_last_error(void) { return g_last_error.c_str(); }

/* ---- multigraph -------------------------------------------------------- */

rmsc_status rmsc_multigraph_create(int n, rmsc_multigraph** out) {
  if (rmsc_status s = require(out != nullptr, "multigraph_create: out is NULL")) return s;
  *out = nullptr;
  return guarded([&] { *out = new rmsc_multigraph{MultiGraph(n)}; });
}

rmsc_status rmsc_multigraph_add_view(rmsc_multigraph* mg, int view_id,
                                     const double* edges, size_t count) {
  if (rmsc_status s = require(mg != nullptr, "add_view: multigraph is NULL")) return s;
  if (rmsc_status s = require(edges != nullptr || count == 0, "add_view: edges is NULL"))
    return s;
  return guarded([&] {
    std::vector<Edge> list;
    list.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      double uf = edges[3 * i], vf = edges[3 * i + 1], w = edges[3 * i + 2];
      if (uf != std::floor(uf) || vf != std::floor(vf))
        fail(ErrorCode::invalid, "add_view: node ids must be whole numbers");
      list.push_back(Edge{static_cast<int>(uf), static_cast<int>(vf), w});
    }
    mg->graph.add_view(GraphView::from_edges(mg->graph.size(), std::move(list), view_id));
  });
}

rmsc_status rmsc_multigraph_load(const char* manifest_path, rmsc_multigraph** out) {
  if (rmsc_status s = require(out != nullptr, "multigraph_load: out is NULL")) return s;
  if (rmsc_status s = require(manifest_path != nullptr, "multigraph_load: path is NULL"))
    return s;
  *out = nullptr;
  return guarded([&] { *out = new rmsc_multigraph{load_manifest(manifest_path)}; });
}

rmsc_status rmsc_multigraph_save(const rmsc_multigraph* mg, const char* dir) {
  if (rmsc_status s = require(mg != nullptr, "multigraph_save: multigraph is NULL")) return s;
  if (rmsc_status s = require(dir != nullptr, "multigraph_save: dir is NULL")) return s;
  return guarded([&] { save_manifest(mg->graph, dir); });
}

int rmsc_multigraph_size(const rmsc_multigraph* mg) { return mg ? mg->graph.size() : 0; }

int rmsc_multigraph_view_count(const rmsc_multigraph* mg) {
  return mg ? mg->graph.view_count() : 0;
}

void rmsc_multigraph_free(rmsc_multigraph* mg) { delete mg; }

/* ---- labels ------------------------------------------------------------ */

rmsc_status rmsc_labels_create(int n, rmsc_labels** out) {
  if (rmsc_status s = require(out != nullptr, "labels_create: out is NULL")) return s;
  *out = nullptr;
  return guarded([&] { *out = new rmsc_labels{LabelVector(n)}; });
}

rmsc_status rmsc_labels_set(rmsc_labels* labels, int node, int label) {
  if (rmsc_status s = require(labels != nullptr, "labels_set: labels is NULL")) return s;
  return guarded([&] { labels->labels.set(node, label); });
}

rmsc_status rmsc_labels_load(const char* path, int n, rmsc_labels** out) {
  if (rmsc_status s = require(out != nullptr, "labels_load: out is NULL")) return s;
  if (rmsc_status s = require(path != nullptr, "labels_load: path is NULL")) return s;
  *out = nullptr;
  return guarded([&] { *out = new rmsc_labels{load_labels(path, n)}; });
}

rmsc_status rmsc_labels_save(const rmsc_labels* labels, const char* path) {
  if (rmsc_status s = require(labels != nullptr, "labels_save: labels is NULL")) return s;
  if (rmsc_status s = require(path != nullptr, "labels_save: path is NULL")) return s;
  return guarded([&] { save_labels(path, labels->labels); });
}

int rmsc_labels_size(const rmsc_labels* labels) { return labels ? labels->labels.size() : 0; }

int rmsc_labels_get(const rmsc_labels* labels, int node) {
  if (!labels || node < 0 || node >= labels->labels.size()) return 0;
  return labels->labels.value(node);
}

void rmsc_labels_free(rmsc_labels* labels) { delete labels; }

/* ---- config ------------------------------------------------------------ */

rmsc_status rmsc_config_create(rmsc_config** out) {
  if (rmsc_status s = require(out != nullptr, "config_create: out is NULL")) return s;
  *out = nullptr;
  return guarded([&] { *out = new rmsc_config{}; });
}

rmsc_status rmsc_config_set(rmsc_config* cfg, const char* key, const char* value) {
  if (rmsc_status s = require(cfg != nullptr, "config_set: config is NULL")) return s;
  if (rmsc_status s = require(key != nullptr && value != nullptr,
                              "config_set: key or value is NULL"))
    return s;
  return guarded([&] {
    std::map<std::string, std::string> trial = cfg->kv;
    trial[key] = value;
    parse_experiment_config(trial);  // reject bad keys or values before storing
    cfg->kv = std::move(trial);
  });
}

rmsc_status rmsc_config_load(rmsc_config* cfg, const char* path) {
  if (rmsc_status s = require(cfg != nullptr, "config_load: config is NULL")) return s;
  if (rmsc_status s = require(path != nullptr, "config_load: path is NULL")) return s;
  return guarded([&] {
    std::map<std::string, std::string> trial = cfg->kv;
    for (auto& [key, value] : load_config_file(path)) trial[key] = value;
    parse_experiment_config(trial);
    cfg->kv = std::move(trial);
  });
}

void rmsc_config_free(rmsc_config* cfg) { delete cfg; }

/* ---- classification ---------------------------------------------------- */

rmsc_status rmsc_classify(const rmsc_multigraph* mg, const rmsc_labels* labels,
                          const rmsc_config* cfg, const char* method, rmsc_result** out) {
  if (rmsc_status s = require(out != nullptr, "classify: out is NULL")) return s;
  if (rmsc_status s = require(mg != nullptr, "classify: multigraph is NULL")) return s;
  if (rmsc_status s = require(labels != nullptr, "classify: labels is NULL")) return s;
  if (rmsc_status s = require(method != nullptr, "classify: method is NULL")) return s;
  *out = nullptr;
  return guarded([&] {
    ExperimentConfig ecfg =
        parse_experiment_config(cfg ? cfg->kv : std::map<std::string, std::string>{});
    auto res = std::make_unique<rmsc_result>();
    res->output = run_method(method, mg->graph, labels->labels, ecfg,
                             stage_seed(ecfg.seed, "classify"));
    for (int k = 0; k < mg->graph.view_count(); ++k)
      res->view_ids.push_back(mg->graph.view(k).id());
    if (res->output.has_search) {
      res->kept = res->output.search.best_set.ids;
    } else {
      res->kept = res->view_ids;
    }
    *out = res.release();
  });
}

double rmsc_result_score(const rmsc_result* res, int node) {
  if (!res || node < 0 || static_cast<size_t>(node) >= res->output.scores.size()) return 0.0;
  return res->output.scores[static_cast<size_t>(node)];
}

int rmsc_result_weight_count(const rmsc_result* res) {
  return res ? static_cast<int>(res->output.weights.size()) : 0;
}

double rmsc_result_weight(const rmsc_result* res, int k) {
  if (!res || k < 0 || static_cast<size_t>(k) >= res->output.weights.size()) return 0.0;
  return res->output.weights[static_cast<size_t>(k)];
}

int rmsc_result_view_id(const rmsc_result* res, int k) {
  if (!res || k < 0 || static_cast<size_t>(k) >= res->view_ids.size()) return -1;
  return res->view_ids[static_cast<size_t>(k)];
}

int rmsc_result_kept_views(const rmsc_result* res, int* ids, size_t capacity) {
  if (!res) return 0;
  if (ids) {
    size_t take = res->kept.size() < capacity ? res->kept.size() : capacity;
    std::memcpy(ids, res->kept.data(), take * sizeof(int));
  }
  return static_cast<int>(res->kept.size());
}

void rmsc_result_free(rmsc_result* res) { delete res; }

/* ---- metrics ----------------------------------------------------------- */

rmsc_status rmsc_average_precision(const double* scores, const int* truth, size_t n,
                                   double* out) {
  if (rmsc_status s = require(out != nullptr, "average_precision: out is NULL")) return s;
  if (rmsc_status s = require(scores != nullptr && truth != nullptr,
                              "average_precision: scores or truth is NULL"))
    return s;
  return guarded([&] {
    std::vector<double> s(scores, scores + n);
    std::vector<int> t(truth, truth + n);
    *out = average_precision(s, t);
  });
}

/* ---- batch drivers ----------------------------------------------------- */

rmsc_status rmsc_run_classify(const rmsc_config* cfg) {
  return run_driver(cfg, run_classify);
}

rmsc_status rmsc_run_noise_test(const rmsc_config* cfg) {
  return run_driver(cfg, run_noise_test);
}

rmsc_status rmsc_run_label_sweep(const rmsc_config* cfg) {
  return run_driver(cfg, run_label_sweep);
}

rmsc_status rmsc_run_gen_synthetic(const rmsc_config* cfg) {
  return run_driver(cfg, run_gen_synthetic);
}

} /* extern "C" */
