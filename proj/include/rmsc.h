/* C interface for the robust multi-graph semi-supervised classifier.
 *
 * All functions return rmsc_status unless noted. On failure the thread-local
 * message from rmsc_last_error() describes what went wrong. Handles are
 * opaque; every *_create / *_load pairs with the matching *_free, and freeing
 * NULL is a no-op.
 */
#ifndef RMSC_H
#define RMSC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rmsc_status {
  RMSC_OK = 0,
  RMSC_ERR_IO = 1,      /* file missing or unreadable/unwritable */
  RMSC_ERR_PARSE = 2,   /* malformed input file */
  RMSC_ERR_INVALID = 3, /* bad argument or inconsistent data */
  RMSC_ERR_NUMERIC = 4, /* solver or optimizer breakdown */
  RMSC_ERR_CONFIG = 5,  /* unknown or ill-typed configuration */
  RMSC_ERR_OTHER = 6
} rmsc_status;

/* Message from the most recent failing call on this thread; never NULL. */
const char* rmsc_last_error(void);

/* ---- multi-relational graph ------------------------------------------- */

typedef struct rmsc_multigraph rmsc_multigraph;

/* Empty collection of views over n nodes. */
rmsc_status rmsc_multigraph_create(int n, rmsc_multigraph** out);

/* Append one undirected view. edges holds count triples (u, v, w); u and v
 * are node ids cast to double, w a positive weight. view_id must be unique
 * within the collection. */
rmsc_status rmsc_multigraph_add_view(rmsc_multigraph* mg, int view_id,
                                     const double* edges, size_t count);

/* Read a manifest file: a header line "n m" followed by m edge-list paths
 * relative to the manifest location. */
rmsc_status rmsc_multigraph_load(const char* manifest_path, rmsc_multigraph** out);

/* Write edge lists plus manifest.txt into dir (created if needed). */
rmsc_status rmsc_multigraph_save(const rmsc_multigraph* mg, const char* dir);

int rmsc_multigraph_size(const rmsc_multigraph* mg);       /* node count */
int rmsc_multigraph_view_count(const rmsc_multigraph* mg); /* number of views */

void rmsc_multigraph_free(rmsc_multigraph* mg);

/* ---- partial labelings ------------------------------------------------- */

typedef struct rmsc_labels rmsc_labels;

/* All nodes unlabeled. */
rmsc_status rmsc_labels_create(int n, rmsc_labels** out);

/* label is +1, -1, or 0 to clear. */
rmsc_status rmsc_labels_set(rmsc_labels* labels, int node, int label);

/* Read "node label" lines; n fixes the node count. */
rmsc_status rmsc_labels_load(const char* path, int n, rmsc_labels** out);

rmsc_status rmsc_labels_save(const rmsc_labels* labels, const char* path);

int rmsc_labels_size(const rmsc_labels* labels);
int rmsc_labels_get(const rmsc_labels* labels, int node); /* 0 when unlabeled */

void rmsc_labels_free(rmsc_labels* labels);

/* ---- configuration ----------------------------------------------------- */

typedef struct rmsc_config rmsc_config;

/* Defaults for every setting. */
rmsc_status rmsc_config_create(rmsc_config** out);

/* Same key/value vocabulary as the config file format. Unknown keys and
 * ill-typed values are rejected. */
rmsc_status rmsc_config_set(rmsc_config* cfg, const char* key, const char* value);

/* Read a "key = value" file ('#' comments) and apply every pair. */
rmsc_status rmsc_config_load(rmsc_config* cfg, const char* path);

void rmsc_config_free(rmsc_config* cfg);

/* ---- classification ---------------------------------------------------- */

typedef struct rmsc_result rmsc_result;

/* Run one method over the views. method is "robust" (annealed subset search),
 * "tss" (convex weights over all views), "eql" (uniform weights) or "perf"
 * (per-view cross-validated weights). cfg may be NULL for defaults. */
rmsc_status rmsc_classify(const rmsc_multigraph* mg, const rmsc_labels* labels,
                          const rmsc_config* cfg, const char* method,
                          rmsc_result** out);

/* Per-node score; sign is the predicted class. An out-of-range node (or NULL
 * result) yields 0.0 without touching the error state. */
double rmsc_result_score(const rmsc_result* res, int node);

/* One weight per view, in view order. Out-of-range k yields 0.0 from the
 * weight getter and -1 from the id getter. */
int rmsc_result_weight_count(const rmsc_result* res);
double rmsc_result_weight(const rmsc_result* res, int k);
int rmsc_result_view_id(const rmsc_result* res, int k);

/* For "robust": the retained view ids, sorted. Returns the count; ids may be
 * NULL to query the size only. Other methods retain everything. */
int rmsc_result_kept_views(const rmsc_result* res, int* ids, size_t capacity);

void rmsc_result_free(rmsc_result* res);

/* ---- metrics ----------------------------------------------------------- */

/* Average precision of scores against ±1 truth; n entries each. */
rmsc_status rmsc_average_precision(const double* scores, const int* truth,
                                   size_t n, double* out);

/* ---- batch drivers ----------------------------------------------------- */

/* Each reads its inputs from cfg (manifest, labels, ...) and writes CSV files
 * under output_dir. These back the command-line subcommands. */
rmsc_status rmsc_run_classify(const rmsc_config* cfg);
rmsc_status rmsc_run_noise_test(const rmsc_config* cfg);
rmsc_status rmsc_run_label_sweep(const rmsc_config* cfg);
rmsc_status rmsc_run_gen_synthetic(const rmsc_config* cfg);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RMSC_H */
