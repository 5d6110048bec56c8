#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dual.hpp"
#include "metrics.hpp"

namespace rmsc {

// Subset of view ids, kept sorted; the canonical hash keys visited-set
// deduplication.
struct GraphSet {
  std::vector<int> ids;

  static GraphSet full(int m);
  GraphSet without(int id) const;
  bool contains(int id) const;
  int size() const { return static_cast<int>(ids.size()); }
  bool operator==(const GraphSet& other) const { return ids == other.ids; }
  std::string to_string() const;  // ids joined by '|', empty set is "-"
};

std::uint64_t canonical_hash(const GraphSet& set);

// min(1, exp((cv_score - best_score) / t^(removed+1))). Equals 1 whenever
// the candidate is no worse than the best; deeper removals sharpen the
// threshold because t < 1.
double acceptance_probability(double cv_score, double best_score, double t, int removed);

// Exact 1-d 2-means: scans every split point of the sorted weights and keeps
// the partition with the least within-cluster sum of squares. Equal-SSE ties
// go to the larger high cluster, and all-equal weights put every id in the
// high cluster.
struct WeightSplit {
  std::vector<int> small_ids;
  std::vector<int> large_ids;
};

WeightSplit split_weights_2means(const std::vector<int>& ids, const std::vector<double>& weights);

struct CvConfig {
  int folds = 5;
  double penalty_strength = 0.7;
  bool use_accuracy = false;  // rank quality by default, sign accuracy on request
  DualConfig dual;
};

// Mean held-out score over stratified folds. Per fold the visible labels are
// the sampled ones outside the fold, the penalty diagonal is rebuilt from
// them, the weights are re-optimized, and the fold is scored. Folds whose
// held-out part has no positive node are skipped (their rank score is
// undefined).
double cross_val_score(const GraphSet& set, const MultiGraph& mg, const LabelVector& labels,
                       const CvConfig& cfg, std::uint64_t seed);

struct SearchConfig {
  CvConfig cv;
  double temperature = 0.0;  // > 0 pins it, otherwise sampled from the range below
  double d_thresh = -0.1;
  double p_thresh = 0.01;
  int m_l = 5;
  int m_u = 10;
  std::uint64_t seed = 1;
  int workers = 1;
  int max_sets = 0;  // safety valve on evaluated candidates; 0 means no cap
};

struct SearchRecord {
  int step = 0;               // dequeue order
  GraphSet parent;            // empty for the root
  GraphSet set;
  int removed_graph = -1;     // view id removed from parent; -1 for the root
  double cv_score = 0.0;
  double probability = 0.0;
  double draw = 0.0;
  bool accepted = false;      // survived the acceptance draw and was expanded
  bool failed = false;        // evaluation error; scored 0 and never expanded
  std::string error;
};

struct SearchResult {
  GraphSet best_set;
  double best_score = 0.0;
  std::vector<double> weights_on_set;  // aligned with best_set.ids
  std::vector<double> weights_full;    // per view id, zero for removed views
  std::vector<double> f;               // label estimate under the best set
  double temperature = 0.0;
  int evaluated_count = 0;
  int processed_count = 0;
  std::vector<SearchRecord> log;
};

// Annealing search over view subsets, FIFO queue seeded with the full set.
// Each dequeued candidate is cross-validated; survivors update the running
// best and branch by dropping one high-weight view at a time. Acceptance
// draws depend only on (seed, candidate set), so runs are reproducible and
// worker count never changes the decisions.
SearchResult robust_search(const MultiGraph& mg, const LabelVector& labels,
                           const SearchConfig& cfg);

}  // namespace rmsc
