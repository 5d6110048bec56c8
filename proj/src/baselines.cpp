#include "baselines.hpp"

namespace rmsc {

BaselineResult baseline_equal_weights(const MultiGraph& mg, const LabelVector& labels,
                                      double penalty_strength, const SolveOptions& opt) {
  int m = mg.view_count();
  if (m == 0) fail(ErrorCode::invalid, "baseline_equal_weights: multigraph has no views");
  BaselineResult res;
  res.weights.assign(static_cast<std::size_t>(m), 1.0 / static_cast<double>(m));
  std::vector<double> penalty = class_penalty_matrix(labels, penalty_strength);
  res.f = estimate_labels(penalty, res.weights, mg.laplacians(), labels.values(), opt);
  return res;
}

BaselineResult baseline_perf_weights(const MultiGraph& mg, const LabelVector& labels,
                                     const CvConfig& cfg, std::uint64_t seed) {
  int m = mg.view_count();
  if (m == 0) fail(ErrorCode::invalid, "baseline_perf_weights: multigraph has no views");

  BaselineResult res;
  res.weights.assign(static_cast<std::size_t>(m), 0.0);
  double total = 0.0;
  for (int k = 0; k < m; ++k) {
    GraphSet single;
    single.ids.push_back(mg.view(k).id());
    double score = 0.0;
    try {
      score = cross_val_score(single, mg, labels, cfg, seed);
    } catch (const Error&) {
      score = 0.0;  // a view the solver cannot handle contributes nothing
    }
    res.weights[static_cast<std::size_t>(k)] = score;
    total += score;
  }
  if (total > 0.0) {
    for (double& w : res.weights) w /= total;
  } else {
    for (double& w : res.weights) w = 1.0 / static_cast<double>(m);
  }

  std::vector<double> penalty = class_penalty_matrix(labels, cfg.penalty_strength);
  res.f = estimate_labels(penalty, res.weights, mg.laplacians(), labels.values(), cfg.dual.solve);
  return res;
}

BaselineResult baseline_tss(const MultiGraph& mg, const LabelVector& labels,
                            double penalty_strength, const DualConfig& cfg) {
  if (mg.view_count() == 0) fail(ErrorCode::invalid, "baseline_tss: multigraph has no views");
  std::vector<double> penalty = class_penalty_matrix(labels, penalty_strength);
  OptimizeResult opt = optimize_weights(mg.laplacians(), labels.values(), penalty, cfg);
  BaselineResult res;
  res.f = std::move(opt.f);
  res.weights = std::move(opt.weights.w);
  return res;
}

}  // namespace rmsc
