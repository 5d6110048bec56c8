#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace rmsc {

// Class-dependent penalty diagonal. With f the positive fraction among the
// labeled nodes and s the strength:
//   labeled +1:  1 + s * sign(1 - 2f) * max(f, 1 - f)
//   unlabeled:   1
//   labeled -1:  1 + s * sign(2f - 1) * max(f, 1 - f)
// so the minority class is penalized harder for flipping. s must leave both
// values positive.
struct PenaltyParams {
  double positive = 1.0;
  double unlabeled = 1.0;
  double negative = 1.0;
  double positive_fraction = 0.0;
};

PenaltyParams class_penalty_params(const LabelVector& labels, double strength);
std::vector<double> class_penalty_matrix(const LabelVector& labels, double strength);

// Temperature interval for the annealing search, derived from a target
// acceptance probability: a candidate worse by d_thresh should be accepted
// with probability p_thresh after m_l..m_u removals. With
// b = d_thresh / ln(p_thresh), the bounds are b^{1/m_l} and b^{1/m_u},
// ordered numerically.
struct TemperatureRange {
  double lo = 0.0;
  double hi = 0.0;
};

TemperatureRange temperature_range(double d_thresh, double p_thresh, int m_l, int m_u);
double sample_temperature(const TemperatureRange& range, Rng& rng);

// Average precision of scores against ±1 truth over the same index set.
// Ranking is by descending score; ties keep ascending index order. Errors
// when the truth has no positives.
double average_precision(const std::vector<double>& scores, const std::vector<int>& truth);

struct PrPoint {
  int rank = 0;
  double score = 0.0;
  double recall = 0.0;
  double precision = 0.0;
};

std::vector<PrPoint> precision_recall_curve(const std::vector<double>& scores,
                                            const std::vector<int>& truth);

// Stratified sample of the ground truth: roughly fraction * n nodes keep
// their label, at least one per class, class ratio preserved.
LabelVector sample_labeled_set(const LabelVector& truth, double fraction, std::uint64_t seed);

// Splits the labeled nodes into class-balanced folds (shuffle within class,
// deal round-robin). Every fold ends up non-empty when folds <= labeled
// count.
std::vector<std::vector<int>> stratified_folds(const LabelVector& labels, int folds, Rng& rng);

}  // namespace rmsc
