#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rmsc {

namespace {

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

PenaltyParams class_penalty_params(const LabelVector& labels, double strength) {
  if (strength < 0.0 || !std::isfinite(strength))
    fail(ErrorCode::invalid, "class_penalty_params: strength must be nonnegative");
  int labeled = labels.labeled_count();
  if (labeled == 0)
    fail(ErrorCode::invalid, "class_penalty_params: need at least one labeled node");
  double f = static_cast<double>(labels.positive_count()) / static_cast<double>(labeled);

  PenaltyParams p;
  p.positive_fraction = f;
  double magnitude = strength * std::max(f, 1.0 - f);
  p.positive = 1.0 + sign(1.0 - 2.0 * f) * magnitude;
  p.unlabeled = 1.0;
  p.negative = 1.0 + sign(2.0 * f - 1.0) * magnitude;
  if (!(p.positive > 0.0) || !(p.negative > 0.0))
    fail(ErrorCode::invalid, "class_penalty_params: strength too large, penalty loses positivity");
  return p;
}

std::vector<double> class_penalty_matrix(const LabelVector& labels, double strength) {
  PenaltyParams p = class_penalty_params(labels, strength);
  std::vector<double> diag(static_cast<std::size_t>(labels.size()), p.unlabeled);
  for (int i = 0; i < labels.size(); ++i) {
    int y = labels.value(i);
    if (y > 0) diag[static_cast<std::size_t>(i)] = p.positive;
    else if (y < 0) diag[static_cast<std::size_t>(i)] = p.negative;
  }
  return diag;
}

TemperatureRange temperature_range(double d_thresh, double p_thresh, int m_l, int m_u) {
  if (!(d_thresh < 0.0)) fail(ErrorCode::invalid, "temperature_range: d_thresh must be negative");
  if (!(p_thresh > 0.0 && p_thresh < 1.0))
    fail(ErrorCode::invalid, "temperature_range: p_thresh must lie in (0, 1)");
  if (m_l < 1 || m_u < m_l)
    fail(ErrorCode::invalid, "temperature_range: need 1 <= m_l <= m_u");
  double b = d_thresh / std::log(p_thresh);  // positive: both factors negative
  double a = std::pow(b, 1.0 / static_cast<double>(m_l));
  double bb = std::pow(b, 1.0 / static_cast<double>(m_u));
  TemperatureRange r;
  r.lo = std::min(a, bb);
  r.hi = std::max(a, bb);
  return r;
}

double sample_temperature(const TemperatureRange& range, Rng& rng) {
  return rng.uniform(range.lo, range.hi);
}

namespace {

std::vector<int> ranking(const std::vector<double>& scores) {
  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return scores[static_cast<std::size_t>(a)] > scores[static_cast<std::size_t>(b)];
  });
  return order;
}

void check_scores(const std::vector<double>& scores, const std::vector<int>& truth) {
  if (scores.size() != truth.size() || scores.empty())
    fail(ErrorCode::invalid, "average_precision: need matching non-empty scores and truth");
  for (double s : scores)
    if (!std::isfinite(s)) fail(ErrorCode::invalid, "average_precision: non-finite score");
  for (int t : truth)
    if (t != 1 && t != -1) fail(ErrorCode::invalid, "average_precision: truth must be +1 or -1");
}

}  // namespace

double average_precision(const std::vector<double>& scores, const std::vector<int>& truth) {
  check_scores(scores, truth);
  int positives = 0;
  for (int t : truth) positives += (t == 1);
  if (positives == 0)
    fail(ErrorCode::invalid, "average_precision: undefined without positive examples");

  std::vector<int> order = ranking(scores);
  double sum = 0.0;
  int hits = 0;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (truth[static_cast<std::size_t>(order[rank])] == 1) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(rank + 1);
    }
  }
  return sum / static_cast<double>(positives);
}

std::vector<PrPoint> precision_recall_curve(const std::vector<double>& scores,
                                            const std::vector<int>& truth) {
  check_scores(scores, truth);
  int positives = 0;
  for (int t : truth) positives += (t == 1);
  if (positives == 0)
    fail(ErrorCode::invalid, "precision_recall_curve: undefined without positive examples");

  std::vector<int> order = ranking(scores);
  std::vector<PrPoint> curve;
  curve.reserve(order.size());
  int hits = 0;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    hits += (truth[static_cast<std::size_t>(order[rank])] == 1);
    PrPoint pt;
    pt.rank = static_cast<int>(rank + 1);
    pt.score = scores[static_cast<std::size_t>(order[rank])];
    pt.recall = static_cast<double>(hits) / static_cast<double>(positives);
    pt.precision = static_cast<double>(hits) / static_cast<double>(rank + 1);
    curve.push_back(pt);
  }
  return curve;
}

LabelVector sample_labeled_set(const LabelVector& truth, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    fail(ErrorCode::invalid, "sample_labeled_set: fraction must lie in (0, 1]");
  std::vector<int> pos, neg;
  for (int i = 0; i < truth.size(); ++i) {
    if (truth.value(i) == 1) pos.push_back(i);
    else if (truth.value(i) == -1) neg.push_back(i);
  }
  if (pos.empty() || neg.empty())
    fail(ErrorCode::invalid, "sample_labeled_set: truth must contain both classes");

  int n = truth.size();
  int want = static_cast<int>(std::lround(fraction * static_cast<double>(n)));
  want = std::clamp(want, 2, static_cast<int>(pos.size() + neg.size()));
  double pos_ratio = static_cast<double>(pos.size()) / static_cast<double>(pos.size() + neg.size());
  int want_pos = static_cast<int>(std::lround(pos_ratio * static_cast<double>(want)));
  want_pos = std::clamp(want_pos, 1, std::min<int>(static_cast<int>(pos.size()), want - 1));
  int want_neg = std::min<int>(want - want_pos, static_cast<int>(neg.size()));

  Rng rng(derive_seed(seed, 0x6c61626c65ull));  // "label" stream
  rng.shuffle(pos);
  rng.shuffle(neg);

  LabelVector out(n);
  for (int i = 0; i < want_pos; ++i) out.set(pos[static_cast<std::size_t>(i)], 1);
  for (int i = 0; i < want_neg; ++i) out.set(neg[static_cast<std::size_t>(i)], -1);
  return out;
}

std::vector<std::vector<int>> stratified_folds(const LabelVector& labels, int folds, Rng& rng) {
  if (folds < 2) fail(ErrorCode::invalid, "stratified_folds: need at least two folds");
  std::vector<int> pos, neg;
  for (int i : labels.labeled_nodes()) {
    if (labels.value(i) == 1) pos.push_back(i);
    else neg.push_back(i);
  }
  if (static_cast<int>(pos.size() + neg.size()) < folds)
    fail(ErrorCode::invalid, "stratified_folds: fewer labeled nodes than folds");
  rng.shuffle(pos);
  rng.shuffle(neg);

  std::vector<std::vector<int>> out(static_cast<std::size_t>(folds));
  for (std::size_t i = 0; i < pos.size(); ++i)
    out[i % static_cast<std::size_t>(folds)].push_back(pos[i]);
  // Offset the negative deal so small classes do not pile into fold 0.
  std::size_t shift = pos.size() % static_cast<std::size_t>(folds);
  for (std::size_t i = 0; i < neg.size(); ++i)
    out[(i + shift) % static_cast<std::size_t>(folds)].push_back(neg[i]);
  for (std::vector<int>& fold : out) std::sort(fold.begin(), fold.end());
  return out;
}

}  // namespace rmsc
