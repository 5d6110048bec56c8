#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <thread>
#include <unordered_set>

namespace rmsc {

GraphSet GraphSet::full(int m) {
  if (m < 0) fail(ErrorCode::invalid, "GraphSet::full: negative size");
  GraphSet s;
  s.ids.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) s.ids[static_cast<std::size_t>(i)] = i;
  return s;
}

GraphSet GraphSet::without(int id) const {
  GraphSet out;
  out.ids.reserve(ids.size());
  for (int g : ids)
    if (g != id) out.ids.push_back(g);
  if (out.ids.size() == ids.size())
    fail(ErrorCode::invalid, "GraphSet::without: id not in set");
  return out;
}

bool GraphSet::contains(int id) const {
  return std::binary_search(ids.begin(), ids.end(), id);
}

std::string GraphSet::to_string() const {
  if (ids.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += '|';
    out += std::to_string(ids[i]);
  }
  return out;
}

std::uint64_t canonical_hash(const GraphSet& set) {
  // FNV-1a over the sorted ids plus the length; stable across runs and
  // platforms.
  std::uint64_t h = 1469598103934665603ull;
  auto eat = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  eat(static_cast<std::uint64_t>(set.ids.size()));
  for (int id : set.ids) eat(static_cast<std::uint64_t>(static_cast<std::uint32_t>(id)));
  return h;
}

double acceptance_probability(double cv_score, double best_score, double t, int removed) {
  if (!(t > 0.0) || !std::isfinite(t))
    fail(ErrorCode::invalid, "acceptance_probability: temperature must be positive");
  if (removed < 0) fail(ErrorCode::invalid, "acceptance_probability: negative removal count");
  double gap = cv_score - best_score;
  if (gap >= 0.0) return 1.0;
  double denom = std::pow(t, static_cast<double>(removed + 1));
  return std::exp(gap / denom);
}

WeightSplit split_weights_2means(const std::vector<int>& ids, const std::vector<double>& weights) {
  if (ids.size() != weights.size())
    fail(ErrorCode::invalid, "split_weights_2means: id/weight count mismatch");
  WeightSplit out;
  std::size_t p = ids.size();
  if (p == 0) return out;
  if (p == 1) {
    out.large_ids = ids;
    return out;
  }

  std::vector<std::pair<double, int>> items(p);
  for (std::size_t i = 0; i < p; ++i) items[i] = {weights[i], ids[i]};
  std::sort(items.begin(), items.end());

  if (items.front().first == items.back().first) {
    // Degenerate: no gap to split on, treat the whole set as high weight.
    for (const auto& [w, id] : items) out.large_ids.push_back(id);
    std::sort(out.large_ids.begin(), out.large_ids.end());
    return out;
  }

  std::vector<double> prefix(p + 1, 0.0), prefix2(p + 1, 0.0);
  for (std::size_t i = 0; i < p; ++i) {
    prefix[i + 1] = prefix[i] + items[i].first;
    prefix2[i + 1] = prefix2[i] + items[i].first * items[i].first;
  }
  auto sse = [&](std::size_t a, std::size_t b) {  // [a, b)
    double cnt = static_cast<double>(b - a);
    double sum = prefix[b] - prefix[a];
    return (prefix2[b] - prefix2[a]) - sum * sum / cnt;
  };

  std::size_t best_split = 1;
  double best_sse = sse(0, 1) + sse(1, p);
  for (std::size_t s = 2; s < p; ++s) {
    double v = sse(0, s) + sse(s, p);
    if (v < best_sse) {  // ties keep the smaller split, so the high cluster stays big
      best_sse = v;
      best_split = s;
    }
  }

  for (std::size_t i = 0; i < p; ++i) {
    if (i < best_split) out.small_ids.push_back(items[i].second);
    else out.large_ids.push_back(items[i].second);
  }
  std::sort(out.small_ids.begin(), out.small_ids.end());
  std::sort(out.large_ids.begin(), out.large_ids.end());
  return out;
}

namespace {

double fold_score(const std::vector<double>& f, const LabelVector& labels,
                  const std::vector<int>& fold, bool use_accuracy) {
  std::vector<double> scores;
  std::vector<int> truth;
  scores.reserve(fold.size());
  truth.reserve(fold.size());
  for (int i : fold) {  // folds are sorted, so ties later break by node index
    scores.push_back(f[static_cast<std::size_t>(i)]);
    truth.push_back(labels.value(i));
  }
  if (use_accuracy) {
    int hits = 0;
    for (std::size_t i = 0; i < truth.size(); ++i)
      hits += ((scores[i] > 0.0 ? 1 : -1) == truth[i]);
    return static_cast<double>(hits) / static_cast<double>(truth.size());
  }
  return average_precision(scores, truth);
}

}  // namespace

double cross_val_score(const GraphSet& set, const MultiGraph& mg, const LabelVector& labels,
                       const CvConfig& cfg, std::uint64_t seed) {
  std::vector<const SymSparse*> laps = mg.laplacians(set.ids);
  Rng fold_rng(derive_seed(seed, 0x666f6c6473ull));  // "folds" stream
  std::vector<std::vector<int>> folds = stratified_folds(labels, cfg.folds, fold_rng);

  double total = 0.0;
  int counted = 0;
  for (const std::vector<int>& fold : folds) {
    if (fold.empty()) continue;
    bool has_positive = false;
    for (int i : fold) has_positive |= (labels.value(i) == 1);
    if (!has_positive && !cfg.use_accuracy) continue;

    LabelVector visible = labels;
    for (int i : fold) visible.set(i, 0);
    if (visible.labeled_count() == 0 || visible.positive_count() == 0) continue;

    std::vector<double> penalty = class_penalty_matrix(visible, cfg.penalty_strength);
    OptimizeResult opt = optimize_weights(laps, visible.values(), penalty, cfg.dual);
    total += fold_score(opt.f, labels, fold, cfg.use_accuracy);
    ++counted;
  }
  if (counted == 0)
    fail(ErrorCode::invalid, "cross_val_score: no fold had scorable held-out labels");
  return total / static_cast<double>(counted);
}

namespace {

struct Candidate {
  GraphSet set;
  GraphSet parent;
  int removed_graph = -1;
};

struct Evaluation {
  double cv_score = 0.0;
  std::vector<double> weights;  // full-data weights aligned with set ids
  std::vector<double> f;
  bool failed = false;
  std::string error;
};

Evaluation evaluate_candidate(const Candidate& cand, const MultiGraph& mg,
                              const LabelVector& labels, const CvConfig& cfg,
                              std::uint64_t seed) {
  Evaluation ev;
  try {
    ev.cv_score = cross_val_score(cand.set, mg, labels, cfg, seed);
    std::vector<double> penalty = class_penalty_matrix(labels, cfg.penalty_strength);
    OptimizeResult opt =
        optimize_weights(mg.laplacians(cand.set.ids), labels.values(), penalty, cfg.dual);
    ev.weights = std::move(opt.weights.w);
    ev.f = std::move(opt.f);
  } catch (const Error& e) {
    ev = Evaluation{};
    ev.failed = true;
    ev.error = e.what();
  }
  return ev;
}

}  // namespace

SearchResult robust_search(const MultiGraph& mg, const LabelVector& labels,
                           const SearchConfig& cfg) {
  int m = mg.view_count();
  if (m == 0) fail(ErrorCode::invalid, "robust_search: multigraph has no views");
  if (cfg.workers < 1) fail(ErrorCode::invalid, "robust_search: workers must be >= 1");

  SearchResult res;
  if (cfg.temperature > 0.0) {
    res.temperature = cfg.temperature;
  } else {
    TemperatureRange range = temperature_range(cfg.d_thresh, cfg.p_thresh, cfg.m_l, cfg.m_u);
    Rng trng(derive_seed(cfg.seed, 0x74656d70ull));  // "temp" stream
    res.temperature = sample_temperature(range, trng);
  }

  std::deque<Candidate> queue;
  std::unordered_set<std::uint64_t> seen;
  Candidate root;
  for (int k = 0; k < m; ++k) root.set.ids.push_back(mg.view(k).id());
  std::sort(root.set.ids.begin(), root.set.ids.end());
  queue.push_back(root);
  seen.insert(canonical_hash(root.set));

  double best_score = 0.0;  // held-out scores are nonnegative, so the root always passes
  bool have_best = false;
  int step = 0;

  while (!queue.empty()) {
    if (cfg.max_sets > 0 && res.evaluated_count >= cfg.max_sets) break;

    // Snapshot the queue as one batch; scoring a candidate depends only on
    // the candidate itself, so batch evaluation in any thread order matches
    // strict FIFO processing.
    std::vector<Candidate> batch(queue.begin(), queue.end());
    if (cfg.max_sets > 0) {
      std::size_t room = static_cast<std::size_t>(cfg.max_sets - res.evaluated_count);
      if (batch.size() > room) batch.resize(room);
    }
    queue.erase(queue.begin(), queue.begin() + static_cast<std::ptrdiff_t>(batch.size()));

    std::vector<Evaluation> evals(batch.size());
    int threads = std::min<int>(cfg.workers, static_cast<int>(batch.size()));
    if (threads <= 1) {
      for (std::size_t i = 0; i < batch.size(); ++i)
        evals[i] = evaluate_candidate(batch[i], mg, labels, cfg.cv, cfg.seed);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(threads));
      for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
          for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= batch.size()) return;
            evals[i] = evaluate_candidate(batch[i], mg, labels, cfg.cv, cfg.seed);
          }
        });
      }
      for (std::thread& th : pool) th.join();
    }

    for (std::size_t i = 0; i < batch.size(); ++i) {
      const Candidate& cand = batch[i];
      Evaluation& ev = evals[i];
      ++res.evaluated_count;

      SearchRecord rec;
      rec.step = step++;
      rec.parent = cand.parent;
      rec.set = cand.set;
      rec.removed_graph = cand.removed_graph;
      rec.cv_score = ev.cv_score;
      rec.failed = ev.failed;
      rec.error = ev.error;

      if (ev.failed) {
        rec.probability = 0.0;
        rec.draw = 0.0;
        rec.accepted = false;
        res.log.push_back(std::move(rec));
        continue;
      }

      int removed = m - cand.set.size();
      rec.probability = acceptance_probability(ev.cv_score, best_score, res.temperature, removed);
      Rng draw_rng(derive_seed(cfg.seed, canonical_hash(cand.set) ^ 0xacce9ull));
      rec.draw = draw_rng.uniform();
      rec.accepted = rec.draw <= rec.probability;

      if (rec.accepted) {
        ++res.processed_count;
        // Ties go to the smaller set: when validation cannot tell two
        // subsets apart, keeping extra views is unjustified complexity, and
        // held-out scores on modest label budgets saturate often enough for
        // this to matter.
        bool better = ev.cv_score > best_score ||
                      (ev.cv_score == best_score && cand.set.size() < res.best_set.size());
        if (!have_best || better) {
          have_best = true;
          best_score = ev.cv_score;
          res.best_set = cand.set;
          res.best_score = ev.cv_score;
          res.weights_on_set = ev.weights;
          res.f = ev.f;
        }
        WeightSplit split = split_weights_2means(cand.set.ids, ev.weights);
        for (int id : split.large_ids) {
          GraphSet child = cand.set.without(id);
          if (child.ids.empty()) continue;
          std::uint64_t h = canonical_hash(child);
          if (!seen.insert(h).second) continue;
          Candidate c;
          c.set = std::move(child);
          c.parent = cand.set;
          c.removed_graph = id;
          queue.push_back(std::move(c));
        }
      }
      res.log.push_back(std::move(rec));
    }
  }

  if (!have_best)
    fail(ErrorCode::numeric, "robust_search: no candidate set could be evaluated");

  res.weights_full.assign(static_cast<std::size_t>(m), 0.0);
  for (int k = 0; k < m; ++k) {
    int id = mg.view(k).id();
    for (std::size_t i = 0; i < res.best_set.ids.size(); ++i) {
      if (res.best_set.ids[i] == id) {
        res.weights_full[static_cast<std::size_t>(k)] = res.weights_on_set[i];
        break;
      }
    }
  }
  return res;
}

}  // namespace rmsc
