#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "noise.hpp"
#include "oracles.hpp"
#include "search.hpp"

using namespace rmsc;

TEST_CASE("GraphSet construction, removal and rendering") {
  GraphSet s = GraphSet::full(4);
  CHECK(s.ids == std::vector<int>{0, 1, 2, 3});
  CHECK(s.contains(2));
  CHECK(!s.contains(9));
  CHECK(s.to_string() == "0|1|2|3");

  GraphSet t = s.without(1);
  CHECK(t.ids == std::vector<int>{0, 2, 3});
  CHECK_THROWS_AS(t.without(1), Error);
  CHECK(GraphSet{}.to_string() == "-");
}

TEST_CASE("canonical hashes separate nearby sets and ignore nothing") {
  std::set<std::uint64_t> seen;
  int total = 0;
  for (int mask = 0; mask < 256; ++mask) {  // every subset of 8 views
    GraphSet s;
    for (int k = 0; k < 8; ++k)
      if (mask & (1 << k)) s.ids.push_back(k);
    seen.insert(canonical_hash(s));
    ++total;
  }
  CHECK(static_cast<int>(seen.size()) == total);
  CHECK(canonical_hash(GraphSet::full(3)) == canonical_hash(GraphSet::full(3)));
}

TEST_CASE("acceptance probability is exactly one for non-worse candidates") {
  for (double best : {0.0, 0.3, 0.92}) {
    for (double delta : {0.0, 1e-12, 0.05, 0.7}) {
      for (int removed : {0, 1, 5, 9}) {
        CHECK(acceptance_probability(best + delta, best, 0.55, removed) == 1.0);
      }
    }
  }
}

TEST_CASE("acceptance probability matches frozen reference points") {
  // gap -0.1 at t = 0.5 after one removal: exp(-0.1 / 0.25)
  CHECK(std::abs(acceptance_probability(0.6, 0.7, 0.5, 1) - 0.6703200460356393) < 1e-12);
  // same gap deep in the search at t = 0.682
  CHECK(std::abs(acceptance_probability(0.5, 0.6, 0.682, 9) - 0.010116044415258317) < 1e-12);
  // at the upper calibrated temperature the probability is 0.01 by construction
  TemperatureRange r = temperature_range(-0.1, 0.01, 5, 10);
  CHECK(std::abs(acceptance_probability(0.5, 0.6, r.hi, 9) - 0.01) < 1e-12);

  CHECK_THROWS_AS(acceptance_probability(0.5, 0.6, 0.0, 1), Error);
  CHECK_THROWS_AS(acceptance_probability(0.5, 0.6, -1.0, 1), Error);
  CHECK_THROWS_AS(acceptance_probability(0.5, 0.6, 0.5, -1), Error);
}

TEST_CASE("deeper removals shrink the acceptance probability when t < 1") {
  double prev = 1.0;
  for (int removed = 0; removed < 8; ++removed) {
    double p = acceptance_probability(0.55, 0.6, 0.6, removed);
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("2-means split separates the published weight profile") {
  std::vector<int> ids = {0, 1, 2, 3, 4};
  std::vector<double> w = {25.17, 16.54, 12.79, 17.82, 27.68};
  WeightSplit split = split_weights_2means(ids, w);
  CHECK(split.large_ids == std::vector<int>{0, 4});
  CHECK(split.small_ids == std::vector<int>{1, 2, 3});
}

TEST_CASE("2-means split edge cases") {
  CHECK(split_weights_2means({}, {}).large_ids.empty());

  WeightSplit one = split_weights_2means({7}, {3.0});
  CHECK(one.large_ids == std::vector<int>{7});
  CHECK(one.small_ids.empty());

  WeightSplit pair = split_weights_2means({3, 9}, {5.0, 1.0});
  CHECK(pair.small_ids == std::vector<int>{9});
  CHECK(pair.large_ids == std::vector<int>{3});

  // all equal: no gap, everything counts as high weight
  WeightSplit flat = split_weights_2means({0, 1, 2}, {2.0, 2.0, 2.0});
  CHECK(flat.small_ids.empty());
  CHECK(flat.large_ids == std::vector<int>{0, 1, 2});

  CHECK_THROWS_AS(split_weights_2means({0, 1}, {1.0}), Error);
}

namespace {

double partition_sse(const std::vector<double>& vals) {
  if (vals.empty()) return 0.0;
  double mean = 0.0;
  for (double v : vals) mean += v;
  mean /= static_cast<double>(vals.size());
  double sse = 0.0;
  for (double v : vals) sse += (v - mean) * (v - mean);
  return sse;
}

}  // namespace

TEST_CASE("2-means split is optimal over every nonempty bipartition") {
  Rng rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    int p = 2 + static_cast<int>(rng.below(6));
    std::vector<int> ids(static_cast<std::size_t>(p));
    std::vector<double> w(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
      ids[static_cast<std::size_t>(i)] = i;
      w[static_cast<std::size_t>(i)] = rng.uniform(0.0, 30.0);
    }

    WeightSplit split = split_weights_2means(ids, w);
    std::vector<double> lo, hi;
    for (int i = 0; i < p; ++i) {
      bool in_large = std::find(split.large_ids.begin(), split.large_ids.end(), i) !=
                      split.large_ids.end();
      (in_large ? hi : lo).push_back(w[static_cast<std::size_t>(i)]);
    }
    double got = partition_sse(lo) + partition_sse(hi);

    double best = 1e300;
    for (int mask = 1; mask < (1 << p) - 1; ++mask) {
      std::vector<double> a, b;
      for (int i = 0; i < p; ++i)
        ((mask >> i) & 1 ? a : b).push_back(w[static_cast<std::size_t>(i)]);
      best = std::min(best, partition_sse(a) + partition_sse(b));
    }
    CHECK(got <= best + 1e-9);

    // the high cluster really is the high one
    if (!lo.empty() && !hi.empty())
      CHECK(*std::max_element(lo.begin(), lo.end()) <= *std::min_element(hi.begin(), hi.end()));
  }
}

namespace {

PlantedData small_planted(std::uint64_t seed) {
  PlantedConfig cfg;
  cfg.n = 60;
  cfg.seed = seed;
  return planted_multigraph(cfg);
}

SearchConfig fast_search_config(std::uint64_t seed) {
  SearchConfig cfg;
  cfg.seed = seed;
  cfg.cv.folds = 3;
  cfg.cv.dual.c = 0.1;
  cfg.cv.dual.c0 = 10.0;
  cfg.cv.dual.max_iter = 40;
  cfg.cv.dual.grad_tol = 1e-3;
  cfg.cv.dual.solve.tol = 1e-6;
  return cfg;
}

}  // namespace

TEST_CASE("cross-validation score is deterministic and favors informative views") {
  PlantedData data = small_planted(3);
  LabelVector labels = sample_labeled_set(data.truth, 0.4, 17);
  CvConfig cfg = fast_search_config(1).cv;

  GraphSet informative;
  informative.ids = {0};
  GraphSet adversarial;
  adversarial.ids = {4};

  double s_inf = cross_val_score(informative, data.graph, labels, cfg, 5);
  double s_adv = cross_val_score(adversarial, data.graph, labels, cfg, 5);
  CHECK(s_inf == cross_val_score(informative, data.graph, labels, cfg, 5));
  CHECK(s_inf > s_adv + 0.15);
  CHECK(s_inf <= 1.0);
  CHECK(s_adv >= 0.0);
}

TEST_CASE("search is reproducible and never evaluates a set twice") {
  PlantedData data = small_planted(11);
  LabelVector labels = sample_labeled_set(data.truth, 0.4, 23);
  SearchConfig cfg = fast_search_config(42);

  SearchResult a = robust_search(data.graph, data.truth.restricted_to(labels.labeled_nodes()), cfg);
  SearchResult b = robust_search(data.graph, data.truth.restricted_to(labels.labeled_nodes()), cfg);

  REQUIRE(a.log.size() == b.log.size());
  for (std::size_t i = 0; i < a.log.size(); ++i) {
    CHECK(a.log[i].set == b.log[i].set);
    CHECK(a.log[i].cv_score == b.log[i].cv_score);
    CHECK(a.log[i].accepted == b.log[i].accepted);
    CHECK(a.log[i].draw == b.log[i].draw);
  }
  CHECK(a.best_set == b.best_set);
  CHECK(a.best_score == b.best_score);

  std::set<std::uint64_t> hashes;
  for (const SearchRecord& rec : a.log) CHECK(hashes.insert(canonical_hash(rec.set)).second);

  // the root is dequeued first and always survives the draw
  REQUIRE(!a.log.empty());
  CHECK(a.log[0].set.size() == data.graph.view_count());
  CHECK(a.log[0].removed_graph == -1);
  CHECK(a.log[0].accepted);
  CHECK(a.log[0].probability == 1.0);
}

TEST_CASE("worker count changes nothing about the search decisions") {
  PlantedData data = small_planted(19);
  LabelVector labels = sample_labeled_set(data.truth, 0.4, 31);
  SearchConfig cfg = fast_search_config(7);

  cfg.workers = 1;
  SearchResult seq = robust_search(data.graph, labels, cfg);
  cfg.workers = 4;
  SearchResult par = robust_search(data.graph, labels, cfg);

  REQUIRE(seq.log.size() == par.log.size());
  for (std::size_t i = 0; i < seq.log.size(); ++i) {
    CHECK(seq.log[i].set == par.log[i].set);
    CHECK(seq.log[i].cv_score == par.log[i].cv_score);
    CHECK(seq.log[i].accepted == par.log[i].accepted);
  }
  CHECK(seq.best_set == par.best_set);
  CHECK(oracle::max_abs_diff(seq.weights_full, par.weights_full) == 0.0);
}

TEST_CASE("search drops the adversarial view from a small planted problem") {
  PlantedData data = small_planted(5);
  LabelVector labels = sample_labeled_set(data.truth, 0.5, 13);
  SearchConfig cfg = fast_search_config(3);
  cfg.temperature = 0.5;

  SearchResult res = robust_search(data.graph, labels, cfg);
  // view 4 is adversarial; a successful run leaves it outside the best set
  CHECK(!res.best_set.contains(4));
  CHECK(res.weights_full[4] == 0.0);
  CHECK(res.best_set.contains(0));
  REQUIRE(res.f.size() == 60);
  CHECK(res.evaluated_count == static_cast<int>(res.log.size()));
}

TEST_CASE("max_sets caps the number of evaluated candidates") {
  PlantedData data = small_planted(29);
  LabelVector labels = sample_labeled_set(data.truth, 0.4, 37);
  SearchConfig cfg = fast_search_config(9);
  cfg.max_sets = 1;
  SearchResult res = robust_search(data.graph, labels, cfg);
  CHECK(res.evaluated_count == 1);
  CHECK(res.best_set.size() == data.graph.view_count());
}

TEST_CASE("pinned temperature is honored and recorded") {
  PlantedData data = small_planted(31);
  LabelVector labels = sample_labeled_set(data.truth, 0.4, 41);
  SearchConfig cfg = fast_search_config(11);
  cfg.temperature = 0.6;
  cfg.max_sets = 2;
  SearchResult res = robust_search(data.graph, labels, cfg);
  CHECK(res.temperature == 0.6);

  cfg.temperature = 0.0;
  SearchResult sampled = robust_search(data.graph, labels, cfg);
  TemperatureRange r = temperature_range(cfg.d_thresh, cfg.p_thresh, cfg.m_l, cfg.m_u);
  CHECK(sampled.temperature >= r.lo);
  CHECK(sampled.temperature <= r.hi);
}
