#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "noise.hpp"
#include "oracles.hpp"

using namespace rmsc;

namespace {

LabelVector split_truth(int n, int pos) {
  LabelVector truth(n);
  for (int i = 0; i < n; ++i) truth.set(i, i < pos ? 1 : -1);
  return truth;
}

struct EdgeTally {
  std::size_t within = 0;
  std::size_t cross = 0;
};

EdgeTally tally(const GraphView& g, const LabelVector& truth) {
  EdgeTally t;
  for (const Edge& e : g.edges()) {
    if (truth.value(e.u) == truth.value(e.v)) ++t.within;
    else ++t.cross;
  }
  return t;
}

}  // namespace

TEST_CASE("intensity knobs take their fixed values") {
  CHECK(intensity_value(NoiseModel::erdos_renyi, NoiseIntensity::low) == 0.05);
  CHECK(intensity_value(NoiseModel::erdos_renyi, NoiseIntensity::high) == 0.5);
  CHECK(intensity_value(NoiseModel::rewire, NoiseIntensity::low) == 0.6);
  CHECK(intensity_value(NoiseModel::rewire, NoiseIntensity::high) == 0.8);
  CHECK(intensity_value(NoiseModel::adversarial, NoiseIntensity::low) == 0.6);
  CHECK(intensity_value(NoiseModel::adversarial, NoiseIntensity::high) == 0.8);
}

TEST_CASE("noise model and intensity names round trip") {
  for (NoiseModel m : {NoiseModel::erdos_renyi, NoiseModel::rewire, NoiseModel::adversarial})
    CHECK(noise_model_from_name(noise_model_name(m)) == m);
  for (NoiseIntensity i : {NoiseIntensity::low, NoiseIntensity::high})
    CHECK(intensity_from_name(intensity_name(i)) == i);
  CHECK_THROWS_AS(noise_model_from_name("nope"), Error);
  CHECK_THROWS_AS(intensity_from_name("medium"), Error);
}

TEST_CASE("random graph generator hits its density in expectation") {
  CHECK(gen_erdos_renyi(30, 0.0, 1).edge_count() == 0);
  CHECK(gen_erdos_renyi(30, 1.0, 1).edge_count() == 30 * 29 / 2);

  GraphView g = gen_erdos_renyi(50, 0.3, 7);
  double pairs = 50.0 * 49.0 / 2.0;
  double mean = 0.3 * pairs;
  double sigma = std::sqrt(pairs * 0.3 * 0.7);
  CHECK(std::abs(static_cast<double>(g.edge_count()) - mean) < 5.0 * sigma);

  GraphView again = gen_erdos_renyi(50, 0.3, 7);
  CHECK(again.edge_count() == g.edge_count());
  for (const Edge& e : g.edges()) CHECK(e.weight == 1.0);
}

TEST_CASE("rewiring preserves edge count and weight multiset while crossing classes") {
  LabelVector truth = split_truth(40, 16);
  GraphView base = gen_two_block(40, truth, 0.5, 0.05, 3);
  EdgeTally before = tally(base, truth);
  REQUIRE(before.within > 10);

  GraphView noisy = rewire_graph(base, truth, 0.6, 9);
  CHECK(noisy.edge_count() == base.edge_count());

  EdgeTally after = tally(noisy, truth);
  std::size_t moved = static_cast<std::size_t>(
      std::lround(0.6 * static_cast<double>(before.within)));
  CHECK(after.within == before.within - moved);
  CHECK(after.cross == before.cross + moved);

  std::multiset<double> w_before, w_after;
  for (const Edge& e : base.edges()) w_before.insert(e.weight);
  for (const Edge& e : noisy.edges()) w_after.insert(e.weight);
  CHECK(w_before == w_after);

  GraphView again = rewire_graph(base, truth, 0.6, 9);
  CHECK(tally(again, truth).cross == after.cross);

  CHECK_THROWS_AS(rewire_graph(base, truth, 1.5, 1), Error);
  CHECK_THROWS_AS(rewire_graph(base, LabelVector(40), 0.5, 1), Error);
}

TEST_CASE("rewiring everything leaves no within-class edge") {
  LabelVector truth = split_truth(30, 12);
  GraphView base = gen_two_block(30, truth, 0.4, 0.0, 11);
  GraphView noisy = rewire_graph(base, truth, 1.0, 13);
  CHECK(tally(noisy, truth).within == 0);
  CHECK(noisy.edge_count() == base.edge_count());
}

TEST_CASE("adversarial generator meets exact edge budgets") {
  LabelVector truth = split_truth(50, 20);
  GraphView g = gen_adversarial(50, truth, 0.8, 300, 21);
  CHECK(g.edge_count() == 300);
  EdgeTally t = tally(g, truth);
  CHECK(t.cross == 240);
  CHECK(t.within == 60);
  for (const Edge& e : g.edges()) CHECK(e.weight == 1.0);

  GraphView again = gen_adversarial(50, truth, 0.8, 300, 21);
  CHECK(tally(again, truth).cross == 240);

  CHECK_THROWS_AS(gen_adversarial(50, truth, 0.8, 100000, 1), Error);
  CHECK_THROWS_AS(gen_adversarial(50, truth, -0.1, 10, 1), Error);
}

TEST_CASE("two-block generator separates within and cross densities") {
  LabelVector truth = split_truth(60, 24);
  GraphView g = gen_two_block(60, truth, 0.3, 0.02, 31);
  EdgeTally t = tally(g, truth);
  double within_pairs = 24.0 * 23.0 / 2.0 + 36.0 * 35.0 / 2.0;
  double cross_pairs = 24.0 * 36.0;
  double within_rate = static_cast<double>(t.within) / within_pairs;
  double cross_rate = static_cast<double>(t.cross) / cross_pairs;
  CHECK(std::abs(within_rate - 0.3) < 0.08);
  CHECK(std::abs(cross_rate - 0.02) < 0.02);
}

TEST_CASE("injection appends fresh views and leaves the originals alone") {
  LabelVector truth = split_truth(40, 16);
  MultiGraph mg(40);
  mg.add_view(gen_two_block(40, truth, 0.4, 0.05, 1, 0));
  mg.add_view(gen_two_block(40, truth, 0.3, 0.05, 2, 1));
  std::size_t e0 = mg.view(0).edge_count();

  NoiseSpec spec;
  spec.model = NoiseModel::adversarial;
  spec.intensity = NoiseIntensity::high;
  spec.count = 3;
  spec.seed = 77;
  MultiGraph out = inject(mg, spec, truth);

  REQUIRE(out.view_count() == 5);
  CHECK(out.view(0).edge_count() == e0);
  CHECK(out.view(2).id() == 2);
  CHECK(out.view(3).id() == 3);
  CHECK(out.view(4).id() == 4);

  std::size_t mean_edges = (mg.view(0).edge_count() + mg.view(1).edge_count() + 1) / 2;
  for (int k = 2; k < 5; ++k) {
    CHECK(out.view(k).edge_count() == mean_edges);
    EdgeTally t = tally(out.view(k), truth);
    CHECK(t.cross > t.within);  // cross_ratio 0.8
  }

  // distinct injected views: seeds differ per copy
  CHECK(tally(out.view(2), truth).cross == static_cast<std::size_t>(
            std::lround(0.8 * static_cast<double>(mean_edges))));
  bool identical = out.view(2).edges() == out.view(3).edges();
  CHECK(!identical);
}

TEST_CASE("injection count zero is a no-op copy") {
  LabelVector truth = split_truth(20, 8);
  MultiGraph mg(20);
  mg.add_view(gen_two_block(20, truth, 0.5, 0.1, 5, 0));
  NoiseSpec spec;
  spec.count = 0;
  MultiGraph out = inject(mg, spec, truth);
  CHECK(out.view_count() == 1);
}

TEST_CASE("planted benchmark has the documented shape") {
  PlantedConfig cfg;
  cfg.n = 100;
  cfg.seed = 4;
  PlantedData data = planted_multigraph(cfg);

  CHECK(data.truth.labeled_count() == 100);
  CHECK(data.truth.positive_count() == 40);
  REQUIRE(data.graph.view_count() == 5);

  // class labels are scattered over node indices, not contiguous
  bool scattered = false;
  for (int i = 1; i < 100; ++i) scattered |= (data.truth.value(i) != data.truth.value(i - 1));
  CHECK(scattered);

  // informative views have strong within-class majorities, decreasing
  double prev_ratio = 1e9;
  for (int k = 0; k < 3; ++k) {
    EdgeTally t = tally(data.graph.view(k), data.truth);
    double ratio = static_cast<double>(t.within) / static_cast<double>(t.cross + 1);
    CHECK(ratio > 2.0);
    CHECK(ratio < prev_ratio);
    prev_ratio = ratio;
  }

  // the adversarial view is mostly cross-class
  EdgeTally adv = tally(data.graph.view(4), data.truth);
  CHECK(adv.cross > 4 * adv.within);

  // same seed, same data; different seed, different data
  PlantedData again = planted_multigraph(cfg);
  CHECK(again.graph.view(0).edges() == data.graph.view(0).edges());
  cfg.seed = 5;
  PlantedData other = planted_multigraph(cfg);
  CHECK(other.graph.view(0).edges() != data.graph.view(0).edges());
}
