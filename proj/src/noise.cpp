#include "noise.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace rmsc {

std::string noise_model_name(NoiseModel model) {
  switch (model) {
    case NoiseModel::erdos_renyi: return "er";
    case NoiseModel::rewire: return "rw";
    case NoiseModel::adversarial: return "av";
  }
  fail(ErrorCode::invalid, "noise_model_name: unknown model");
}

NoiseModel noise_model_from_name(const std::string& name) {
  if (name == "er") return NoiseModel::erdos_renyi;
  if (name == "rw") return NoiseModel::rewire;
  if (name == "av") return NoiseModel::adversarial;
  fail(ErrorCode::config, "unknown noise model '" + name + "' (expected er, rw or av)");
}

std::string intensity_name(NoiseIntensity intensity) {
  return intensity == NoiseIntensity::low ? "low" : "high";
}

NoiseIntensity intensity_from_name(const std::string& name) {
  if (name == "low") return NoiseIntensity::low;
  if (name == "high") return NoiseIntensity::high;
  fail(ErrorCode::config, "unknown intensity '" + name + "' (expected low or high)");
}

double intensity_value(NoiseModel model, NoiseIntensity intensity) {
  bool high = intensity == NoiseIntensity::high;
  switch (model) {
    case NoiseModel::erdos_renyi: return high ? 0.5 : 0.05;
    case NoiseModel::rewire: return high ? 0.8 : 0.6;
    case NoiseModel::adversarial: return high ? 0.8 : 0.6;
  }
  fail(ErrorCode::invalid, "intensity_value: unknown model");
}

GraphView gen_erdos_renyi(int n, double density, std::uint64_t seed, int id) {
  if (n <= 0) fail(ErrorCode::invalid, "gen_erdos_renyi: node count must be positive");
  if (!(density >= 0.0 && density <= 1.0))
    fail(ErrorCode::invalid, "gen_erdos_renyi: density must lie in [0, 1]");
  Rng rng(derive_seed(seed, 0x6572ull));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform() < density) edges.push_back({u, v, 1.0});
  return GraphView::from_edges(n, std::move(edges), id);
}

namespace {

void require_full_truth(const LabelVector& truth, const char* who) {
  if (truth.labeled_count() != truth.size())
    fail(ErrorCode::invalid, std::string(who) + ": truth must label every node");
  if (truth.positive_count() == 0 || truth.positive_count() == truth.size())
    fail(ErrorCode::invalid, std::string(who) + ": truth must contain both classes");
}

std::pair<int, int> ordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Draws `want` distinct pairs (one endpoint from each list, or both from the
// same list) that avoid `taken`. Rejection sampling with a generous cap.
std::vector<std::pair<int, int>> draw_pairs(const std::vector<int>& from, const std::vector<int>& to,
                                            std::size_t want, std::set<std::pair<int, int>>& taken,
                                            Rng& rng, const char* who) {
  bool same = (&from == &to);
  std::size_t capacity = same ? from.size() * (from.size() - 1) / 2 : from.size() * to.size();
  if (want > capacity)
    fail(ErrorCode::invalid, std::string(who) + ": not enough free node pairs");
  std::vector<std::pair<int, int>> out;
  std::size_t attempts = 0;
  std::size_t cap = 400 * (want + 16) + 64 * capacity;
  while (out.size() < want) {
    if (++attempts > cap)
      fail(ErrorCode::numeric, std::string(who) + ": pair sampling failed to place edges");
    int a = from[static_cast<std::size_t>(rng.below(from.size()))];
    int b = to[static_cast<std::size_t>(rng.below(to.size()))];
    if (a == b) continue;
    std::pair<int, int> key = ordered(a, b);
    if (!taken.insert(key).second) continue;
    out.push_back(key);
  }
  return out;
}

}  // namespace

GraphView rewire_graph(const GraphView& base, const LabelVector& truth, double ratio,
                       std::uint64_t seed, int id) {
  if (!(ratio >= 0.0 && ratio <= 1.0))
    fail(ErrorCode::invalid, "rewire_graph: ratio must lie in [0, 1]");
  if (truth.size() != base.size())
    fail(ErrorCode::invalid, "rewire_graph: truth size mismatch");
  require_full_truth(truth, "rewire_graph");

  std::vector<Edge> within, cross;
  for (const Edge& e : base.edges()) {
    if (truth.value(e.u) == truth.value(e.v)) within.push_back(e);
    else cross.push_back(e);
  }

  Rng rng(derive_seed(seed, 0x7277ull));
  std::size_t move = static_cast<std::size_t>(
      std::lround(ratio * static_cast<double>(within.size())));
  std::vector<std::size_t> order(within.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);

  std::vector<Edge> kept = cross;
  std::vector<double> moved_weights;
  for (std::size_t i = 0; i < within.size(); ++i) {
    if (i < move) moved_weights.push_back(within[order[i]].weight);
    else kept.push_back(within[order[i]]);
  }

  std::set<std::pair<int, int>> taken;
  for (const Edge& e : kept) taken.insert(ordered(e.u, e.v));

  std::vector<int> pos, neg;
  for (int i = 0; i < truth.size(); ++i)
    (truth.value(i) == 1 ? pos : neg).push_back(i);

  std::vector<std::pair<int, int>> placed =
      draw_pairs(pos, neg, moved_weights.size(), taken, rng, "rewire_graph");
  for (std::size_t i = 0; i < placed.size(); ++i)
    kept.push_back({placed[i].first, placed[i].second, moved_weights[i]});

  std::sort(kept.begin(), kept.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return GraphView::from_edges(base.size(), std::move(kept), id);
}

GraphView gen_adversarial(int n, const LabelVector& truth, double cross_ratio,
                          std::size_t edge_count, std::uint64_t seed, int id) {
  if (n <= 0) fail(ErrorCode::invalid, "gen_adversarial: node count must be positive");
  if (!(cross_ratio >= 0.0 && cross_ratio <= 1.0))
    fail(ErrorCode::invalid, "gen_adversarial: cross_ratio must lie in [0, 1]");
  if (truth.size() != n) fail(ErrorCode::invalid, "gen_adversarial: truth size mismatch");
  require_full_truth(truth, "gen_adversarial");

  std::size_t cross_count = static_cast<std::size_t>(
      std::lround(cross_ratio * static_cast<double>(edge_count)));
  std::size_t within_count = edge_count - cross_count;

  std::vector<int> pos, neg, all;
  for (int i = 0; i < n; ++i) {
    (truth.value(i) == 1 ? pos : neg).push_back(i);
    all.push_back(i);
  }

  Rng rng(derive_seed(seed, 0x6176ull));
  std::set<std::pair<int, int>> taken;
  std::vector<Edge> edges;
  for (const std::pair<int, int>& p :
       draw_pairs(pos, neg, cross_count, taken, rng, "gen_adversarial"))
    edges.push_back({p.first, p.second, 1.0});

  // Within edges split between the classes in proportion to their pair counts.
  auto pairs_of = [](std::size_t c) { return c * (c - 1) / 2; };
  std::size_t cap_pos = pairs_of(pos.size());
  std::size_t cap_neg = pairs_of(neg.size());
  if (within_count > cap_pos + cap_neg)
    fail(ErrorCode::invalid, "gen_adversarial: not enough within-class pairs");
  std::size_t want_pos = static_cast<std::size_t>(std::lround(
      static_cast<double>(within_count) * static_cast<double>(cap_pos) /
      static_cast<double>(cap_pos + cap_neg)));
  want_pos = std::min(want_pos, cap_pos);
  std::size_t want_neg = std::min(within_count - want_pos, cap_neg);
  want_pos = within_count - want_neg;

  for (const std::pair<int, int>& p :
       draw_pairs(pos, pos, want_pos, taken, rng, "gen_adversarial"))
    edges.push_back({p.first, p.second, 1.0});
  for (const std::pair<int, int>& p :
       draw_pairs(neg, neg, want_neg, taken, rng, "gen_adversarial"))
    edges.push_back({p.first, p.second, 1.0});

  return GraphView::from_edges(n, std::move(edges), id);
}

GraphView gen_two_block(int n, const LabelVector& truth, double p_in, double p_out,
                        std::uint64_t seed, int id) {
  if (n <= 0) fail(ErrorCode::invalid, "gen_two_block: node count must be positive");
  if (!(p_in >= 0.0 && p_in <= 1.0 && p_out >= 0.0 && p_out <= 1.0))
    fail(ErrorCode::invalid, "gen_two_block: probabilities must lie in [0, 1]");
  if (truth.size() != n) fail(ErrorCode::invalid, "gen_two_block: truth size mismatch");
  require_full_truth(truth, "gen_two_block");

  Rng rng(derive_seed(seed, 0x7462ull));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      double p = truth.value(u) == truth.value(v) ? p_in : p_out;
      if (rng.uniform() < p) edges.push_back({u, v, 1.0});
    }
  }
  return GraphView::from_edges(n, std::move(edges), id);
}

PlantedData planted_multigraph(const PlantedConfig& cfg) {
  if (cfg.n < 10) fail(ErrorCode::invalid, "planted_multigraph: need at least 10 nodes");
  if (!(cfg.positive_fraction > 0.0 && cfg.positive_fraction < 1.0))
    fail(ErrorCode::invalid, "planted_multigraph: positive fraction must lie in (0, 1)");

  PlantedData data;
  data.truth = LabelVector(cfg.n);
  int n_pos = std::clamp(static_cast<int>(std::lround(cfg.positive_fraction * cfg.n)), 1,
                         cfg.n - 1);
  // Class membership is scattered, not contiguous, so node index carries no
  // class signal.
  std::vector<int> order(static_cast<std::size_t>(cfg.n));
  for (int i = 0; i < cfg.n; ++i) order[static_cast<std::size_t>(i)] = i;
  Rng assign_rng(derive_seed(cfg.seed, 0x636c617373ull));
  assign_rng.shuffle(order);
  for (int i = 0; i < cfg.n; ++i)
    data.truth.set(order[static_cast<std::size_t>(i)], i < n_pos ? 1 : -1);

  // Informative views of decreasing contrast between within- and cross-class
  // connection rates.
  const double p_in[3] = {0.25, 0.18, 0.12};
  const double p_out[3] = {0.02, 0.03, 0.04};
  data.graph = MultiGraph(cfg.n);
  std::size_t informative_edges = 0;
  for (int k = 0; k < 3; ++k) {
    GraphView g = gen_two_block(cfg.n, data.truth, p_in[k], p_out[k],
                                derive_seed(cfg.seed, 0x76696577ull + static_cast<std::uint64_t>(k)), k);
    informative_edges += g.edge_count();
    data.graph.add_view(std::move(g));
  }
  std::size_t mean_edges = informative_edges / 3;

  double er_density = static_cast<double>(mean_edges) /
                      (static_cast<double>(cfg.n) * (cfg.n - 1) / 2.0);
  data.graph.add_view(gen_erdos_renyi(cfg.n, er_density,
                                      derive_seed(cfg.seed, 0x76696577ull + 3), 3));
  data.graph.add_view(gen_adversarial(cfg.n, data.truth, 0.85, mean_edges,
                                      derive_seed(cfg.seed, 0x76696577ull + 4), 4));
  return data;
}

MultiGraph inject(const MultiGraph& mg, const NoiseSpec& spec, const LabelVector& truth) {
  if (spec.count < 0) fail(ErrorCode::invalid, "inject: count must be nonnegative");
  if (mg.view_count() == 0) fail(ErrorCode::invalid, "inject: multigraph has no views");
  if (spec.model == NoiseModel::rewire &&
      (spec.base_view < 0 || spec.base_view >= mg.view_count()))
    fail(ErrorCode::invalid, "inject: rewire base view out of range");

  int next_id = 0;
  std::size_t total_edges = 0;
  for (const GraphView& g : mg.views()) {
    next_id = std::max(next_id, g.id() + 1);
    total_edges += g.edge_count();
  }
  std::size_t mean_edges = (total_edges + mg.views().size() / 2) / mg.views().size();

  double value = intensity_value(spec.model, spec.intensity);
  MultiGraph out = mg;
  for (int j = 0; j < spec.count; ++j) {
    std::uint64_t view_seed = derive_seed(spec.seed, 0x6e6f697365ull + static_cast<std::uint64_t>(j));
    int id = next_id + j;
    switch (spec.model) {
      case NoiseModel::erdos_renyi:
        out.add_view(gen_erdos_renyi(mg.size(), value, view_seed, id));
        break;
      case NoiseModel::rewire:
        out.add_view(rewire_graph(mg.view(spec.base_view), truth, value, view_seed, id));
        break;
      case NoiseModel::adversarial:
        out.add_view(gen_adversarial(mg.size(), truth, value, mean_edges, view_seed, id));
        break;
    }
  }
  return out;
}

}  // namespace rmsc
