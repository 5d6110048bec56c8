#pragma once

#include <cstdint>
#include <string>

#include "graph.hpp"

namespace rmsc {

enum class NoiseModel { erdos_renyi, rewire, adversarial };
enum class NoiseIntensity { low, high };

std::string noise_model_name(NoiseModel model);
NoiseModel noise_model_from_name(const std::string& name);
std::string intensity_name(NoiseIntensity intensity);
NoiseIntensity intensity_from_name(const std::string& name);

// Canonical intensity knob per model: edge density for random graphs,
// rewired fraction for rewiring, cross-class fraction for adversarial.
double intensity_value(NoiseModel model, NoiseIntensity intensity);

// Unit-weight random graph; every unordered pair appears independently with
// the given density.
GraphView gen_erdos_renyi(int n, double density, std::uint64_t seed, int id = 0);

// Moves the given fraction of within-class edges onto random cross-class
// pairs, keeping each moved edge's weight and the total edge count. Truth
// must label every node.
GraphView rewire_graph(const GraphView& base, const LabelVector& truth, double ratio,
                       std::uint64_t seed, int id = 0);

// Unit-weight graph with an exact edge budget: round(cross_ratio * count)
// edges across the classes, the rest inside classes. Truth must label every
// node.
GraphView gen_adversarial(int n, const LabelVector& truth, double cross_ratio,
                          std::size_t edge_count, std::uint64_t seed, int id = 0);

struct NoiseSpec {
  NoiseModel model = NoiseModel::erdos_renyi;
  NoiseIntensity intensity = NoiseIntensity::low;
  int count = 1;           // how many views to inject
  int base_view = 0;       // view position the rewire model copies
  std::uint64_t seed = 1;
};

// Copy of the multigraph with `count` generated views appended; ids continue
// after the largest existing id. Adversarial views get the mean edge count
// of the existing views.
MultiGraph inject(const MultiGraph& mg, const NoiseSpec& spec, const LabelVector& truth);

// Two-block graph: within-class pairs connected with probability p_in,
// cross-class pairs with p_out.
GraphView gen_two_block(int n, const LabelVector& truth, double p_in, double p_out,
                        std::uint64_t seed, int id = 0);

// Benchmark dataset with a planted 40/60 split: three informative two-block
// views of decreasing quality, one pure random view, one adversarial view.
struct PlantedConfig {
  int n = 100;
  double positive_fraction = 0.4;
  std::uint64_t seed = 1;
};

struct PlantedData {
  MultiGraph graph;
  LabelVector truth;
};

PlantedData planted_multigraph(const PlantedConfig& cfg);

}  // namespace rmsc
