#pragma once

#include <cstdint>
#include <vector>

#include "search.hpp"

namespace rmsc {

struct BaselineResult {
  std::vector<double> f;
  std::vector<double> weights;  // one per view, in view order
};

// Every view weighted 1/m.
BaselineResult baseline_equal_weights(const MultiGraph& mg, const LabelVector& labels,
                                      double penalty_strength, const SolveOptions& opt = {});

// Each view weighted by its own cross-validated score, normalized to sum to
// one. Views the solver rejects score zero.
BaselineResult baseline_perf_weights(const MultiGraph& mg, const LabelVector& labels,
                                     const CvConfig& cfg, std::uint64_t seed);

// The dual weight program over the full view set, no subset search.
BaselineResult baseline_tss(const MultiGraph& mg, const LabelVector& labels,
                            double penalty_strength, const DualConfig& cfg);

}  // namespace rmsc
