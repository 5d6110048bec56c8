#pragma once

#include <vector>

#include "solver.hpp"

namespace rmsc {

// Hyper-parameters of the box-constrained dual weight program
//   min_w  (Cy)' (C + sum_k w_k L_k)^{-1} (Cy) + c * sum_k w_k,
//   0 <= w_k <= c0,
// solved by projected gradient descent with Armijo backtracking.
struct DualConfig {
  double c = 0.1;          // sparsity penalty on the weights
  double c0 = 100.0;       // box ceiling per weight
  double step_size = 1.0;  // initial step tried each iteration
  int max_iter = 500;
  double grad_tol = 1e-6;  // projected-gradient norm target
  SolveOptions solve;      // inner linear-system accuracy
};

struct WeightVector {
  std::vector<double> w;
  double c0 = 0.0;
};

struct OptimizeResult {
  WeightVector weights;
  double objective = 0.0;
  std::vector<double> f;          // label estimate at the final weights
  std::vector<double> trace;      // objective value per accepted iterate
  int iterations = 0;
  bool converged = false;
};

double dual_objective(const std::vector<double>& w, const std::vector<double>& penalty_diag,
                      const std::vector<const SymSparse*>& laplacians,
                      const std::vector<int>& y, double c, const SolveOptions& opt = {});

// Component k is c - f' L_k f with f the label estimate at w; a single
// composite solve is shared across all components.
std::vector<double> dual_gradient(const std::vector<double>& w,
                                  const std::vector<double>& penalty_diag,
                                  const std::vector<const SymSparse*>& laplacians,
                                  const std::vector<int>& y, double c,
                                  const SolveOptions& opt = {});

std::vector<double> project_box(std::vector<double> w, double c0);

OptimizeResult optimize_weights(const std::vector<const SymSparse*>& laplacians,
                                const std::vector<int>& y,
                                const std::vector<double>& penalty_diag,
                                const DualConfig& cfg);

}  // namespace rmsc
