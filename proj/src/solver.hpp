#pragma once

#include <vector>

#include "graph.hpp"

namespace rmsc {

struct SolveOptions {
  double tol = 1e-8;  // relative residual target ||r|| / ||b||
  int max_iter = 0;   // 0 picks 10 n
};

struct SolveReport {
  std::vector<double> solution;
  double residual_norm = 0.0;  // final relative residual
  int iterations = 0;
  bool converged = false;
};

// The operator C + sum_k w_k L_k applied matrix-free. C is a positive
// diagonal, each L_k a positive semidefinite Laplacian, all weights
// nonnegative, so the sum is symmetric positive definite.
class CompositeOperator {
 public:
  CompositeOperator(const std::vector<double>& penalty_diag,
                    std::vector<double> weights,
                    std::vector<const SymSparse*> laplacians);

  int size() const { return n_; }
  void apply(const double* x, double* y) const;
  std::vector<double> apply(const std::vector<double>& x) const;

 private:
  int n_ = 0;
  const std::vector<double>* penalty_diag_;
  std::vector<double> weights_;
  std::vector<const SymSparse*> laplacians_;
  mutable std::vector<double> scratch_;
};

// Conjugate gradient from x = 0. Reports rather than throws on hitting the
// iteration cap; NaN or Inf in the recurrence is a numeric error.
SolveReport solve(const CompositeOperator& op, const std::vector<double>& rhs,
                  const SolveOptions& opt = {});

// f = (C + sum_k w_k L_k)^{-1} C y. Throws on solver non-convergence.
std::vector<double> estimate_labels(const std::vector<double>& penalty_diag,
                                    const std::vector<double>& weights,
                                    const std::vector<const SymSparse*>& laplacians,
                                    const std::vector<int>& y,
                                    const SolveOptions& opt = {});

}  // namespace rmsc
