#include "dual.hpp"

#include <algorithm>
#include <cmath>

namespace rmsc {

namespace {

void check_params(double c, double c0) {
  if (c < 0.0 || !std::isfinite(c))
    fail(ErrorCode::invalid, "dual: penalty c must be nonnegative");
  if (!(c0 > 0.0) || !std::isfinite(c0))
    fail(ErrorCode::invalid, "dual: box ceiling c0 must be positive");
}

double weight_sum(const std::vector<double>& w) {
  double s = 0.0;
  for (double wk : w) s += wk;
  return s;
}

// Shared evaluation point: the label estimate f at w, the data term
// (Cy)'f, and the penalized objective.
struct EvalPoint {
  std::vector<double> f;
  double objective = 0.0;
};

EvalPoint evaluate(const std::vector<double>& w, const std::vector<double>& penalty_diag,
                   const std::vector<const SymSparse*>& laplacians,
                   const std::vector<int>& y, double c, const SolveOptions& opt) {
  EvalPoint pt;
  pt.f = estimate_labels(penalty_diag, w, laplacians, y, opt);
  double data = 0.0;
  for (std::size_t i = 0; i < pt.f.size(); ++i)
    data += penalty_diag[i] * static_cast<double>(y[i]) * pt.f[i];
  pt.objective = data + c * weight_sum(w);
  return pt;
}

std::vector<double> gradient_at(const std::vector<double>& f,
                                const std::vector<const SymSparse*>& laplacians, double c) {
  std::vector<double> g(laplacians.size());
  for (std::size_t k = 0; k < laplacians.size(); ++k)
    g[k] = c - laplacians[k]->quadratic_form(f);
  return g;
}

}  // namespace

double dual_objective(const std::vector<double>& w, const std::vector<double>& penalty_diag,
                      const std::vector<const SymSparse*>& laplacians,
                      const std::vector<int>& y, double c, const SolveOptions& opt) {
  if (w.size() != laplacians.size())
    fail(ErrorCode::invalid, "dual_objective: weight count mismatch");
  return evaluate(w, penalty_diag, laplacians, y, c, opt).objective;
}

std::vector<double> dual_gradient(const std::vector<double>& w,
                                  const std::vector<double>& penalty_diag,
                                  const std::vector<const SymSparse*>& laplacians,
                                  const std::vector<int>& y, double c, const SolveOptions& opt) {
  if (w.size() != laplacians.size())
    fail(ErrorCode::invalid, "dual_gradient: weight count mismatch");
  EvalPoint pt = evaluate(w, penalty_diag, laplacians, y, c, opt);
  return gradient_at(pt.f, laplacians, c);
}

std::vector<double> project_box(std::vector<double> w, double c0) {
  if (!(c0 > 0.0)) fail(ErrorCode::invalid, "project_box: c0 must be positive");
  for (double& wk : w) wk = std::clamp(wk, 0.0, c0);
  return w;
}

OptimizeResult optimize_weights(const std::vector<const SymSparse*>& laplacians,
                                const std::vector<int>& y,
                                const std::vector<double>& penalty_diag,
                                const DualConfig& cfg) {
  check_params(cfg.c, cfg.c0);
  std::size_t m = laplacians.size();

  OptimizeResult res;
  res.weights.c0 = cfg.c0;
  res.weights.w.assign(m, cfg.c0 / 2.0);  // box center
  if (m == 0) {
    // Nothing to weight; the estimate is driven by the penalty alone.
    EvalPoint pt = evaluate({}, penalty_diag, laplacians, y, cfg.c, cfg.solve);
    res.objective = pt.objective;
    res.f = std::move(pt.f);
    res.converged = true;
    return res;
  }

  const double sigma = 1e-4;      // Armijo sufficient-decrease factor
  const double min_step = 1e-12;  // below this the line search has stalled

  EvalPoint cur = evaluate(res.weights.w, penalty_diag, laplacians, y, cfg.c, cfg.solve);
  res.trace.push_back(cur.objective);

  for (int it = 0; it < cfg.max_iter; ++it) {
    std::vector<double> g = gradient_at(cur.f, laplacians, cfg.c);

    // Gradient mapping at unit step; zero exactly where the box is active
    // against the descent direction.
    double pg2 = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      double moved = res.weights.w[k] - std::clamp(res.weights.w[k] - g[k], 0.0, cfg.c0);
      pg2 += moved * moved;
    }
    if (std::sqrt(pg2) <= cfg.grad_tol) {
      res.converged = true;
      break;
    }

    double step = cfg.step_size;
    bool accepted = false;
    while (step >= min_step) {
      std::vector<double> w_try(m);
      double decrease = 0.0;  // g' (w - w_try), nonnegative for projected steps
      for (std::size_t k = 0; k < m; ++k) {
        w_try[k] = std::clamp(res.weights.w[k] - step * g[k], 0.0, cfg.c0);
        decrease += g[k] * (res.weights.w[k] - w_try[k]);
      }
      if (decrease <= 0.0) break;  // projection absorbed the whole step
      EvalPoint trial = evaluate(w_try, penalty_diag, laplacians, y, cfg.c, cfg.solve);
      if (trial.objective <= cur.objective - sigma * decrease) {
        res.weights.w = std::move(w_try);
        cur = std::move(trial);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    res.iterations = it + 1;
    if (!accepted) break;  // no admissible step; solver noise floor reached
    res.trace.push_back(cur.objective);
  }

  res.objective = cur.objective;
  res.f = std::move(cur.f);
  return res;
}

}  // namespace rmsc
