#include "solver.hpp"

#include <cmath>

namespace rmsc {

CompositeOperator::CompositeOperator(const std::vector<double>& penalty_diag,
                                     std::vector<double> weights,
                                     std::vector<const SymSparse*> laplacians)
    : n_(static_cast<int>(penalty_diag.size())),
      penalty_diag_(&penalty_diag),
      weights_(std::move(weights)),
      laplacians_(std::move(laplacians)) {
  if (n_ == 0) fail(ErrorCode::invalid, "CompositeOperator: empty penalty diagonal");
  if (weights_.size() != laplacians_.size())
    fail(ErrorCode::invalid, "CompositeOperator: weight/Laplacian count mismatch");
  for (double ci : penalty_diag) {
    if (!(ci > 0.0) || !std::isfinite(ci))
      fail(ErrorCode::invalid, "CompositeOperator: penalty diagonal must be positive");
  }
  for (double w : weights_) {
    if (w < 0.0 || !std::isfinite(w))
      fail(ErrorCode::invalid, "CompositeOperator: weights must be nonnegative");
  }
  for (const SymSparse* lap : laplacians_) {
    if (lap->size() != n_)
      fail(ErrorCode::invalid, "CompositeOperator: Laplacian dimension mismatch");
  }
  scratch_.resize(static_cast<std::size_t>(n_));
}

void CompositeOperator::apply(const double* x, double* y) const {
  const std::vector<double>& c = *penalty_diag_;
  for (int i = 0; i < n_; ++i) y[i] = c[static_cast<std::size_t>(i)] * x[i];
  for (std::size_t k = 0; k < laplacians_.size(); ++k) {
    double wk = weights_[k];
    if (wk == 0.0) continue;
    laplacians_[k]->multiply(x, scratch_.data());
    for (int i = 0; i < n_; ++i) y[i] += wk * scratch_[static_cast<std::size_t>(i)];
  }
}

std::vector<double> CompositeOperator::apply(const std::vector<double>& x) const {
  if (x.size() != static_cast<std::size_t>(n_))
    fail(ErrorCode::invalid, "CompositeOperator::apply: size mismatch");
  std::vector<double> y(x.size());
  apply(x.data(), y.data());
  return y;
}

SolveReport solve(const CompositeOperator& op, const std::vector<double>& rhs,
                  const SolveOptions& opt) {
  int n = op.size();
  if (rhs.size() != static_cast<std::size_t>(n))
    fail(ErrorCode::invalid, "solve: rhs size mismatch");
  int max_iter = opt.max_iter > 0 ? opt.max_iter : 10 * n;

  SolveReport rep;
  rep.solution.assign(static_cast<std::size_t>(n), 0.0);

  double b2 = 0.0;
  for (double bi : rhs) b2 += bi * bi;
  if (b2 == 0.0) {
    rep.converged = true;
    return rep;
  }
  double bnorm = std::sqrt(b2);

  std::vector<double> r = rhs;
  std::vector<double> p = rhs;
  std::vector<double> ap(static_cast<std::size_t>(n));
  double rs = b2;

  for (int it = 1; it <= max_iter; ++it) {
    op.apply(p.data(), ap.data());
    double pap = 0.0;
    for (int i = 0; i < n; ++i) pap += p[static_cast<std::size_t>(i)] * ap[static_cast<std::size_t>(i)];
    if (!std::isfinite(pap) || pap <= 0.0)
      fail(ErrorCode::numeric, "solve: operator lost positive definiteness");
    double alpha = rs / pap;
    for (int i = 0; i < n; ++i) {
      rep.solution[static_cast<std::size_t>(i)] += alpha * p[static_cast<std::size_t>(i)];
      r[static_cast<std::size_t>(i)] -= alpha * ap[static_cast<std::size_t>(i)];
    }
    double rs_next = 0.0;
    for (double ri : r) rs_next += ri * ri;
    if (!std::isfinite(rs_next)) fail(ErrorCode::numeric, "solve: residual diverged");
    rep.iterations = it;
    rep.residual_norm = std::sqrt(rs_next) / bnorm;
    if (rep.residual_norm <= opt.tol) {
      rep.converged = true;
      return rep;
    }
    double beta = rs_next / rs;
    for (int i = 0; i < n; ++i)
      p[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)] + beta * p[static_cast<std::size_t>(i)];
    rs = rs_next;
  }
  return rep;
}

std::vector<double> estimate_labels(const std::vector<double>& penalty_diag,
                                    const std::vector<double>& weights,
                                    const std::vector<const SymSparse*>& laplacians,
                                    const std::vector<int>& y,
                                    const SolveOptions& opt) {
  if (y.size() != penalty_diag.size())
    fail(ErrorCode::invalid, "estimate_labels: label vector size mismatch");
  CompositeOperator op(penalty_diag, weights, laplacians);
  std::vector<double> rhs(y.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    rhs[i] = penalty_diag[i] * static_cast<double>(y[i]);
  SolveReport rep = solve(op, rhs, opt);
  if (!rep.converged)
    fail(ErrorCode::numeric, "estimate_labels: solver stopped at relative residual " +
                                 std::to_string(rep.residual_norm));
  return rep.solution;
}

}  // namespace rmsc
