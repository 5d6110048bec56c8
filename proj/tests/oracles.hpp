#pragma once

// Independent reference implementations the tests compare against. These
// deliberately avoid the library's sparse code paths: dense matrices,
// Gaussian elimination, finite differences.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "common.hpp"
#include "graph.hpp"

namespace oracle {

using Dense = std::vector<std::vector<double>>;

inline Dense dense_of(const rmsc::SymSparse& a) {
  int n = a.size();
  Dense m(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) m[i][i] = a.diag()[static_cast<std::size_t>(i)];
  for (const rmsc::SymEntry& e : a.upper()) {
    m[e.u][e.v] = e.value;
    m[e.v][e.u] = e.value;
  }
  return m;
}

// Normalized Laplacian built from a dense adjacency, straight from the
// definition D^{-1/2} (D - W) D^{-1/2} with 0/0 treated as 0.
inline Dense dense_normalized_laplacian(const Dense& w) {
  std::size_t n = w.size();
  std::vector<double> deg(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) deg[i] += w[i][j];
  Dense l(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double lap = (i == j ? deg[i] : 0.0) - w[i][j];
      if (deg[i] > 0.0 && deg[j] > 0.0) l[i][j] = lap / (std::sqrt(deg[i]) * std::sqrt(deg[j]));
      else l[i][j] = 0.0;
    }
  }
  return l;
}

inline std::vector<double> dense_matvec(const Dense& m, const std::vector<double>& x) {
  std::vector<double> y(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  return y;
}

// Gaussian elimination with partial pivoting.
inline std::vector<double> dense_solve(Dense a, std::vector<double> b) {
  std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      double factor = a[r][col] / a[col][col];
      for (std::size_t cc = col; cc < n; ++cc) a[r][cc] -= factor * a[col][cc];
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

// f = (C + sum w_k L_k)^{-1} C y computed densely.
inline std::vector<double> dense_estimate(const std::vector<double>& penalty,
                                          const std::vector<double>& weights,
                                          const std::vector<const rmsc::SymSparse*>& laps,
                                          const std::vector<int>& y) {
  std::size_t n = penalty.size();
  Dense a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = penalty[i];
  for (std::size_t k = 0; k < laps.size(); ++k) {
    Dense l = dense_of(*laps[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] += weights[k] * l[i][j];
  }
  std::vector<double> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = penalty[i] * static_cast<double>(y[i]);
  return dense_solve(std::move(a), std::move(rhs));
}

// Central differences.
inline std::vector<double> fd_gradient(const std::function<double(const std::vector<double>&)>& fn,
                                       std::vector<double> w, double h) {
  std::vector<double> g(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    double keep = w[k];
    w[k] = keep + h;
    double up = fn(w);
    w[k] = keep - h;
    double down = fn(w);
    w[k] = keep;
    g[k] = (up - down) / (2.0 * h);
  }
  return g;
}

// Random connected-ish test graph; isolated nodes appear when edge_prob is
// small, which is intended.
inline rmsc::GraphView random_graph(int n, double edge_prob, std::uint64_t seed, int id = 0,
                                    bool random_weights = true) {
  rmsc::Rng rng(rmsc::derive_seed(seed, 0x746573746772ull));
  std::vector<rmsc::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform() < edge_prob) {
        double w = random_weights ? rng.uniform(0.2, 3.0) : 1.0;
        edges.push_back({u, v, w});
      }
    }
  }
  return rmsc::GraphView::from_edges(n, std::move(edges), id);
}

inline std::vector<int> random_labels(int n, std::uint64_t seed, double labeled_prob = 0.4) {
  rmsc::Rng rng(rmsc::derive_seed(seed, 0x746573746cb1ull));
  std::vector<int> y(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (rng.uniform() < labeled_prob) y[static_cast<std::size_t>(i)] = rng.uniform() < 0.5 ? 1 : -1;
  }
  return y;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace oracle
