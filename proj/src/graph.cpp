#include "graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace rmsc {

SymSparse::SymSparse(int n, std::vector<double> diag, std::vector<SymEntry> upper)
    : n_(n), diag_(std::move(diag)), upper_(std::move(upper)) {
  if (n < 0) fail(ErrorCode::invalid, "SymSparse: negative dimension");
  if (diag_.size() != static_cast<std::size_t>(n))
    fail(ErrorCode::invalid, "SymSparse: diagonal length mismatch");
  for (const SymEntry& e : upper_) {
    if (e.u < 0 || e.v >= n || e.u >= e.v)
      fail(ErrorCode::invalid, "SymSparse: entry must satisfy 0 <= u < v < n");
  }
  std::sort(upper_.begin(), upper_.end(), [](const SymEntry& a, const SymEntry& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < upper_.size(); ++i) {
    if (upper_[i - 1].u == upper_[i].u && upper_[i - 1].v == upper_[i].v)
      fail(ErrorCode::invalid, "SymSparse: duplicate entry");
  }
}

SymSparse SymSparse::zero(int n) {
  return SymSparse(n, std::vector<double>(static_cast<std::size_t>(n), 0.0), {});
}

void SymSparse::multiply(const double* x, double* y) const {
  for (int i = 0; i < n_; ++i) y[i] = diag_[static_cast<std::size_t>(i)] * x[i];
  for (const SymEntry& e : upper_) {
    y[e.u] += e.value * x[e.v];
    y[e.v] += e.value * x[e.u];
  }
}

std::vector<double> SymSparse::multiply(const std::vector<double>& x) const {
  if (x.size() != static_cast<std::size_t>(n_))
    fail(ErrorCode::invalid, "SymSparse::multiply: size mismatch");
  std::vector<double> y(x.size());
  multiply(x.data(), y.data());
  return y;
}

double SymSparse::quadratic_form(const std::vector<double>& x) const {
  if (x.size() != static_cast<std::size_t>(n_))
    fail(ErrorCode::invalid, "SymSparse::quadratic_form: size mismatch");
  double acc = 0.0;
  for (int i = 0; i < n_; ++i) {
    double xi = x[static_cast<std::size_t>(i)];
    acc += diag_[static_cast<std::size_t>(i)] * xi * xi;
  }
  for (const SymEntry& e : upper_) acc += 2.0 * e.value * x[static_cast<std::size_t>(e.u)] * x[static_cast<std::size_t>(e.v)];
  return acc;
}

GraphView GraphView::from_edges(int n, std::vector<Edge> edges, int id) {
  if (n <= 0) fail(ErrorCode::invalid, "GraphView: node count must be positive");
  std::vector<SymEntry> upper;
  upper.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      fail(ErrorCode::invalid, "GraphView: edge endpoint out of range");
    if (e.u == e.v) fail(ErrorCode::invalid, "GraphView: self loops are not allowed");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight))
      fail(ErrorCode::invalid, "GraphView: edge weights must be positive and finite");
    int u = std::min(e.u, e.v);
    int v = std::max(e.u, e.v);
    upper.push_back({u, v, e.weight});
  }
  std::set<std::pair<int, int>> seen;
  for (const SymEntry& e : upper) {
    if (!seen.insert({e.u, e.v}).second)
      fail(ErrorCode::invalid, "GraphView: duplicate edge " + std::to_string(e.u) + "-" +
                                   std::to_string(e.v));
  }

  GraphView g;
  g.n_ = n;
  g.id_ = id;
  g.adjacency_ = SymSparse(n, std::vector<double>(static_cast<std::size_t>(n), 0.0),
                           std::move(upper));  // ctor rejects duplicate pairs
  g.degrees_.assign(static_cast<std::size_t>(n), 0.0);
  for (const SymEntry& e : g.adjacency_.upper()) {
    g.degrees_[static_cast<std::size_t>(e.u)] += e.value;
    g.degrees_[static_cast<std::size_t>(e.v)] += e.value;
  }
  g.laplacian_ = normalized_laplacian(g.adjacency_);
  return g;
}

std::vector<Edge> GraphView::edges() const {
  std::vector<Edge> out;
  out.reserve(adjacency_.stored_entries());
  for (const SymEntry& e : adjacency_.upper()) out.push_back({e.u, e.v, e.value});
  return out;
}

SymSparse normalized_laplacian(const SymSparse& adjacency) {
  int n = adjacency.size();
  for (int i = 0; i < n; ++i) {
    if (adjacency.diag()[static_cast<std::size_t>(i)] != 0.0)
      fail(ErrorCode::invalid, "normalized_laplacian: adjacency has nonzero diagonal");
  }
  std::vector<double> degree(static_cast<std::size_t>(n), 0.0);
  for (const SymEntry& e : adjacency.upper()) {
    if (e.value < 0.0)
      fail(ErrorCode::invalid, "normalized_laplacian: negative adjacency weight");
    degree[static_cast<std::size_t>(e.u)] += e.value;
    degree[static_cast<std::size_t>(e.v)] += e.value;
  }

  std::vector<double> inv_sqrt(static_cast<std::size_t>(n), 0.0);
  std::vector<double> diag(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double d = degree[static_cast<std::size_t>(i)];
    if (d > 0.0) {
      inv_sqrt[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(d);
      diag[static_cast<std::size_t>(i)] = 1.0;  // isolated nodes keep 0
    }
  }

  std::vector<SymEntry> upper;
  upper.reserve(adjacency.stored_entries());
  for (const SymEntry& e : adjacency.upper()) {
    if (e.value == 0.0) continue;
    double v = -e.value * inv_sqrt[static_cast<std::size_t>(e.u)] *
               inv_sqrt[static_cast<std::size_t>(e.v)];
    upper.push_back({e.u, e.v, v});
  }
  return SymSparse(n, std::move(diag), std::move(upper));
}

const GraphView& MultiGraph::view(int k) const {
  if (k < 0 || k >= view_count())
    fail(ErrorCode::invalid, "MultiGraph::view: index out of range");
  return views_[static_cast<std::size_t>(k)];
}

void MultiGraph::add_view(GraphView view) {
  if (view.size() != n_)
    fail(ErrorCode::invalid, "MultiGraph::add_view: node count mismatch");
  for (const GraphView& g : views_) {
    if (g.id() == view.id())
      fail(ErrorCode::invalid, "MultiGraph::add_view: duplicate view id");
  }
  views_.push_back(std::move(view));
}

std::vector<const SymSparse*> MultiGraph::laplacians(const std::vector<int>& ids) const {
  std::vector<const SymSparse*> out;
  out.reserve(ids.size());
  for (int id : ids) {
    const SymSparse* found = nullptr;
    for (const GraphView& g : views_) {
      if (g.id() == id) {
        found = &g.laplacian();
        break;
      }
    }
    if (!found) fail(ErrorCode::invalid, "MultiGraph: unknown view id");
    out.push_back(found);
  }
  return out;
}

std::vector<const SymSparse*> MultiGraph::laplacians() const {
  std::vector<const SymSparse*> out;
  out.reserve(views_.size());
  for (const GraphView& g : views_) out.push_back(&g.laplacian());
  return out;
}

void LabelVector::set(int i, int label) {
  if (i < 0 || i >= size())
    fail(ErrorCode::invalid, "LabelVector::set: node index out of range");
  if (label != 1 && label != -1 && label != 0)
    fail(ErrorCode::invalid, "LabelVector::set: label must be +1, -1 or 0");
  y_[static_cast<std::size_t>(i)] = label;
}

int LabelVector::labeled_count() const {
  int c = 0;
  for (int v : y_) c += (v != 0);
  return c;
}

std::vector<int> LabelVector::labeled_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (y_[static_cast<std::size_t>(i)] != 0) out.push_back(i);
  return out;
}

std::vector<int> LabelVector::unlabeled_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (y_[static_cast<std::size_t>(i)] == 0) out.push_back(i);
  return out;
}

int LabelVector::positive_count() const {
  int c = 0;
  for (int v : y_) c += (v == 1);
  return c;
}

LabelVector LabelVector::restricted_to(const std::vector<int>& keep) const {
  LabelVector out(size());
  for (int i : keep) {
    if (i < 0 || i >= size())
      fail(ErrorCode::invalid, "LabelVector::restricted_to: node index out of range");
    out.y_[static_cast<std::size_t>(i)] = y_[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace rmsc
