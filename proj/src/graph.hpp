#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "common.hpp"

namespace rmsc {

// One off-diagonal entry of a symmetric matrix, stored once with u < v.
struct SymEntry {
  int u;
  int v;
  double value;
};

// Symmetric sparse matrix: explicit diagonal plus strict upper triangle.
// Entries are kept sorted by (u, v) so equal matrices compare equal and
// iteration order is deterministic.
class SymSparse {
 public:
  SymSparse() = default;
  SymSparse(int n, std::vector<double> diag, std::vector<SymEntry> upper);

  static SymSparse zero(int n);

  int size() const { return n_; }
  const std::vector<double>& diag() const { return diag_; }
  const std::vector<SymEntry>& upper() const { return upper_; }
  std::size_t stored_entries() const { return upper_.size(); }

  // y = A x (y may not alias x)
  void multiply(const double* x, double* y) const;
  std::vector<double> multiply(const std::vector<double>& x) const;

  // x' A x
  double quadratic_form(const std::vector<double>& x) const;

 private:
  int n_ = 0;
  std::vector<double> diag_;
  std::vector<SymEntry> upper_;
};

struct Edge {
  int u;
  int v;
  double weight;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// One undirected weighted view over a fixed node set. The normalized
// Laplacian is built eagerly at construction and cached.
class GraphView {
 public:
  GraphView() = default;

  // Validates and canonicalizes edges: endpoints in range, no self loops,
  // positive weights, no duplicate unordered pairs. Edge (u,v) is stored
  // with u < v.
  static GraphView from_edges(int n, std::vector<Edge> edges, int id = 0);

  int size() const { return n_; }
  int id() const { return id_; }
  std::size_t edge_count() const { return adjacency_.stored_entries(); }
  const SymSparse& adjacency() const { return adjacency_; }
  const SymSparse& laplacian() const { return laplacian_; }
  const std::vector<double>& degrees() const { return degrees_; }
  std::vector<Edge> edges() const;

 private:
  int n_ = 0;
  int id_ = 0;
  SymSparse adjacency_;
  SymSparse laplacian_;
  std::vector<double> degrees_;
};

// Normalized Laplacian L = D^{-1/2} (D - W) D^{-1/2} of a weighted
// adjacency matrix. Isolated nodes get an all-zero row and column; every
// node with positive degree gets a unit diagonal.
SymSparse normalized_laplacian(const SymSparse& adjacency);

// A fixed node set shared by several graph views.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n) : n_(n) {
    if (n <= 0) fail(ErrorCode::invalid, "MultiGraph: node count must be positive");
  }

  int size() const { return n_; }
  int view_count() const { return static_cast<int>(views_.size()); }
  const GraphView& view(int k) const;
  const std::vector<GraphView>& views() const { return views_; }

  // Appends a view; its node count must match. The view keeps the id it was
  // built with (ids name views in logs and weight reports).
  void add_view(GraphView view);

  // Views whose ids are listed, in the listed order.
  std::vector<const SymSparse*> laplacians(const std::vector<int>& ids) const;
  std::vector<const SymSparse*> laplacians() const;

 private:
  int n_ = 0;
  std::vector<GraphView> views_;
};

// Partial ±1 labeling over n nodes; 0 means unlabeled.
class LabelVector {
 public:
  LabelVector() = default;
  explicit LabelVector(int n) : y_(static_cast<std::size_t>(n), 0) {
    if (n <= 0) fail(ErrorCode::invalid, "LabelVector: node count must be positive");
  }

  int size() const { return static_cast<int>(y_.size()); }
  const std::vector<int>& values() const { return y_; }
  int value(int i) const { return y_[static_cast<std::size_t>(i)]; }

  void set(int i, int label);  // label must be +1, -1 or 0
  bool is_labeled(int i) const { return y_[static_cast<std::size_t>(i)] != 0; }
  int labeled_count() const;
  std::vector<int> labeled_nodes() const;    // sorted
  std::vector<int> unlabeled_nodes() const;  // sorted
  int positive_count() const;

  // Copy with every label outside `keep` cleared.
  LabelVector restricted_to(const std::vector<int>& keep) const;

 private:
  std::vector<int> y_;
};

}  // namespace rmsc
