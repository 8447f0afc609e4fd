#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qhrank {

/// 1-based node index, contiguous 1..n within a graph.
using NodeId = int;

/// One nonnegative real per node, indexed by NodeId - 1.
using ScoreVector = std::vector<double>;

/// Directed edge carrying a contact count. Stored weights are always > 0;
/// an absent edge means weight 0.
struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Row-major dense matrix, used for adjacency exports and gram products.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> data() const noexcept { return data_; }

  DenseMatrix transposed() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// a * b; throws std::invalid_argument on dimension mismatch.
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

/// Immutable weighted directed graph over nodes 1..n.
///
/// Parallel (src, dst) entries are aggregated by weight sum at construction
/// and edges are kept sorted by (src, dst), so identical inputs always
/// produce the identical internal layout. Self-loops are accepted.
/// All queries are pure reads and safe to run concurrently.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  /// Validates node_count >= 0, endpoints in 1..node_count and weights > 0;
  /// rejects the whole input with a message naming the offending edge.
  WeightedDigraph(int node_count, std::span<const Edge> edges);

  int node_count() const noexcept { return node_count_; }

  /// Number of stored (aggregated) edges.
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// All edges, sorted by (src, dst).
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Edges leaving `node`, contiguous and sorted by dst.
  std::span<const Edge> out_edges(NodeId node) const;

  bool has_edge(NodeId src, NodeId dst) const;

  /// Weight of src -> dst, 0 when the edge is absent.
  double weight(NodeId src, NodeId dst) const;

  /// Count of distinct stored in/out edges (not weight sums).
  /// Throws std::out_of_range for nodes outside 1..n.
  int in_degree(NodeId node) const;
  int out_degree(NodeId node) const;

  /// Every edge (i, j, w) becomes (j, i, w).
  WeightedDigraph transposed() const;

 private:
  void check_node(NodeId node) const;

  int node_count_ = 0;
  std::vector<Edge> edges_;                // sorted by (src, dst)
  std::vector<std::size_t> out_offsets_;   // node_count_ + 1 offsets into edges_
  std::vector<int> in_degrees_;
};

/// Adjacency export: entry (i, j) is the weight of edge i -> j, rows index
/// sources.
DenseMatrix adjacency(const WeightedDigraph& g);

/// The two gram matrices driving the decoupled auth/hub iterations,
/// computed on raw (unexponentiated) weights.
struct GramProducts {
  DenseMatrix authority;  // L^T * L
  DenseMatrix hub;        // L * L^T
};

GramProducts gram_products(const WeightedDigraph& g);

}  // namespace qhrank
