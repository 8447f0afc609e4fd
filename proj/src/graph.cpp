#include "qhrank/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qhrank {

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(a.cols()) +
                                " != " + std::to_string(b.rows()));
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

WeightedDigraph::WeightedDigraph(int node_count, std::span<const Edge> edges)
    : node_count_(node_count) {
  if (node_count < 0)
    throw std::invalid_argument("node count must be >= 0, got " + std::to_string(node_count));

  edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const std::string at = "edge " + std::to_string(i + 1) + ": ";
    if (e.src < 1 || e.src > node_count_)
      throw std::invalid_argument(at + "source " + std::to_string(e.src) + " out of range 1.." +
                                  std::to_string(node_count_));
    if (e.dst < 1 || e.dst > node_count_)
      throw std::invalid_argument(at + "destination " + std::to_string(e.dst) +
                                  " out of range 1.." + std::to_string(node_count_));
    if (!(e.weight > 0.0) || !std::isfinite(e.weight))
      throw std::invalid_argument(at + "weight must be a positive finite real, got " +
                                  std::to_string(e.weight));
    edges_.push_back(e);
  }

  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });

  // Aggregate parallel edges by weight sum.
  std::size_t out = 0;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (out > 0 && edges_[out - 1].src == edges_[i].src && edges_[out - 1].dst == edges_[i].dst) {
      edges_[out - 1].weight += edges_[i].weight;
    } else {
      edges_[out++] = edges_[i];
    }
  }
  edges_.resize(out);

  out_offsets_.assign(static_cast<std::size_t>(node_count_) + 1, 0);
  in_degrees_.assign(node_count_, 0);
  for (const Edge& e : edges_) {
    ++out_offsets_[e.src];  // counts shifted by one, cumulated below
    ++in_degrees_[e.dst - 1];
  }
  for (std::size_t v = 1; v < out_offsets_.size(); ++v) out_offsets_[v] += out_offsets_[v - 1];
}

void WeightedDigraph::check_node(NodeId node) const {
  if (node < 1 || node > node_count_)
    throw std::out_of_range("node " + std::to_string(node) + " out of range 1.." +
                            std::to_string(node_count_));
}

std::span<const Edge> WeightedDigraph::out_edges(NodeId node) const {
  check_node(node);
  const std::size_t begin = out_offsets_[node - 1];
  const std::size_t end = out_offsets_[node];
  return std::span<const Edge>(edges_).subspan(begin, end - begin);
}

bool WeightedDigraph::has_edge(NodeId src, NodeId dst) const {
  return weight(src, dst) != 0.0;
}

double WeightedDigraph::weight(NodeId src, NodeId dst) const {
  if (src < 1 || src > node_count_ || dst < 1 || dst > node_count_) return 0.0;
  const auto range = out_edges(src);
  const auto it = std::lower_bound(range.begin(), range.end(), dst,
                                   [](const Edge& e, NodeId d) { return e.dst < d; });
  if (it != range.end() && it->dst == dst) return it->weight;
  return 0.0;
}

int WeightedDigraph::in_degree(NodeId node) const {
  check_node(node);
  return in_degrees_[node - 1];
}

int WeightedDigraph::out_degree(NodeId node) const {
  check_node(node);
  return static_cast<int>(out_offsets_[node] - out_offsets_[node - 1]);
}

WeightedDigraph WeightedDigraph::transposed() const {
  std::vector<Edge> flipped;
  flipped.reserve(edges_.size());
  for (const Edge& e : edges_) flipped.push_back({e.dst, e.src, e.weight});
  return WeightedDigraph(node_count_, flipped);
}

DenseMatrix adjacency(const WeightedDigraph& g) {
  const auto n = static_cast<std::size_t>(g.node_count());
  DenseMatrix m(n, n);
  for (const Edge& e : g.edges()) m(e.src - 1, e.dst - 1) = e.weight;
  return m;
}

GramProducts gram_products(const WeightedDigraph& g) {
  const DenseMatrix adj = adjacency(g);
  const DenseMatrix adj_t = adj.transposed();
  return {multiply(adj_t, adj), multiply(adj, adj_t)};
}

}  // namespace qhrank
