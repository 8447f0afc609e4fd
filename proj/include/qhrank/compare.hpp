#pragma once

#include <span>
#include <vector>

#include "qhrank/graph.hpp"

namespace qhrank {

/// A strict total order over 1..n, best node first. The constructor
/// validates that `order` is a true permutation.
struct ReferenceRanking {
  std::vector<NodeId> order;

  ReferenceRanking() = default;
  explicit ReferenceRanking(std::vector<NodeId> order_);
};

struct ComparisonReport {
  double kendall_tau = 0.0;
  /// Positions where the two orders name the same node.
  int exact_matches = 0;
  /// (k, |top-k(a) n top-k(b)| / k) for each configured k.
  std::vector<std::pair<int, double>> top_k_overlap;
};

/// Kendall tau-a over all unordered node pairs:
/// (concordant - discordant) / (n(n-1)/2). Inputs are strict orders over
/// the same node set, so ties cannot occur. Orders with fewer than two
/// nodes compare as 1. Throws std::invalid_argument on mismatched node
/// sets or non-permutation input.
double kendall_tau(std::span<const NodeId> a, std::span<const NodeId> b);

/// Full agreement report between a computed order and a reference order.
/// Every k must lie in 1..n.
ComparisonReport compare_rankings(std::span<const NodeId> computed,
                                  std::span<const NodeId> reference,
                                  std::span<const int> ks);

}  // namespace qhrank
