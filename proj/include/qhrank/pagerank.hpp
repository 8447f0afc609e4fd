#pragma once

#include <optional>

#include "qhrank/graph.hpp"

namespace qhrank {

/// Constant term of the update. Standard uses (1 - d)/n, the canonical
/// teleport mass. PaperLiteral uses an additive (1 + d) constant with
/// L1 normalization after every sweep; it exists for fidelity experiments
/// against sources that print the formula that way.
enum class BaseConstant { Standard, PaperLiteral };

/// What happens to the rank mass of nodes with no outgoing edges.
enum class DanglingPolicy { RedistributeUniform, SelfAbsorb };

struct PageRankConfig {
  double damping = 0.85;
  int max_iter = 1000;
  double tolerance = 1e-12;
  BaseConstant base_constant = BaseConstant::Standard;
  DanglingPolicy dangling = DanglingPolicy::RedistributeUniform;
  /// When true, a node's rank flows out proportionally to edge weights;
  /// when false it splits uniformly by out-degree (link count).
  bool weighted = false;
};

struct PageRankResult {
  ScoreVector scores;  // L1-normalized, sums to 1
  int iterations = 0;
  bool converged = false;
};

/// Iterates PR(v) = base + d * (incoming mass) until the max-norm change
/// drops below cfg.tolerance or cfg.max_iter is reached. Starts from the
/// uniform vector unless `init` is given (any nonnegative vector with
/// positive sum; it is L1-normalized before use).
PageRankResult pagerank(const WeightedDigraph& g, const PageRankConfig& cfg = {},
                        const std::optional<ScoreVector>& init = std::nullopt);

}  // namespace qhrank
