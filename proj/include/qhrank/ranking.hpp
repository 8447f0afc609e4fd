#pragma once

#include <span>
#include <vector>

#include "qhrank/graph.hpp"

namespace qhrank {

/// Harmonic mean of two nonnegative scores; 0 when either score is 0
/// (limit convention). Exactly symmetric and exactly idempotent.
/// Throws std::invalid_argument on negative input.
double f_measure(double auth, double hub);

enum class RankKey { Auth, Hub, F, PageRank };

/// Stable descending order over 1..n with ties broken by ascending node id.
/// Throws std::invalid_argument if any score is NaN.
std::vector<NodeId> rank_order(std::span<const double> scores);

struct RankedRow {
  NodeId node = 0;
  double auth = 0.0;
  double hub = 0.0;
  double f = 0.0;
};

/// Per-node scores plus a total order by the selected key.
struct RankingResult {
  RankKey key = RankKey::F;
  std::vector<RankedRow> rows;   // indexed by NodeId - 1
  std::vector<NodeId> order;     // best node first
};

/// Combines auth and hub vectors into per-node rows (computing f for each
/// node) and orders them by `key` (Auth, Hub or F).
RankingResult make_ranking(const ScoreVector& auth, const ScoreVector& hub, RankKey key);

}  // namespace qhrank
