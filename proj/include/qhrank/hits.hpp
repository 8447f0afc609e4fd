#pragma once

#include <utility>

#include "qhrank/graph.hpp"

namespace qhrank {

enum class Normalization { L1, None };

/// Iteration controls for hits_rank. The exponent is applied to every edge
/// weight as weight^alpha before the iteration starts; alpha = 0 binarizes
/// the graph (present edges count 1, absent edges 0) and alpha = 1 uses the
/// raw weights.
struct HitsConfig {
  double alpha = 2.0 / 3.0;
  int max_iter = 1000;
  /// Convergence threshold on the max-norm change of the L1-normalized
  /// auth and hub vectors between iterations.
  double tolerance = 1e-9;
  Normalization normalization = Normalization::L1;
};

struct HitsResult {
  ScoreVector auth;
  ScoreVector hub;
  int iterations = 0;
  bool converged = false;
};

/// One unnormalized update: auth_next = W^T * hub_prev, then
/// hub_next = W * auth_next, where W has entries weight^alpha.
/// The new auth feeds the hub update.
/// Throws std::invalid_argument on vector length mismatch or alpha < 0.
std::pair<ScoreVector, ScoreVector> hits_step(const WeightedDigraph& g,
                                              const ScoreVector& auth_prev,
                                              const ScoreVector& hub_prev,
                                              double alpha);

/// Power iteration from all-ones start vectors, applying the configured
/// normalization to auth and hub separately after every step. Stops when
/// both normalized vectors move less than cfg.tolerance in max-norm, or at
/// cfg.max_iter; the flag reports which. Edgeless graphs short-circuit to
/// all-zero scores with converged = true after one iteration.
/// Non-convergence is reported via the flag, never as an error.
HitsResult hits_rank(const WeightedDigraph& g, const HitsConfig& cfg = {});

}  // namespace qhrank
