#include "qhrank/hits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qhrank {

namespace {

std::vector<double> powered_weights(const WeightedDigraph& g, double alpha) {
  std::vector<double> w;
  w.reserve(g.edge_count());
  // Stored weights are > 0, so weight^0 is 1: alpha = 0 binarizes.
  for (const Edge& e : g.edges()) w.push_back(std::pow(e.weight, alpha));
  return w;
}

void step(const WeightedDigraph& g, std::span<const double> w, const ScoreVector& hub_prev,
          ScoreVector& auth_next, ScoreVector& hub_next) {
  const auto n = static_cast<std::size_t>(g.node_count());
  auth_next.assign(n, 0.0);
  hub_next.assign(n, 0.0);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    auth_next[edges[i].dst - 1] += w[i] * hub_prev[edges[i].src - 1];
  for (std::size_t i = 0; i < edges.size(); ++i)
    hub_next[edges[i].src - 1] += w[i] * auth_next[edges[i].dst - 1];
}

bool all_zero(const ScoreVector& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

bool all_finite(const ScoreVector& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

void normalize_l1(ScoreVector& v) {
  const double sum = std::accumulate(v.begin(), v.end(), 0.0);
  if (sum <= 0.0) return;
  for (double& x : v) x /= sum;
}

ScoreVector l1_copy(const ScoreVector& v) {
  ScoreVector c = v;
  normalize_l1(c);
  return c;
}

double max_abs_diff(const ScoreVector& a, const ScoreVector& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

void validate(const HitsConfig& cfg) {
  if (cfg.alpha < 0.0) throw std::invalid_argument("alpha must be >= 0");
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("tolerance must be > 0");
  if (cfg.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
}

}  // namespace

std::pair<ScoreVector, ScoreVector> hits_step(const WeightedDigraph& g,
                                              const ScoreVector& auth_prev,
                                              const ScoreVector& hub_prev, double alpha) {
  const auto n = static_cast<std::size_t>(g.node_count());
  if (auth_prev.size() != n || hub_prev.size() != n)
    throw std::invalid_argument("score vector length does not match node count");
  if (alpha < 0.0) throw std::invalid_argument("alpha must be >= 0");

  const auto w = powered_weights(g, alpha);
  ScoreVector auth_next, hub_next;
  step(g, w, hub_prev, auth_next, hub_next);
  return {std::move(auth_next), std::move(hub_next)};
}

HitsResult hits_rank(const WeightedDigraph& g, const HitsConfig& cfg) {
  if (g.node_count() < 1) throw std::invalid_argument("graph has no nodes");
  validate(cfg);

  const auto n = static_cast<std::size_t>(g.node_count());
  const auto w = powered_weights(g, cfg.alpha);

  ScoreVector auth(n, 1.0), hub(n, 1.0);
  // Convergence is always measured on L1-normalized snapshots; raw vectors
  // grow geometrically and cannot be compared across iterations.
  ScoreVector prev_auth = l1_copy(auth), prev_hub = l1_copy(hub);

  HitsResult result;
  for (int k = 1; k <= cfg.max_iter; ++k) {
    ScoreVector auth_next, hub_next;
    step(g, w, hub, auth_next, hub_next);
    auth = std::move(auth_next);
    hub = std::move(hub_next);
    result.iterations = k;

    if (all_zero(auth) && all_zero(hub)) {
      // No mass to propagate (edgeless graph).
      result.converged = true;
      break;
    }
    if (!all_finite(auth) || !all_finite(hub)) break;

    if (cfg.normalization == Normalization::L1) {
      normalize_l1(auth);
      normalize_l1(hub);
    }
    const ScoreVector norm_auth = cfg.normalization == Normalization::L1 ? auth : l1_copy(auth);
    const ScoreVector norm_hub = cfg.normalization == Normalization::L1 ? hub : l1_copy(hub);
    const double delta =
        std::max(max_abs_diff(norm_auth, prev_auth), max_abs_diff(norm_hub, prev_hub));
    prev_auth = norm_auth;
    prev_hub = norm_hub;
    if (delta < cfg.tolerance) {
      result.converged = true;
      break;
    }
  }

  result.auth = std::move(auth);
  result.hub = std::move(hub);
  return result;
}

}  // namespace qhrank
