#include "qhrank/pagerank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qhrank {

namespace {

void validate(const PageRankConfig& cfg) {
  if (!(cfg.damping > 0.0 && cfg.damping < 1.0))
    throw std::invalid_argument("damping must lie in (0, 1)");
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("tolerance must be > 0");
  if (cfg.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
}

void normalize_l1(ScoreVector& v) {
  const double sum = std::accumulate(v.begin(), v.end(), 0.0);
  if (sum <= 0.0) return;
  for (double& x : v) x /= sum;
}

}  // namespace

PageRankResult pagerank(const WeightedDigraph& g, const PageRankConfig& cfg,
                        const std::optional<ScoreVector>& init) {
  if (g.node_count() < 1) throw std::invalid_argument("graph has no nodes");
  validate(cfg);

  const auto n = static_cast<std::size_t>(g.node_count());
  const double d = cfg.damping;

  ScoreVector pr;
  if (init) {
    if (init->size() != n)
      throw std::invalid_argument("init vector length does not match node count");
    for (double x : *init)
      if (!(x >= 0.0)) throw std::invalid_argument("init vector must be nonnegative");
    if (std::accumulate(init->begin(), init->end(), 0.0) <= 0.0)
      throw std::invalid_argument("init vector must have positive sum");
    pr = *init;
    normalize_l1(pr);
  } else {
    pr.assign(n, 1.0 / static_cast<double>(n));
  }

  // Per-source share denominator: link count by default, weight sum when
  // flowing rank proportionally to weights.
  std::vector<double> out_mass(n, 0.0);
  for (const Edge& e : g.edges())
    out_mass[e.src - 1] += cfg.weighted ? e.weight : 1.0;

  const double base = cfg.base_constant == BaseConstant::Standard
                          ? (1.0 - d) / static_cast<double>(n)
                          : 1.0 + d;

  PageRankResult result;
  ScoreVector next(n);
  for (int k = 1; k <= cfg.max_iter; ++k) {
    next.assign(n, base);

    if (cfg.dangling == DanglingPolicy::RedistributeUniform) {
      double dangling_sum = 0.0;
      for (std::size_t v = 0; v < n; ++v)
        if (out_mass[v] == 0.0) dangling_sum += pr[v];
      const double share = d * dangling_sum / static_cast<double>(n);
      for (double& x : next) x += share;
    } else {
      for (std::size_t v = 0; v < n; ++v)
        if (out_mass[v] == 0.0) next[v] += d * pr[v];
    }

    for (const Edge& e : g.edges()) {
      const double flow = cfg.weighted ? e.weight : 1.0;
      next[e.dst - 1] += d * pr[e.src - 1] * flow / out_mass[e.src - 1];
    }

    normalize_l1(next);

    double delta = 0.0;
    for (std::size_t v = 0; v < n; ++v) delta = std::max(delta, std::abs(next[v] - pr[v]));
    pr.swap(next);
    result.iterations = k;
    if (delta < cfg.tolerance) {
      result.converged = true;
      break;
    }
  }

  result.scores = std::move(pr);
  return result;
}

}  // namespace qhrank
