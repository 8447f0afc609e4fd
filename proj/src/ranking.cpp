#include "qhrank/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qhrank {

double f_measure(double auth, double hub) {
  if (auth < 0.0 || hub < 0.0) throw std::invalid_argument("f_measure inputs must be >= 0");
  if (auth == 0.0 || hub == 0.0) return 0.0;
  if (auth == hub) return auth;
  // Canonical operand order keeps f(a, b) bit-identical to f(b, a).
  const double lo = std::min(auth, hub);
  const double hi = std::max(auth, hub);
  return 2.0 * lo * (hi / (lo + hi));
}

std::vector<NodeId> rank_order(std::span<const double> scores) {
  for (double s : scores)
    if (std::isnan(s)) throw std::invalid_argument("scores must not contain NaN");

  std::vector<NodeId> order(scores.size());
  std::iota(order.begin(), order.end(), NodeId{1});
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    const double sa = scores[a - 1], sb = scores[b - 1];
    if (sa != sb) return sa > sb;
    return a < b;
  });
  return order;
}

RankingResult make_ranking(const ScoreVector& auth, const ScoreVector& hub, RankKey key) {
  if (auth.size() != hub.size())
    throw std::invalid_argument("auth and hub vectors differ in length");
  if (key == RankKey::PageRank)
    throw std::invalid_argument("PageRank key does not apply to auth/hub rankings");

  RankingResult result;
  result.key = key;
  result.rows.reserve(auth.size());
  std::vector<double> keys(auth.size());
  for (std::size_t i = 0; i < auth.size(); ++i) {
    RankedRow row{static_cast<NodeId>(i + 1), auth[i], hub[i], f_measure(auth[i], hub[i])};
    keys[i] = key == RankKey::Auth ? row.auth : key == RankKey::Hub ? row.hub : row.f;
    result.rows.push_back(row);
  }
  result.order = rank_order(keys);
  return result;
}

}  // namespace qhrank
