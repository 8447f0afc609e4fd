#include "qhrank/compare.hpp"

#include <stdexcept>
#include <string>

namespace qhrank {

namespace {

// pos[node - 1] = rank position; throws unless `order` is a permutation of 1..n.
std::vector<int> positions_of(std::span<const NodeId> order, const char* which) {
  const int n = static_cast<int>(order.size());
  std::vector<int> pos(order.size(), -1);
  for (int i = 0; i < n; ++i) {
    const NodeId node = order[i];
    if (node < 1 || node > n)
      throw std::invalid_argument(std::string(which) + " ranking: node " + std::to_string(node) +
                                  " out of range 1.." + std::to_string(n));
    if (pos[node - 1] != -1)
      throw std::invalid_argument(std::string(which) + " ranking: node " + std::to_string(node) +
                                  " appears more than once");
    pos[node - 1] = i;
  }
  return pos;
}

}  // namespace

ReferenceRanking::ReferenceRanking(std::vector<NodeId> order_) : order(std::move(order_)) {
  positions_of(order, "reference");
}

double kendall_tau(std::span<const NodeId> a, std::span<const NodeId> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("rankings cover different node counts: " +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  const auto pos_a = positions_of(a, "first");
  const auto pos_b = positions_of(b, "second");

  const int n = static_cast<int>(a.size());
  if (n < 2) return 1.0;

  // Strict orders cannot tie, so every pair is concordant or discordant.
  long long concordant = 0, discordant = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const long long da = pos_a[u] - pos_a[v];
      const long long db = pos_b[u] - pos_b[v];
      if (da * db > 0)
        ++concordant;
      else
        ++discordant;
    }
  const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
  return static_cast<double>(concordant - discordant) / pairs;
}

ComparisonReport compare_rankings(std::span<const NodeId> computed,
                                  std::span<const NodeId> reference, std::span<const int> ks) {
  ComparisonReport report;
  report.kendall_tau = kendall_tau(computed, reference);

  const int n = static_cast<int>(computed.size());
  for (int i = 0; i < n; ++i)
    if (computed[i] == reference[i]) ++report.exact_matches;

  for (int k : ks) {
    if (k < 1 || k > n)
      throw std::invalid_argument("k = " + std::to_string(k) + " out of range 1.." +
                                  std::to_string(n));
    std::vector<bool> in_top(n, false);
    for (int i = 0; i < k; ++i) in_top[computed[i] - 1] = true;
    int hits = 0;
    for (int i = 0; i < k; ++i)
      if (in_top[reference[i] - 1]) ++hits;
    report.top_k_overlap.emplace_back(k, static_cast<double>(hits) / static_cast<double>(k));
  }
  return report;
}

}  // namespace qhrank
