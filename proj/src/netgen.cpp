#include "qhrank/netgen.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace qhrank {

namespace {

constexpr int kMaxNodes = 1 << 22;
constexpr int kResampleLimit = 10000;

void check_range(const WeightRange& r, const char* name) {
  if (!(r.lo > 0.0))
    throw std::invalid_argument(std::string(name) + " weight range must be positive");
  if (!(r.lo <= r.hi))
    throw std::invalid_argument(std::string(name) + " weight range is empty (lo > hi)");
}

// Uniform draw from [lo, hi), bit-identical across platforms: mt19937_64
// output mapped through the standard 53-bit mantissa trick instead of
// std::uniform_real_distribution, whose sequence is implementation-defined.
double draw_real(std::mt19937_64& eng, const WeightRange& r) {
  const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
  return r.lo + (r.hi - r.lo) * u;
}

NodeId draw_node(std::mt19937_64& eng, int n) {
  return static_cast<NodeId>(eng() % static_cast<std::uint64_t>(n)) + 1;
}

}  // namespace

int tree_node_count(int depth, int branching) {
  if (depth < 1 || branching < 1)
    throw std::invalid_argument("depth and branching must be >= 1");
  long long n = 1, layer = 1;
  for (int level = 1; level <= depth; ++level) {
    layer *= branching;
    n += layer;
    if (n > kMaxNodes) throw std::invalid_argument("tree too large: more than 2^22 nodes");
  }
  return static_cast<int>(n);
}

void validate(const GeneratorConfig& cfg) {
  tree_node_count(cfg.depth, cfg.branching);
  if (cfg.extra_links < 0) throw std::invalid_argument("extra_links must be >= 0");
  check_range(cfg.down_weight_range, "down");
  check_range(cfg.up_weight_range, "up");
  check_range(cfg.extra_weight_range, "extra");
  if (!(cfg.up_weight_range.hi < cfg.down_weight_range.lo))
    throw std::invalid_argument(
        "max(up_weight_range) must be strictly below min(down_weight_range)");
}

std::optional<std::string> hierarchy_warning(const GeneratorConfig& cfg) {
  const int n = tree_node_count(cfg.depth, cfg.branching);
  if (static_cast<double>(cfg.extra_links) <= 0.2 * n) return std::nullopt;
  return "extra_links = " + std::to_string(cfg.extra_links) + " exceeds 0.2 * " +
         std::to_string(n) + " nodes; the network stops being quasi-hierarchical";
}

std::pair<WeightedDigraph, GroundTruth> generate_network(const GeneratorConfig& cfg) {
  validate(cfg);
  const int n = tree_node_count(cfg.depth, cfg.branching);
  const int internal = (n - 1) / cfg.branching;  // nodes that have children

  std::mt19937_64 eng(cfg.seed);
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(n - 1) + cfg.extra_links);

  GroundTruth truth;
  truth.level.assign(n, 0);
  truth.parent.assign(n, 0);

  // Complete breadth-first tree: children of node p are
  // branching*(p-1)+2 .. branching*(p-1)+branching+1. Each pair gets a
  // heavy manager->subordinate edge and a light subordinate->manager edge.
  for (NodeId p = 1; p <= internal; ++p) {
    for (int c = 1; c <= cfg.branching; ++c) {
      const NodeId child = cfg.branching * (p - 1) + 1 + c;
      truth.parent[child - 1] = p;
      truth.level[child - 1] = truth.level[p - 1] + 1;
      edges.push_back({p, child, draw_real(eng, cfg.down_weight_range)});
      edges.push_back({child, p, draw_real(eng, cfg.up_weight_range)});
    }
  }

  std::set<std::pair<NodeId, NodeId>> present;
  for (const Edge& e : edges) present.emplace(e.src, e.dst);

  for (int i = 0; i < cfg.extra_links; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
      const NodeId u = draw_node(eng, n);
      const NodeId v = draw_node(eng, n);
      if (u == v || present.contains({u, v})) continue;
      present.emplace(u, v);
      edges.push_back({u, v, draw_real(eng, cfg.extra_weight_range)});
      placed = true;
      break;
    }
    if (!placed)
      throw std::runtime_error("could not place extra link " + std::to_string(i + 1) +
                               ": no free node pair found");
  }

  return {WeightedDigraph(n, edges), std::move(truth)};
}

}  // namespace qhrank
