#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "qhrank/graph.hpp"

namespace qhrank {

/// Weight interval; draws are uniform over [lo, hi).
struct WeightRange {
  double lo = 0.0;
  double hi = 0.0;
};

/// A quasi-hierarchy is a complete (depth, branching) tree where every
/// manager-subordinate pair is connected in both directions -- a heavy
/// down edge and a light up edge -- plus a small number of extra
/// non-hierarchical links. The weight asymmetry is enforced by requiring
/// max(up_weight_range) < min(down_weight_range).
struct GeneratorConfig {
  int depth = 3;       // hierarchy levels below the root, >= 1
  int branching = 3;   // children per manager, >= 1
  int extra_links = 0;
  WeightRange down_weight_range{5.0, 10.0};
  WeightRange up_weight_range{1.0, 4.0};
  WeightRange extra_weight_range{1.0, 2.0};
  std::uint64_t seed = 0;
};

/// The generator's recorded tree: level 0 is the root (always node 1),
/// levels are assigned breadth-first, parent[0] is 0 (no parent).
struct GroundTruth {
  std::vector<int> level;      // indexed by NodeId - 1
  std::vector<NodeId> parent;  // indexed by NodeId - 1; 0 for the root
};

/// Node count of the complete (depth, branching) tree.
int tree_node_count(int depth, int branching);

/// Throws std::invalid_argument when the config violates its invariants
/// (depth/branching < 1, negative extra_links, empty or nonpositive weight
/// ranges, or up/down ranges that overlap).
void validate(const GeneratorConfig& cfg);

/// Warning text when extra_links exceeds 0.2 * node count -- past that the
/// network stops being quasi-hierarchical. Empty optional otherwise.
std::optional<std::string> hierarchy_warning(const GeneratorConfig& cfg);

/// Deterministic given the config (including seed): identical configs
/// always yield the bit-identical graph. Extra links avoid self-loops and
/// existing edges; generation fails after bounded resampling if no free
/// pair can be found.
std::pair<WeightedDigraph, GroundTruth> generate_network(const GeneratorConfig& cfg);

}  // namespace qhrank
