#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qhrank/compare.hpp"
#include "qhrank/graph.hpp"
#include "qhrank/netgen.hpp"
#include "qhrank/ranking.hpp"

namespace qhrank {

/// Result of parsing an edge-list file. `labels` is empty when the file
/// used numeric ids directly; otherwise labels[i] is the external name of
/// node i+1, assigned in first-appearance order.
struct EdgeListData {
  WeightedDigraph graph;
  std::vector<std::string> labels;
  std::size_t aggregated_duplicates = 0;
};

/// Edge-list format: an optional "# nodes=<n>" header, then one edge per
/// line as "<src>TAB<dst>TAB<weight>". Lines starting with '#' are
/// comments, blank lines are skipped. Endpoints are either all positive
/// integers (used as node ids) or treated as string labels. Parse errors
/// name the offending line; duplicate edges aggregate silently with the
/// count reported in the result.
EdgeListData read_edge_list(std::istream& in);
EdgeListData read_edge_list_file(const std::string& path);

/// Deterministic serialization: comments first, then the nodes header,
/// then edges sorted by (src, dst) with shortest round-trip weight
/// formatting, so read(write(g)) reproduces the exact edge multiset.
void write_edge_list(std::ostream& out, const WeightedDigraph& g,
                     std::span<const std::string> labels = {},
                     std::span<const std::string> comments = {});

/// labels[node-1] when labels are present, the decimal id otherwise.
std::string node_label(NodeId node, std::span<const std::string> labels);

/// Shortest representation that round-trips exactly.
std::string format_shortest(double value);

/// Fixed-point with `precision` digits after the decimal point.
std::string format_fixed(double value, int precision);

/// Ordered key/value preamble emitted as "# key: value" lines.
using ReportMetadata = std::vector<std::pair<std::string, std::string>>;

/// Score report: metadata preamble, a "# columns: ..." legend, then one
/// row per node in rank order. Ranking reports carry auth/hub/f columns;
/// plain score reports (PageRank) carry a single score column.
void write_ranking_report(std::ostream& out, const RankingResult& ranking,
                          const ReportMetadata& metadata, int precision = 6,
                          std::span<const std::string> labels = {});

void write_score_report(std::ostream& out, const ScoreVector& scores,
                        std::span<const NodeId> order, const ReportMetadata& metadata,
                        int precision = 6, std::span<const std::string> labels = {});

/// First column of every data row, in file order -- the node order of a
/// previously written report. Throws when the stream holds no data rows.
std::vector<std::string> read_report_order(std::istream& in);

/// One token per non-comment line (a ranking file: best node first).
std::vector<std::string> read_ranking_tokens(std::istream& in);

/// Maps ranking tokens onto node ids given the universe of labels
/// (universe[i] names node i+1). Rejects duplicates (naming the node),
/// unknown labels, and incomplete coverage (listing the missing nodes).
ReferenceRanking resolve_reference(std::span<const std::string> tokens,
                                   std::span<const std::string> universe);

/// Numeric-id convenience: reads a ranking file over nodes 1..node_count.
ReferenceRanking read_reference(std::istream& in, int node_count);

/// "node TAB level TAB parent" per node, parent 0 for the root.
void write_ground_truth(std::ostream& out, const GroundTruth& truth);

}  // namespace qhrank
