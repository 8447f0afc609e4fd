#include "qhrank/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

namespace qhrank {

namespace {

constexpr std::string_view kNodesHeader = "# nodes=";

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool parse_int(std::string_view text, int& out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

bool parse_positive_int(std::string_view text, int& out) {
  return parse_int(text, out) && out >= 1;
}

bool parse_real(std::string_view text, double& out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

struct RawEdge {
  std::string src;
  std::string dst;
  double weight = 0.0;
  std::size_t line_no = 0;
};

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

EdgeListData read_edge_list(std::istream& in) {
  std::vector<RawEdge> raw;
  int declared_nodes = -1;
  std::string buffer;
  std::size_t line_no = 0;

  while (std::getline(in, buffer)) {
    ++line_no;
    const std::string_view line = strip_cr(buffer);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line.starts_with(kNodesHeader)) {
        int n = 0;
        if (!parse_int(line.substr(kNodesHeader.size()), n) || n < 0)
          fail_line(line_no, "malformed nodes header");
        if (declared_nodes >= 0) fail_line(line_no, "duplicate nodes header");
        declared_nodes = n;
      }
      continue;
    }

    const auto fields = split_tabs(line);
    if (fields.size() != 3)
      fail_line(line_no, "expected 3 tab-separated fields, got " + std::to_string(fields.size()));
    double weight = 0.0;
    if (!parse_real(fields[2], weight))
      fail_line(line_no, "weight '" + std::string(fields[2]) + "' is not a number");
    if (!(weight > 0.0) || !std::isfinite(weight))
      fail_line(line_no, "weight must be positive, got " + std::string(fields[2]));
    raw.push_back({std::string(fields[0]), std::string(fields[1]), weight, line_no});
  }

  bool numeric = true;
  for (const RawEdge& e : raw) {
    int unused = 0;
    if (!parse_positive_int(e.src, unused) || !parse_positive_int(e.dst, unused)) {
      numeric = false;
      break;
    }
  }

  EdgeListData data;
  std::vector<Edge> edges;
  edges.reserve(raw.size());

  if (numeric) {
    int max_id = 0;
    for (const RawEdge& e : raw) {
      int src = 0, dst = 0;
      parse_positive_int(e.src, src);
      parse_positive_int(e.dst, dst);
      max_id = std::max({max_id, src, dst});
      edges.push_back({src, dst, e.weight});
    }
    const int n = declared_nodes >= 0 ? declared_nodes : max_id;
    if (max_id > n) {
      for (const RawEdge& e : raw) {
        int src = 0, dst = 0;
        parse_positive_int(e.src, src);
        parse_positive_int(e.dst, dst);
        if (src > n || dst > n)
          fail_line(e.line_no, "node " + std::to_string(std::max(src, dst)) +
                                   " exceeds declared node count " + std::to_string(n));
      }
    }
    data.graph = WeightedDigraph(n, edges);
  } else {
    std::map<std::string, NodeId> ids;
    auto intern = [&](const std::string& label) {
      const auto [it, inserted] = ids.emplace(label, static_cast<NodeId>(data.labels.size()) + 1);
      if (inserted) data.labels.push_back(label);
      return it->second;
    };
    for (const RawEdge& e : raw) edges.push_back({intern(e.src), intern(e.dst), e.weight});
    const int n = static_cast<int>(data.labels.size());
    if (declared_nodes >= 0 && declared_nodes != n)
      throw std::runtime_error("nodes header declares " + std::to_string(declared_nodes) +
                               " nodes but the file names " + std::to_string(n) + " labels");
    data.graph = WeightedDigraph(n, edges);
  }

  data.aggregated_duplicates = edges.size() - data.graph.edge_count();
  return data;
}

EdgeListData read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return read_edge_list(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string node_label(NodeId node, std::span<const std::string> labels) {
  if (!labels.empty()) return labels[node - 1];
  return std::to_string(node);
}

std::string format_shortest(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string format_fixed(double value, int precision) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  return buf;
}

void write_edge_list(std::ostream& out, const WeightedDigraph& g,
                     std::span<const std::string> labels, std::span<const std::string> comments) {
  for (const std::string& c : comments) out << "# " << c << "\n";
  out << "# nodes=" << g.node_count() << "\n";
  for (const Edge& e : g.edges())
    out << node_label(e.src, labels) << '\t' << node_label(e.dst, labels) << '\t'
        << format_shortest(e.weight) << "\n";
}

namespace {

void write_preamble(std::ostream& out, const ReportMetadata& metadata, const char* columns) {
  for (const auto& [key, value] : metadata) out << "# " << key << ": " << value << "\n";
  out << "# columns: " << columns << "\n";
}

}  // namespace

void write_ranking_report(std::ostream& out, const RankingResult& ranking,
                          const ReportMetadata& metadata, int precision,
                          std::span<const std::string> labels) {
  write_preamble(out, metadata, "node auth hub f rank");
  for (std::size_t rank = 0; rank < ranking.order.size(); ++rank) {
    const RankedRow& row = ranking.rows[ranking.order[rank] - 1];
    out << node_label(row.node, labels) << '\t' << format_fixed(row.auth, precision) << '\t'
        << format_fixed(row.hub, precision) << '\t' << format_fixed(row.f, precision) << '\t'
        << rank + 1 << "\n";
  }
}

void write_score_report(std::ostream& out, const ScoreVector& scores,
                        std::span<const NodeId> order, const ReportMetadata& metadata,
                        int precision, std::span<const std::string> labels) {
  write_preamble(out, metadata, "node score rank");
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const NodeId node = order[rank];
    out << node_label(node, labels) << '\t' << format_fixed(scores[node - 1], precision) << '\t'
        << rank + 1 << "\n";
  }
}

std::vector<std::string> read_report_order(std::istream& in) {
  std::vector<std::string> nodes;
  std::string buffer;
  while (std::getline(in, buffer)) {
    const std::string_view line = strip_cr(buffer);
    if (line.empty() || line.front() == '#') continue;
    nodes.emplace_back(split_tabs(line).front());
  }
  if (nodes.empty()) throw std::runtime_error("report contains no data rows");
  return nodes;
}

std::vector<std::string> read_ranking_tokens(std::istream& in) {
  std::vector<std::string> tokens;
  std::string buffer;
  while (std::getline(in, buffer)) {
    const std::string_view line = strip_cr(buffer);
    if (line.empty() || line.front() == '#') continue;
    tokens.emplace_back(line);
  }
  return tokens;
}

ReferenceRanking resolve_reference(std::span<const std::string> tokens,
                                   std::span<const std::string> universe) {
  std::map<std::string_view, NodeId> ids;
  for (std::size_t i = 0; i < universe.size(); ++i) ids.emplace(universe[i], i + 1);

  std::vector<NodeId> order;
  order.reserve(tokens.size());
  std::set<NodeId> seen;
  for (const std::string& token : tokens) {
    const auto it = ids.find(token);
    if (it == ids.end()) throw std::runtime_error("unknown node '" + token + "' in ranking");
    if (!seen.insert(it->second).second)
      throw std::runtime_error("node '" + token + "' appears more than once in ranking");
    order.push_back(it->second);
  }
  if (order.size() != universe.size()) {
    std::string missing;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (!seen.contains(static_cast<NodeId>(i + 1)))
        missing += (missing.empty() ? "" : ", ") + universe[i];
    throw std::runtime_error("ranking does not cover all nodes; missing: " + missing);
  }
  return ReferenceRanking(std::move(order));
}

ReferenceRanking read_reference(std::istream& in, int node_count) {
  std::vector<std::string> universe;
  universe.reserve(node_count);
  for (int i = 1; i <= node_count; ++i) universe.push_back(std::to_string(i));
  return resolve_reference(read_ranking_tokens(in), universe);
}

void write_ground_truth(std::ostream& out, const GroundTruth& truth) {
  out << "# nodes=" << truth.level.size() << "\n";
  out << "# columns: node level parent\n";
  for (std::size_t i = 0; i < truth.level.size(); ++i)
    out << i + 1 << '\t' << truth.level[i] << '\t' << truth.parent[i] << "\n";
}

}  // namespace qhrank
