#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qhrank/compare.hpp"
#include "qhrank/hits.hpp"
#include "qhrank/io.hpp"
#include "qhrank/netgen.hpp"
#include "qhrank/pagerank.hpp"
#include "qhrank/ranking.hpp"

namespace {

using namespace qhrank;

// Flag misuse; mapped to exit code 2 (input/data errors exit with 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_number(std::string_view text, const std::string& what) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw UsageError(what + " '" + std::string(text) + "' is not a number");
  return value;
}

// Decimal or fraction like "2/3", parsed exactly (one correctly rounded division).
double parse_alpha(const std::string& text) {
  double value = 0.0;
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    value = parse_number(text, "alpha");
  } else {
    const double num = parse_number(std::string_view(text).substr(0, slash), "alpha numerator");
    const double den = parse_number(std::string_view(text).substr(slash + 1), "alpha denominator");
    if (den == 0.0) throw UsageError("alpha denominator must be nonzero");
    value = num / den;
  }
  if (!(value >= 0.0)) throw UsageError("alpha must be >= 0, got '" + text + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<int> parse_ks(const std::string& text) {
  std::vector<int> ks;
  if (text.empty()) return ks;
  for (const std::string& part : split(text, ',')) {
    int k = 0;
    const char* end = part.data() + part.size();
    const auto [ptr, ec] = std::from_chars(part.data(), end, k);
    if (ec != std::errc{} || ptr != end || k < 1)
      throw UsageError("k '" + part + "' is not a positive integer");
    ks.push_back(k);
  }
  return ks;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  out << text;
}

std::vector<std::string> numeric_universe(int n) {
  std::vector<std::string> universe;
  universe.reserve(n);
  for (int i = 1; i <= n; ++i) universe.push_back(std::to_string(i));
  return universe;
}

struct RankOptions {
  std::string graph_file;
  std::string algo = "whits";
  std::string alpha_text = "2/3";
  bool alpha_given = false;
  double damping = 0.85;
  bool damping_given = false;
  std::string key;
  double tolerance = 0.0;
  bool tolerance_given = false;
  int max_iter = 1000;
  int precision = 6;
  std::string out_path;
};

int run_rank(const RankOptions& opt) {
  const bool is_pagerank = opt.algo == "pagerank";
  if (opt.alpha_given && opt.algo != "whits")
    throw UsageError("--alpha only applies to --algo whits");
  if (opt.damping_given && !is_pagerank)
    throw UsageError("--damping only applies to --algo pagerank");

  std::string key = opt.key;
  if (key.empty()) key = is_pagerank ? "pr" : "auth";
  if (is_pagerank && key != "pr")
    throw UsageError("--key " + key + " does not apply to --algo pagerank");
  if (!is_pagerank && key == "pr")
    throw UsageError("--key pr only applies to --algo pagerank");

  const EdgeListData data = read_edge_list_file(opt.graph_file);
  ReportMetadata metadata;
  metadata.emplace_back("algorithm", opt.algo);

  std::ostringstream report;
  int iterations = 0;
  bool converged = false;

  if (is_pagerank) {
    PageRankConfig cfg;
    cfg.damping = opt.damping;
    cfg.max_iter = opt.max_iter;
    if (opt.tolerance_given) cfg.tolerance = opt.tolerance;
    const PageRankResult result = pagerank(data.graph, cfg);
    iterations = result.iterations;
    converged = result.converged;
    metadata.emplace_back("damping", format_shortest(cfg.damping));
    metadata.emplace_back("normalization", "L1");
    metadata.emplace_back("iterations", std::to_string(iterations));
    metadata.emplace_back("converged", converged ? "true" : "false");
    metadata.emplace_back("key", key);
    if (data.aggregated_duplicates > 0)
      metadata.emplace_back("aggregated_duplicates", std::to_string(data.aggregated_duplicates));
    const std::vector<NodeId> order = rank_order(result.scores);
    write_score_report(report, result.scores, order, metadata, opt.precision, data.labels);
  } else {
    HitsConfig cfg;
    cfg.alpha = opt.algo == "hits" ? 0.0 : parse_alpha(opt.alpha_text);
    cfg.max_iter = opt.max_iter;
    if (opt.tolerance_given) cfg.tolerance = opt.tolerance;
    const HitsResult result = hits_rank(data.graph, cfg);
    iterations = result.iterations;
    converged = result.converged;
    if (opt.algo == "whits") metadata.emplace_back("alpha", format_shortest(cfg.alpha));
    metadata.emplace_back("normalization", "L1");
    metadata.emplace_back("iterations", std::to_string(iterations));
    metadata.emplace_back("converged", converged ? "true" : "false");
    metadata.emplace_back("key", key);
    if (data.aggregated_duplicates > 0)
      metadata.emplace_back("aggregated_duplicates", std::to_string(data.aggregated_duplicates));
    const RankKey rank_key =
        key == "auth" ? RankKey::Auth : key == "hub" ? RankKey::Hub : RankKey::F;
    const RankingResult ranking = make_ranking(result.auth, result.hub, rank_key);
    write_ranking_report(report, ranking, metadata, opt.precision, data.labels);
  }

  if (!converged)
    std::cerr << "warning: did not converge within " << iterations << " iterations\n";
  emit(report.str(), opt.out_path);
  return 0;
}

struct CompareOptions {
  std::string report_file;
  std::string reference_file;
  std::string ks_text;
  int precision = 6;
};

int run_compare(const CompareOptions& opt) {
  const std::vector<int> ks = parse_ks(opt.ks_text);

  std::ifstream report_in(opt.report_file);
  if (!report_in) throw std::runtime_error("cannot open '" + opt.report_file + "'");
  const std::vector<std::string> computed_nodes = read_report_order(report_in);
  for (std::size_t i = 0; i < computed_nodes.size(); ++i)
    for (std::size_t j = i + 1; j < computed_nodes.size(); ++j)
      if (computed_nodes[i] == computed_nodes[j])
        throw std::runtime_error("report names node '" + computed_nodes[i] + "' more than once");

  std::ifstream reference_in(opt.reference_file);
  if (!reference_in) throw std::runtime_error("cannot open '" + opt.reference_file + "'");
  const ReferenceRanking reference =
      resolve_reference(read_ranking_tokens(reference_in), computed_nodes);

  // The report's own order defines node ids 1..n.
  std::vector<NodeId> computed(computed_nodes.size());
  for (std::size_t i = 0; i < computed.size(); ++i) computed[i] = static_cast<NodeId>(i + 1);

  const ComparisonReport result = compare_rankings(computed, reference.order, ks);

  std::ostringstream out;
  out << "tau\t" << format_fixed(result.kendall_tau, opt.precision) << "\n";
  out << "exact_matches\t" << result.exact_matches << "\n";
  for (const auto& [k, overlap] : result.top_k_overlap)
    out << "top" << k << '\t' << format_fixed(overlap, opt.precision) << "\n";
  std::cout << out.str();
  return 0;
}

struct GenerateOptions {
  GeneratorConfig cfg;
  std::string out_graph;
  std::string out_truth;
};

int run_generate(const GenerateOptions& opt) {
  try {
    validate(opt.cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (const auto warning = hierarchy_warning(opt.cfg))
    std::cerr << "warning: " << *warning << "\n";

  const auto [graph, truth] = generate_network(opt.cfg);

  const GeneratorConfig& c = opt.cfg;
  const std::string meta =
      "generator: depth=" + std::to_string(c.depth) + " branching=" + std::to_string(c.branching) +
      " extra_links=" + std::to_string(c.extra_links) + " seed=" + std::to_string(c.seed) +
      " down=[" + format_shortest(c.down_weight_range.lo) + "," +
      format_shortest(c.down_weight_range.hi) + "] up=[" +
      format_shortest(c.up_weight_range.lo) + "," + format_shortest(c.up_weight_range.hi) +
      "] extra=[" + format_shortest(c.extra_weight_range.lo) + "," +
      format_shortest(c.extra_weight_range.hi) + "]";

  std::ostringstream graph_text;
  const std::vector<std::string> comments{meta};
  write_edge_list(graph_text, graph, {}, comments);
  emit(graph_text.str(), opt.out_graph);

  if (!opt.out_truth.empty()) {
    std::ostringstream truth_text;
    write_ground_truth(truth_text, truth);
    emit(truth_text.str(), opt.out_truth);
  }
  return 0;
}

struct SweepOptions {
  std::string graph_file;
  std::string reference_file;
  std::string alphas_text;
  std::string key = "f";
  std::string ks_text;
  double tolerance = 1e-9;
  int max_iter = 1000;
  int precision = 6;
};

int run_sweep(const SweepOptions& opt) {
  const std::vector<int> ks = parse_ks(opt.ks_text);

  std::vector<std::string> alpha_tokens;
  std::vector<double> alphas;
  for (const std::string& token : split(opt.alphas_text, ',')) {
    if (token.empty()) continue;
    const double alpha = parse_alpha(token);
    bool duplicate = false;
    for (double seen : alphas) duplicate = duplicate || seen == alpha;
    if (duplicate) {
      std::cerr << "warning: duplicate alpha '" << token << "' ignored\n";
      continue;
    }
    alpha_tokens.push_back(token);
    alphas.push_back(alpha);
  }
  if (alphas.empty()) throw UsageError("--alphas must name at least one value");

  const EdgeListData data = read_edge_list_file(opt.graph_file);
  const int n = data.graph.node_count();

  std::ifstream reference_in(opt.reference_file);
  if (!reference_in) throw std::runtime_error("cannot open '" + opt.reference_file + "'");
  const std::vector<std::string> universe =
      data.labels.empty() ? numeric_universe(n) : data.labels;
  const ReferenceRanking reference =
      resolve_reference(read_ranking_tokens(reference_in), universe);

  const RankKey key = opt.key == "auth" ? RankKey::Auth
                      : opt.key == "hub" ? RankKey::Hub
                                         : RankKey::F;

  std::ostringstream out;
  out << "alpha\ttau\texact_matches";
  for (int k : ks) out << "\ttop" << k;
  out << "\n";

  for (std::size_t i = 0; i < alphas.size(); ++i) {
    HitsConfig cfg;
    cfg.alpha = alphas[i];
    cfg.tolerance = opt.tolerance;
    cfg.max_iter = opt.max_iter;
    const HitsResult result = hits_rank(data.graph, cfg);
    if (!result.converged)
      std::cerr << "warning: alpha " << alpha_tokens[i] << " did not converge within "
                << result.iterations << " iterations\n";
    const RankingResult ranking = make_ranking(result.auth, result.hub, key);
    const ComparisonReport report = compare_rankings(ranking.order, reference.order, ks);
    out << alpha_tokens[i] << '\t' << format_fixed(report.kendall_tau, opt.precision) << '\t'
        << report.exact_matches;
    for (const auto& [k, overlap] : report.top_k_overlap)
      out << '\t' << format_fixed(overlap, opt.precision);
    out << "\n";
  }
  std::cout << out.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Node ranking for weighted directed networks: HITS, weighted HITS and PageRank"};
  app.require_subcommand(1);

  RankOptions rank_opts;
  CLI::App* rank_cmd = app.add_subcommand("rank", "Rank the nodes of an edge-list graph");
  rank_cmd->add_option("graph", rank_opts.graph_file, "edge-list file")->required();
  rank_cmd->add_option("--algo", rank_opts.algo, "hits | whits | pagerank")
      ->check(CLI::IsMember({"hits", "whits", "pagerank"}));
  rank_cmd->add_option("--alpha", rank_opts.alpha_text,
                       "weight exponent, decimal or fraction (default 2/3)");
  rank_cmd->add_option("--damping", rank_opts.damping, "PageRank damping factor in (0,1)");
  rank_cmd->add_option("--key", rank_opts.key, "ranking key: auth | hub | f | pr")
      ->check(CLI::IsMember({"auth", "hub", "f", "pr"}));
  rank_cmd->add_option("--tol", rank_opts.tolerance, "convergence tolerance");
  rank_cmd->add_option("--max-iter", rank_opts.max_iter, "iteration cap")
      ->check(CLI::PositiveNumber);
  rank_cmd->add_option("--precision", rank_opts.precision, "decimal places in the report")
      ->check(CLI::Range(1, 17));
  rank_cmd->add_option("--out", rank_opts.out_path, "write the report here instead of stdout");

  CompareOptions compare_opts;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Score a computed ranking against a reference ranking");
  compare_cmd->add_option("report", compare_opts.report_file, "report file from 'rank'")
      ->required();
  compare_cmd->add_option("reference", compare_opts.reference_file, "reference ranking file")
      ->required();
  compare_cmd->add_option("--k", compare_opts.ks_text, "comma-separated top-k sizes, e.g. 3,5");
  compare_cmd->add_option("--precision", compare_opts.precision, "decimal places")
      ->check(CLI::Range(1, 17));

  GenerateOptions gen_opts;
  CLI::App* gen_cmd = app.add_subcommand("generate", "Generate a quasi-hierarchical network");
  gen_cmd->add_option("--depth", gen_opts.cfg.depth, "hierarchy levels below the root")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--branching", gen_opts.cfg.branching, "children per manager")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--extra", gen_opts.cfg.extra_links, "number of non-hierarchical links")
      ->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", gen_opts.cfg.seed, "random seed");
  gen_cmd->add_option("--out-graph", gen_opts.out_graph, "edge-list output (default stdout)");
  gen_cmd->add_option("--out-truth", gen_opts.out_truth, "ground-truth output");

  SweepOptions sweep_opts;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Compare weighted-HITS rankings across several alpha values");
  sweep_cmd->add_option("graph", sweep_opts.graph_file, "edge-list file")->required();
  sweep_cmd->add_option("reference", sweep_opts.reference_file, "reference ranking file")
      ->required();
  sweep_cmd->add_option("--alphas", sweep_opts.alphas_text, "comma-separated alpha values")
      ->required();
  sweep_cmd->add_option("--key", sweep_opts.key, "ranking key: auth | hub | f")
      ->check(CLI::IsMember({"auth", "hub", "f"}));
  sweep_cmd->add_option("--k", sweep_opts.ks_text, "comma-separated top-k sizes");
  sweep_cmd->add_option("--tol", sweep_opts.tolerance, "convergence tolerance");
  sweep_cmd->add_option("--max-iter", sweep_opts.max_iter, "iteration cap")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--precision", sweep_opts.precision, "decimal places")
      ->check(CLI::Range(1, 17));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  rank_opts.alpha_given = rank_cmd->count("--alpha") > 0;
  rank_opts.damping_given = rank_cmd->count("--damping") > 0;
  rank_opts.tolerance_given = rank_cmd->count("--tol") > 0;

  try {
    if (rank_cmd->parsed()) return run_rank(rank_opts);
    if (compare_cmd->parsed()) return run_compare(compare_opts);
    if (gen_cmd->parsed()) return run_generate(gen_opts);
    if (sweep_cmd->parsed()) return run_sweep(sweep_opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
