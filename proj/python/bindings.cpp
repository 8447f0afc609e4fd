#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

#include "qhrank/compare.hpp"
#include "qhrank/hits.hpp"
#include "qhrank/io.hpp"
#include "qhrank/netgen.hpp"
#include "qhrank/pagerank.hpp"
#include "qhrank/ranking.hpp"

namespace py = pybind11;
using namespace qhrank;

namespace {

std::vector<std::vector<double>> matrix_rows(const DenseMatrix& m) {
  std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  return rows;
}

WeightedDigraph build_graph(int node_count,
                            const std::vector<std::tuple<int, int, double>>& edge_list) {
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (const auto& [src, dst, weight] : edge_list) edges.push_back({src, dst, weight});
  return WeightedDigraph(node_count, edges);
}

Normalization parse_normalization(const std::string& name) {
  if (name == "l1" || name == "L1") return Normalization::L1;
  if (name == "none") return Normalization::None;
  throw std::invalid_argument("normalization must be 'l1' or 'none'");
}

RankKey parse_key(const std::string& name) {
  if (name == "auth") return RankKey::Auth;
  if (name == "hub") return RankKey::Hub;
  if (name == "f") return RankKey::F;
  throw std::invalid_argument("key must be 'auth', 'hub' or 'f'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Node ranking for weighted directed networks: HITS, weighted HITS and PageRank.";

  py::class_<WeightedDigraph>(m, "WeightedDigraph")
      .def(py::init(&build_graph), py::arg("node_count"), py::arg("edges"))
      .def_property_readonly("node_count", &WeightedDigraph::node_count)
      .def_property_readonly("edge_count", &WeightedDigraph::edge_count)
      .def("edges",
           [](const WeightedDigraph& g) {
             std::vector<std::tuple<int, int, double>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.src, e.dst, e.weight);
             return out;
           })
      .def("weight", &WeightedDigraph::weight, py::arg("src"), py::arg("dst"))
      .def("in_degree", &WeightedDigraph::in_degree, py::arg("node"))
      .def("out_degree", &WeightedDigraph::out_degree, py::arg("node"))
      .def("transposed", &WeightedDigraph::transposed)
      .def("adjacency", [](const WeightedDigraph& g) { return matrix_rows(adjacency(g)); })
      .def("__repr__", [](const WeightedDigraph& g) {
        std::ostringstream s;
        s << "WeightedDigraph(nodes=" << g.node_count() << ", edges=" << g.edge_count() << ")";
        return s.str();
      });

  py::class_<HitsResult>(m, "HitsResult")
      .def_readonly("auth", &HitsResult::auth)
      .def_readonly("hub", &HitsResult::hub)
      .def_readonly("iterations", &HitsResult::iterations)
      .def_readonly("converged", &HitsResult::converged);

  py::class_<PageRankResult>(m, "PageRankResult")
      .def_readonly("scores", &PageRankResult::scores)
      .def_readonly("iterations", &PageRankResult::iterations)
      .def_readonly("converged", &PageRankResult::converged);

  py::class_<GroundTruth>(m, "GroundTruth")
      .def_readonly("level", &GroundTruth::level)
      .def_readonly("parent", &GroundTruth::parent);

  m.def("gram_products", [](const WeightedDigraph& g) {
    const GramProducts products = gram_products(g);
    return py::make_tuple(matrix_rows(products.authority), matrix_rows(products.hub));
  });

  m.def(
      "hits_step",
      [](const WeightedDigraph& g, const ScoreVector& auth, const ScoreVector& hub,
         double alpha) { return hits_step(g, auth, hub, alpha); },
      py::arg("graph"), py::arg("auth"), py::arg("hub"), py::arg("alpha") = 1.0);

  m.def(
      "hits_rank",
      [](const WeightedDigraph& g, double alpha, int max_iter, double tolerance,
         const std::string& normalization) {
        HitsConfig cfg;
        cfg.alpha = alpha;
        cfg.max_iter = max_iter;
        cfg.tolerance = tolerance;
        cfg.normalization = parse_normalization(normalization);
        return hits_rank(g, cfg);
      },
      py::arg("graph"), py::arg("alpha") = 2.0 / 3.0, py::arg("max_iter") = 1000,
      py::arg("tolerance") = 1e-9, py::arg("normalization") = "l1");

  m.def(
      "pagerank",
      [](const WeightedDigraph& g, double damping, int max_iter, double tolerance,
         bool weighted, const std::string& base_constant, const std::string& dangling) {
        PageRankConfig cfg;
        cfg.damping = damping;
        cfg.max_iter = max_iter;
        cfg.tolerance = tolerance;
        cfg.weighted = weighted;
        if (base_constant == "standard")
          cfg.base_constant = BaseConstant::Standard;
        else if (base_constant == "paper-literal")
          cfg.base_constant = BaseConstant::PaperLiteral;
        else
          throw std::invalid_argument("base_constant must be 'standard' or 'paper-literal'");
        if (dangling == "redistribute-uniform")
          cfg.dangling = DanglingPolicy::RedistributeUniform;
        else if (dangling == "self-absorb")
          cfg.dangling = DanglingPolicy::SelfAbsorb;
        else
          throw std::invalid_argument("dangling must be 'redistribute-uniform' or 'self-absorb'");
        return pagerank(g, cfg);
      },
      py::arg("graph"), py::arg("damping") = 0.85, py::arg("max_iter") = 1000,
      py::arg("tolerance") = 1e-12, py::arg("weighted") = false,
      py::arg("base_constant") = "standard", py::arg("dangling") = "redistribute-uniform");

  m.def("f_measure", &f_measure, py::arg("auth"), py::arg("hub"));

  m.def(
      "rank_order",
      [](const std::vector<double>& scores) { return rank_order(scores); },
      py::arg("scores"));

  m.def(
      "rank_nodes",
      [](const ScoreVector& auth, const ScoreVector& hub, const std::string& key) {
        const RankingResult result = make_ranking(auth, hub, parse_key(key));
        std::vector<double> f;
        f.reserve(result.rows.size());
        for (const RankedRow& row : result.rows) f.push_back(row.f);
        return py::make_tuple(result.order, f);
      },
      py::arg("auth"), py::arg("hub"), py::arg("key") = "f",
      "Returns (order, f_values) for the given auth/hub vectors.");

  m.def(
      "kendall_tau",
      [](const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
        return kendall_tau(a, b);
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "compare_rankings",
      [](const std::vector<NodeId>& computed, const std::vector<NodeId>& reference,
         const std::vector<int>& ks) {
        const ComparisonReport report = compare_rankings(computed, reference, ks);
        py::dict out;
        out["kendall_tau"] = report.kendall_tau;
        out["exact_matches"] = report.exact_matches;
        py::dict overlaps;
        for (const auto& [k, overlap] : report.top_k_overlap) overlaps[py::int_(k)] = overlap;
        out["top_k_overlap"] = overlaps;
        return out;
      },
      py::arg("computed"), py::arg("reference"), py::arg("ks") = std::vector<int>{});

  m.def(
      "generate_network",
      [](int depth, int branching, int extra_links, std::uint64_t seed,
         std::pair<double, double> down_weights, std::pair<double, double> up_weights,
         std::pair<double, double> extra_weights) {
        GeneratorConfig cfg;
        cfg.depth = depth;
        cfg.branching = branching;
        cfg.extra_links = extra_links;
        cfg.seed = seed;
        cfg.down_weight_range = {down_weights.first, down_weights.second};
        cfg.up_weight_range = {up_weights.first, up_weights.second};
        cfg.extra_weight_range = {extra_weights.first, extra_weights.second};
        return generate_network(cfg);
      },
      py::arg("depth") = 3, py::arg("branching") = 3, py::arg("extra_links") = 0,
      py::arg("seed") = 0, py::arg("down_weights") = std::make_pair(5.0, 10.0),
      py::arg("up_weights") = std::make_pair(1.0, 4.0),
      py::arg("extra_weights") = std::make_pair(1.0, 2.0));

  m.def(
      "read_edge_list",
      [](const std::string& path) {
        EdgeListData data = read_edge_list_file(path);
        return py::make_tuple(std::move(data.graph), data.labels, data.aggregated_duplicates);
      },
      py::arg("path"), "Returns (graph, labels, aggregated_duplicates).");

  m.def(
      "write_edge_list",
      [](const WeightedDigraph& g) {
        std::ostringstream out;
        write_edge_list(out, g);
        return out.str();
      },
      py::arg("graph"), "Serializes a graph to edge-list text.");
}
