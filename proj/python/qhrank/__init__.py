"""Node ranking for weighted directed networks: HITS, weighted HITS and PageRank."""

from qhrank._core import (
    GroundTruth,
    HitsResult,
    PageRankResult,
    WeightedDigraph,
    compare_rankings,
    f_measure,
    generate_network,
    gram_products,
    hits_rank,
    hits_step,
    kendall_tau,
    pagerank,
    rank_nodes,
    rank_order,
    read_edge_list,
    write_edge_list,
)

__all__ = [
    "GroundTruth",
    "HitsResult",
    "PageRankResult",
    "WeightedDigraph",
    "compare_rankings",
    "f_measure",
    "generate_network",
    "gram_products",
    "hits_rank",
    "hits_step",
    "kendall_tau",
    "pagerank",
    "rank_nodes",
    "rank_order",
    "read_edge_list",
    "write_edge_list",
]
