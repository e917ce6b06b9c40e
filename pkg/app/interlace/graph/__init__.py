from .generators import (
    all_graphs,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    hypercube,
    path_graph,
    star_graph,
)
from .model import Graph, RegularityVerdict, adjacency_matrix, edge_counts, laplacian_matrix, regularity
from .operations import BlockedGraph, blow_up, disjoint_union, join

__all__ = [
    "Graph",
    "RegularityVerdict",
    "adjacency_matrix",
    "laplacian_matrix",
    "edge_counts",
    "regularity",
    "BlockedGraph",
    "join",
    "blow_up",
    "disjoint_union",
    "empty_graph",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "star_graph",
    "complete_bipartite",
    "hypercube",
    "all_graphs",
]
