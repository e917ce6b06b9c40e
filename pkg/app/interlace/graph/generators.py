"""
Standard graph families and exhaustive graph enumeration.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, List

from ..exceptions import GraphError
from .model import Edge, Graph
from .operations import join


def empty_graph(n: int) -> Graph:
    return Graph(n=n, edges=())


def complete_graph(n: int) -> Graph:
    return Graph(n=n, edges=tuple(combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"Cycle needs at least 3 vertices, got {n}")
    return Graph(n=n, edges=tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n=n, edges=tuple((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 1."""
    return Graph(n=leaves + 1, edges=tuple((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty_graph(a), empty_graph(b)).graph


def hypercube(d: int) -> Graph:
    n = 1 << d
    return Graph(n=n, edges=tuple((v, v ^ (1 << bit)) for v in range(n) for bit in range(d) if v < v ^ (1 << bit)))


def all_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """
    Every labeled graph on n vertices, by edge-subset bitmask (bit i selects the
    i-th pair of ``combinations(range(n), 2)``), in increasing mask order.
    """
    pairs: List[Edge] = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        graph = Graph(n=n, edges=tuple(pair for bit, pair in enumerate(pairs) if mask >> bit & 1))
        if connected_only and not graph.is_connected():
            continue
        yield graph
