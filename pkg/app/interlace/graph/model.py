"""
Simple undirected graphs.

Vertices are 0-based internally; ``Graph.from_edges`` and the edge-list text
format use the 1-based labels 1..n. Each vertex keeps a bitarray of its
neighbors for O(1) membership and fast counts against vertex-set masks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from bitarray import bitarray

from ..core.types import DenseMatrix
from ..exceptions import GraphError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with a sorted edge list"""

    n: int
    edges: Tuple[Edge, ...]
    _neighbors: Tuple[bitarray, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"Vertex count must be nonnegative, got {self.n}")

        normalized: List[Edge] = []
        seen: set[Edge] = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"Self-loop at vertex {u + 1}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"Edge {{{u + 1},{v + 1}}} has a vertex outside 1..{self.n}")
            edge = (min(u, v), max(u, v))
            if edge in seen:
                raise GraphError(f"Duplicate edge {{{edge[0] + 1},{edge[1] + 1}}}")
            seen.add(edge)
            normalized.append(edge)
        normalized.sort()

        neighbors = [bitarray(self.n) for _ in range(self.n)]
        for bits in neighbors:
            bits.setall(0)
        for u, v in normalized:
            neighbors[u][v] = 1
            neighbors[v][u] = 1
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "_neighbors", tuple(neighbors))

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Graph":
        """Build from 1-based vertex pairs."""
        return cls(n=n, edges=tuple((int(p[0]) - 1, int(p[1]) - 1) for p in pairs))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self._neighbors[v].count(1)

    def degrees(self) -> Tuple[int, ...]:
        return tuple(bits.count(1) for bits in self._neighbors)

    def mask(self, vertices: Iterable[int]) -> bitarray:
        bits = bitarray(self.n)
        bits.setall(0)
        for v in vertices:
            bits[v] = 1
        return bits

    def count_into(self, v: int, mask: bitarray) -> int:
        """Number of neighbors of ``v`` inside ``mask``."""
        return (self._neighbors[v] & mask).count(1)

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        reached = self.mask([0])
        frontier = [0]
        while frontier:
            v = frontier.pop()
            fresh = self._neighbors[v] & ~reached
            for w in fresh.search(1):
                reached[w] = 1
                frontier.append(w)
        return reached.all()

    def one_based_edges(self) -> List[Tuple[int, int]]:
        return [(u + 1, v + 1) for u, v in self.edges]


def adjacency_matrix(graph: Graph) -> DenseMatrix:
    """Symmetric 0/1 matrix with zero diagonal."""
    matrix = np.zeros((graph.n, graph.n), dtype=np.float64)
    for u, v in graph.edges:
        matrix[u, v] = 1.0
        matrix[v, u] = 1.0
    matrix.setflags(write=False)
    return matrix


def laplacian_matrix(graph: Graph) -> DenseMatrix:
    """L = D - A; every row sums to zero."""
    adjacency = adjacency_matrix(graph)
    matrix = np.diag(adjacency.sum(axis=1)) - adjacency
    matrix.setflags(write=False)
    return matrix


def _check_vertex_sets(
    graph: Graph, x: Iterable[int], y: Optional[Iterable[int]]
) -> Tuple[List[int], Optional[List[int]]]:
    xs = sorted(set(x))
    for v in xs:
        if not 0 <= v < graph.n:
            raise GraphError(f"Vertex {v + 1} outside 1..{graph.n}")
    if y is None:
        return xs, None
    ys = sorted(set(y))
    for v in ys:
        if not 0 <= v < graph.n:
            raise GraphError(f"Vertex {v + 1} outside 1..{graph.n}")
    overlap = set(xs) & set(ys)
    if overlap:
        raise GraphError(f"Vertex sets overlap at {sorted(v + 1 for v in overlap)}")
    return xs, ys


def edge_counts(graph: Graph, x: Iterable[int], y: Optional[Iterable[int]] = None) -> int:
    """
    e(X) when only X is given, e(X, Y) for disjoint X and Y.

    Raises:
        GraphError: On overlapping sets or out-of-range vertices
    """
    xs, ys = _check_vertex_sets(graph, x, y)
    if ys is None:
        inside = graph.mask(xs)
        return sum(graph.count_into(v, inside) for v in xs) // 2
    other = graph.mask(ys)
    return sum(graph.count_into(v, other) for v in xs)


@dataclass(frozen=True)
class RegularityVerdict:
    """Outcome of a regularity test, with the degrees that decided it"""

    regular: bool
    x_degrees: Tuple[int, ...]
    y_degrees: Tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.regular


def regularity(graph: Graph, x: Iterable[int], y: Optional[Iterable[int]] = None) -> RegularityVerdict:
    """
    With only X: is G[X] regular? With X and Y: is G[X, Y] semiregular?

    An empty vertex class or an empty bipartite graph counts as regular.
    """
    xs, ys = _check_vertex_sets(graph, x, y)
    if ys is None:
        inside = graph.mask(xs)
        degrees = tuple(graph.count_into(v, inside) for v in xs)
        return RegularityVerdict(regular=len(set(degrees)) <= 1, x_degrees=degrees)

    x_mask, y_mask = graph.mask(xs), graph.mask(ys)
    x_degrees = tuple(graph.count_into(v, y_mask) for v in xs)
    y_degrees = tuple(graph.count_into(v, x_mask) for v in ys)
    return RegularityVerdict(
        regular=len(set(x_degrees)) <= 1 and len(set(y_degrees)) <= 1,
        x_degrees=x_degrees,
        y_degrees=y_degrees,
    )
