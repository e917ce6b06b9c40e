"""
Graph constructions: disjoint union, join, and blow-up of a template graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence

from ..exceptions import GraphError
from ..partition.model import Partition
from .model import Edge, Graph


@dataclass(frozen=True)
class BlockedGraph:
    """A graph together with the vertex blocks it was assembled from"""

    graph: Graph
    blocks: Partition


def _offsets(sizes: Sequence[int]) -> List[int]:
    out = [0]
    for size in sizes:
        out.append(out[-1] + size)
    return out


def _constituent_blocks(sizes: Sequence[int]) -> Partition:
    starts = _offsets(sizes)
    return Partition.from_blocks(starts[-1], [range(starts[i], starts[i + 1]) for i in range(len(sizes))])


def disjoint_union(*graphs: Graph) -> BlockedGraph:
    if not graphs or any(g.n == 0 for g in graphs):
        raise GraphError("Disjoint union needs at least one graph and every constituent must be nonempty")
    starts = _offsets([g.n for g in graphs])
    edges: List[Edge] = []
    for graph, start in zip(graphs, starts):
        edges.extend((u + start, v + start) for u, v in graph.edges)
    return BlockedGraph(Graph(n=starts[-1], edges=tuple(edges)), _constituent_blocks([g.n for g in graphs]))


def join(*graphs: Graph) -> BlockedGraph:
    """
    G_1 + ... + G_k: disjoint union plus every edge between distinct constituents.

    The returned blocks list the constituents' vertex sets in argument order.

    Raises:
        GraphError: If fewer than two graphs are given
    """
    if len(graphs) < 2:
        raise GraphError(f"Join needs at least two graphs, got {len(graphs)}")
    union = disjoint_union(*graphs)
    edges = list(union.graph.edges)
    for first, second in combinations(union.blocks.blocks, 2):
        edges.extend((u, v) for u in first for v in second)
    return BlockedGraph(Graph(n=union.graph.n, edges=tuple(edges)), union.blocks)


def blow_up(template: Graph, sizes: Sequence[int], loops: Optional[Sequence[bool]] = None) -> BlockedGraph:
    """
    Replace template vertex i by a block of ``sizes[i]`` vertices.

    Block i is empty (complete when ``loops[i]`` is set); blocks i and j are
    completely joined iff {i, j} is a template edge and empty otherwise.

    Raises:
        GraphError: If sizes/loops do not match the template or a size is < 1
    """
    if len(sizes) != template.n:
        raise GraphError(f"Blow-up needs {template.n} block sizes, got {len(sizes)}")
    if any(size < 1 for size in sizes):
        raise GraphError(f"Blow-up block sizes must be positive, got {list(sizes)}")
    flags = list(loops) if loops is not None else [False] * template.n
    if len(flags) != template.n:
        raise GraphError(f"Blow-up needs {template.n} loop flags, got {len(flags)}")

    blocks = _constituent_blocks(sizes)
    edges: List[Edge] = []
    for index, block in enumerate(blocks.blocks):
        if flags[index]:
            edges.extend(combinations(block, 2))
    for i, j in template.edges:
        edges.extend((u, v) for u in blocks.blocks[i] for v in blocks.blocks[j])
    return BlockedGraph(Graph(n=blocks.ground, edges=tuple(edges)), blocks)
