"""
Equitable partitions of a graph.

``equitable_refinement`` is colour refinement started from a seed partition:
each round splits every block by the signature (neighbor count into each
current block) of its vertices, until no block splits. The fixed point is the
coarsest equitable partition refining the seed.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from ..core.types import PartitionClass
from ..exceptions import PartitionError
from ..graph.model import Graph
from ..partition.enumeration import DEFAULT_ENUMERATION_CAP, enumerate_partitions
from ..partition.model import Partition
from ..partition.regularity import classify_graph_partition
from ..utils.logging import get_interlace_logger

logger = get_interlace_logger(__name__)

Signature = Tuple[int, ...]


def _split_round(graph: Graph, blocks: List[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    masks = [graph.mask(block) for block in blocks]
    out: List[Tuple[int, ...]] = []
    for block in blocks:
        groups: Dict[Signature, List[int]] = {}
        for v in block:
            signature = tuple(graph.count_into(v, mask) for mask in masks)
            groups.setdefault(signature, []).append(v)
        out.extend(tuple(groups[signature]) for signature in sorted(groups))
    return out


def refine(graph: Graph, seed: Partition) -> Tuple[Partition, int]:
    """
    Coarsest equitable refinement of ``seed`` and the number of rounds that split a block.

    Raises:
        PartitionError: If the seed is not a partition of the graph's vertices
    """
    if seed.ground != graph.n:
        raise PartitionError(f"Seed partition over [{seed.ground}] does not match a graph on {graph.n} vertices")

    blocks = list(seed.blocks)
    rounds = 0
    while True:
        split = _split_round(graph, blocks)
        if len(split) == len(blocks):
            break
        blocks = split
        rounds += 1

    result = Partition(ground=graph.n, blocks=tuple(blocks))
    logger.debug("refinement_stable", n=graph.n, seed_k=seed.k, k=result.k, rounds=rounds)
    return result, rounds


def equitable_refinement(graph: Graph, seed: Optional[Partition] = None) -> Partition:
    """Coarsest equitable partition refining ``seed`` (default: the single block)."""
    return refine(graph, seed if seed is not None else Partition.single_block(graph.n))[0]


def find_equitable_partitions(
    graph: Graph,
    max_k: int,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
    override: bool = False,
) -> List[Partition]:
    """
    Every partition with at most ``max_k`` blocks that is equitable for G, in enumeration order.

    Raises:
        PartitionError: If max_k < 1
        EnumerationCapError: If n > cap without override
    """
    if max_k < 1:
        raise PartitionError(f"max_k must be at least 1, got {max_k}")
    found = [
        partition
        for partition in enumerate_partitions(graph.n, cap=cap, override=override)
        if partition.k <= max_k and classify_graph_partition(graph, partition) is PartitionClass.EQUITABLE
    ]
    logger.info("equitable_partitions_found", n=graph.n, max_k=max_k, count=len(found))
    return found
