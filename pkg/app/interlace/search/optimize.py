"""
Exhaustive search for the partition that makes a bound tightest.

Lower bounds (ineq4, lapl2) have their partition side maximized, upper bounds
(ineq3, lapl1) minimized, over every k-block partition. Objectives are compared
as exact fractions and ties keep the first partition in enumeration order, so a
search split across workers returns the same partition as a sequential one.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import List, Optional, Sequence, Tuple

from ...schema.search import SearchResult
from ..audit.bounds import LOWER_BOUNDS, evaluate_bound, partition_terms
from ..core.types import DEFAULT_POLICY, BoundId, TolerancePolicy
from ..exceptions import PartitionError
from ..graph.model import Graph
from ..partition.enumeration import DEFAULT_ENUMERATION_CAP, enumerate_partitions, rgs_prefixes
from ..partition.model import Partition
from ..utils.logging import get_interlace_logger

logger = get_interlace_logger(__name__)

PREFIX_DEPTH = 4


@dataclass(frozen=True)
class _SliceBest:
    objective: Optional[Fraction]
    labels: Optional[Tuple[int, ...]]
    examined: int


def partition_objective(graph: Graph, partition: Partition, bound: BoundId) -> Fraction:
    """Exact partition side of ``bound``."""
    return sum((value for _, value in partition_terms(graph, partition, bound)), Fraction(0))


def _better(candidate: Fraction, incumbent: Optional[Fraction], maximize: bool) -> bool:
    if incumbent is None:
        return True
    return candidate > incumbent if maximize else candidate < incumbent


def _search_slice(
    prefix: Sequence[int],
    graph: Graph,
    k: int,
    bound: BoundId,
    cap: int,
    override: bool,
) -> _SliceBest:
    maximize = bound in LOWER_BOUNDS
    best: Optional[Fraction] = None
    labels: Optional[Tuple[int, ...]] = None
    examined = 0
    for partition in enumerate_partitions(graph.n, k, cap=cap, override=override, prefix=prefix):
        examined += 1
        objective = partition_objective(graph, partition, bound)
        if _better(objective, best, maximize):
            best, labels = objective, partition.labels()
    return _SliceBest(best, labels, examined)


def _merge(slices: Sequence[_SliceBest], maximize: bool) -> _SliceBest:
    best: Optional[Fraction] = None
    labels: Optional[Tuple[int, ...]] = None
    examined = 0
    for part in slices:
        examined += part.examined
        if part.objective is not None and _better(part.objective, best, maximize):
            best, labels = part.objective, part.labels
    return _SliceBest(best, labels, examined)


def maximize_bound(
    graph: Graph,
    k: int,
    bound: BoundId,
    policy: TolerancePolicy = DEFAULT_POLICY,
    *,
    workers: int = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
    override: bool = False,
) -> SearchResult:
    """
    Best k-block partition for ``bound``: largest partition side for lower bounds, smallest for upper bounds.

    Args:
        graph: The graph
        k: Number of blocks, 1 < k < n
        bound: Which inequality
        policy: Tolerance policy for the attached BoundReport
        workers: Processes to split the enumeration over (by restricted-growth-string prefix)
        cap: Largest n enumerated without ``override``
        override: Allow n > cap

    Returns:
        SearchResult with the winning partition and its full BoundReport

    Raises:
        PartitionError: If k is outside 1 < k < n
        EnumerationCapError: If n > cap without override
    """
    if not 1 < k < graph.n:
        raise PartitionError(f"Search needs 1 < k < n, got k={k} for n={graph.n}")

    maximize = bound in LOWER_BOUNDS
    task = partial(_search_slice, graph=graph, k=k, bound=bound, cap=cap, override=override)
    logger.info("bound_search_started", n=graph.n, k=k, bound=bound.value, workers=workers)

    slices: List[_SliceBest]
    if workers <= 1:
        slices = [task(())]
    else:
        prefixes = rgs_prefixes(graph.n, PREFIX_DEPTH, k)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            slices = list(pool.map(task, prefixes))

    merged = _merge(slices, maximize)
    if merged.labels is None or merged.objective is None:
        raise PartitionError(f"No partition of {graph.n} vertices into {k} blocks")
    best = Partition.from_labels(merged.labels)
    report = evaluate_bound(graph, best, bound, policy)

    logger.info(
        "bound_search_completed",
        bound=bound.value,
        objective=float(merged.objective),
        examined=merged.examined,
    )
    return SearchResult(
        inequality=report.inequality,
        k=k,
        best_partition=best.one_based(),
        objective=float(merged.objective),
        candidates_examined=merged.examined,
        exhaustive=True,
        report=report,
    )
