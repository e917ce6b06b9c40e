"""
Exhaustive and randomized sweeps over the audits.

Every sweep returns a SweepSummary: instance and check counts, per-claim
equality counts, the worst slack seen, and every counterexample with its
witness. Work can be spread over a process pool; partial tallies are merged in
enumeration order, so the summary does not depend on the worker count.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, partial
from itertools import combinations_with_replacement, product
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, TypeVar

import numpy as np
from numpy.typing import NDArray

from ...schema.audit import AuditVerdict, Counterexample, SweepKind, SweepSummary
from ..core.types import DEFAULT_POLICY, BoundId, DenseMatrix, TolerancePolicy
from ..exceptions import EnumerationCapError
from ..graph.generators import all_graphs, complete_graph, cycle_graph, empty_graph, hypercube
from ..graph.model import Graph, adjacency_matrix, laplacian_matrix
from ..graph.operations import blow_up, join
from ..numeric.eigen import symmetric_eigen
from ..partition.enumeration import DEFAULT_ENUMERATION_CAP, enumerate_partitions
from ..partition.model import Partition
from ..partition.regularity import GraphPartitionReport, inspect_graph_partition
from ..utils.logging import get_interlace_logger
from .bounds import ORIENTATION, eigen_terms, evaluate_bound, uses_laplacian
from .finck_grohmann import finck_grohmann_mu1
from .theorems import audit_haemers, audit_join, audit_theorem2, audit_theorem4, theorem1_conclusion

logger = get_interlace_logger(__name__)

T = TypeVar("T")

FORMULA_TOL = 1e-9


@dataclass
class _Tally:
    instances: int = 0
    checks: int = 0
    equality_counts: Counter[str] = field(default_factory=Counter[str])
    counterexamples: List[Counterexample] = field(default_factory=list[Counterexample])
    worst_gap: Optional[float] = None

    def see_gap(self, gap: float) -> None:
        if self.worst_gap is None or gap < self.worst_gap:
            self.worst_gap = gap

    def merge(self, other: "_Tally") -> None:
        self.instances += other.instances
        self.checks += other.checks
        self.equality_counts.update(other.equality_counts)
        self.counterexamples.extend(other.counterexamples)
        if other.worst_gap is not None:
            self.see_gap(other.worst_gap)

    def record(self, instance: str, verdict: AuditVerdict) -> None:
        self.checks += len(verdict.conclusion)
        if verdict.counterexample:
            failed = "; ".join(check.name for check in verdict.conclusion if not check.holds)
            self.counterexamples.append(
                Counterexample(instance=instance, theorem=verdict.theorem, detail=failed, witness=verdict.witness)
            )

    def summary(self, kind: SweepKind, parameters: Dict[str, Any]) -> SweepSummary:
        logger.info(
            "sweep_completed",
            kind=kind,
            instances=self.instances,
            checks=self.checks,
            counterexamples=len(self.counterexamples),
        )
        return SweepSummary(
            kind=kind,
            instances=self.instances,
            checks=self.checks,
            equality_counts=dict(sorted(self.equality_counts.items())),
            counterexamples=self.counterexamples,
            worst_gap=self.worst_gap,
            parameters=parameters,
        )


def _run(tasks: Iterable[T], fn: Callable[[T], _Tally], workers: int) -> _Tally:
    total = _Tally()
    if workers <= 1:
        for task in tasks:
            total.merge(fn(task))
        return total
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(fn, tasks, chunksize=32):
            total.merge(part)
    return total


def _graph_label(graph: Graph) -> str:
    return f"n={graph.n} edges={graph.one_based_edges()}"


def _random_partition(rng: np.random.Generator, n: int, k: int) -> Partition:
    """Uniformly labelled partition of 0..n-1 with exactly k blocks."""
    labels = np.concatenate([np.arange(k), rng.integers(0, k, size=n - k)])
    rng.shuffle(labels)
    return Partition.from_labels(labels.tolist())


# --- bounds: exhaustive over graphs and partitions with 1 < k < n


@dataclass(frozen=True)
class _Batch:
    """All k-block partitions of n points with their indicator matrices stacked"""

    k: int
    partitions: Tuple[Partition, ...]
    indicators: NDArray[np.float64]
    inverse_sizes: NDArray[np.float64]


@lru_cache(maxsize=16)
def _batches(n: int, cap: int, override: bool) -> Tuple[_Batch, ...]:
    out: List[_Batch] = []
    for k in range(2, n):
        partitions = tuple(enumerate_partitions(n, k, cap=cap, override=override))
        indicators = np.stack([p.indicator() for p in partitions])
        inverse_sizes = 1.0 / indicators.sum(axis=1)
        out.append(_Batch(k, partitions, indicators, inverse_sizes))
    return tuple(out)


def _irregular_pairs(adjacency: DenseMatrix, batch: _Batch) -> NDArray[np.bool_]:
    """[p, i, j] is True iff vertices of block i disagree on their neighbor count into block j."""
    counts = np.einsum("ij,pjk->pik", adjacency, batch.indicators)
    means = np.einsum("pvi,pvj->pij", batch.indicators, counts) * batch.inverse_sizes[:, :, None]
    spread = np.abs(counts - np.einsum("pvi,pij->pvj", batch.indicators, means)) > 0.5
    return np.einsum("pvi,pvj->pij", batch.indicators, spread.astype(np.float64)) > 0.0


def _bounds_for_graph(graph: Graph, policy: TolerancePolicy, cap: int, override: bool) -> _Tally:
    tally = _Tally()
    adjacency = adjacency_matrix(graph)
    spectra = {False: symmetric_eigen(adjacency, policy), True: symmetric_eigen(laplacian_matrix(graph), policy)}
    mu1 = spectra[False].mu(1)
    connected = graph.is_connected()
    average = 2.0 * graph.edge_count / graph.n

    for batch in _batches(graph.n, cap, override):
        blocks = np.einsum("pik,ij,pjl->pkl", batch.indicators, adjacency, batch.indicators)
        diagonal = np.einsum("pkk->pk", blocks)
        within = (diagonal * batch.inverse_sizes).sum(axis=1)
        weights = batch.inverse_sizes[:, :, None] + batch.inverse_sizes[:, None, :]
        cross = ((blocks * weights).sum(axis=(1, 2)) - (2.0 * diagonal * batch.inverse_sizes).sum(axis=1)) / 2.0
        rhs_by_bound = {
            BoundId.INEQ4: within,
            BoundId.INEQ3: within - average,
            BoundId.LAPL1: cross,
            BoundId.LAPL2: cross,
        }
        tally.instances += len(batch.partitions)

        structures: Dict[int, GraphPartitionReport] = {}
        for bound, rhs in rhs_by_bound.items():
            laplacian = uses_laplacian(bound)
            lhs = math.fsum(term.value for term in eigen_terms(spectra[laplacian], bound, batch.k))
            gap = lhs - rhs if ORIENTATION[bound] == ">=" else rhs - lhs
            tol = policy.eq_tol * np.maximum(1.0, np.maximum(abs(lhs), np.abs(rhs)))
            tally.checks += len(batch.partitions)
            tally.see_gap(float(gap.min()))

            for index in np.nonzero(gap <= 2.0 * tol)[0].tolist():
                partition = batch.partitions[index]
                report = evaluate_bound(graph, partition, bound, policy, spectra[laplacian])
                label = f"{_graph_label(graph)} P={partition}"
                if report.gap < -report.tolerance:
                    tally.counterexamples.append(
                        Counterexample(
                            instance=label,
                            theorem=bound.value,
                            detail="bound violated",
                            witness=report.model_dump(),
                        )
                    )
                    continue
                if not report.equality:
                    continue
                tally.equality_counts[bound.value] += 1
                if index not in structures:
                    structures[index] = inspect_graph_partition(graph, partition)
                conclusion = theorem1_conclusion(graph, bound, structures[index])
                if not all(check.holds for check in conclusion):
                    tally.counterexamples.append(
                        Counterexample(
                            instance=label,
                            theorem="1",
                            detail=f"equality in {bound.value} without the claimed structure",
                            witness={"bound": report.model_dump(), "conclusion": [c.model_dump() for c in conclusion]},
                        )
                    )

        if connected:
            _perron_checks(tally, graph, adjacency, batch, blocks, mu1, policy)
    return tally


def _perron_checks(
    tally: _Tally,
    graph: Graph,
    adjacency: DenseMatrix,
    batch: _Batch,
    blocks: NDArray[np.float64],
    mu1: float,
    policy: TolerancePolicy,
) -> None:
    """mu_1 equality for equitable partitions, and the iff for partitions with regular cross blocks."""
    irregular = _irregular_pairs(adjacency, batch)
    off_diagonal = ~np.eye(batch.k, dtype=bool)
    cross_regular = ~np.any(irregular & off_diagonal, axis=(1, 2))
    diagonal_regular = ~np.any(np.einsum("pkk->pk", irregular), axis=1)
    tol = policy.scaled(policy.eq_tol, mu1)

    for index in np.nonzero(cross_regular)[0].tolist():
        scale = np.sqrt(batch.inverse_sizes[index])
        quotient = blocks[index] * np.outer(scale, scale)
        equal = abs(mu1 - symmetric_eigen(quotient, policy).mu(1)) <= tol
        label = f"{_graph_label(graph)} P={batch.partitions[index]}"
        tally.checks += 1
        tally.equality_counts["semiequitable"] += 1
        if bool(diagonal_regular[index]):
            tally.equality_counts["equitable"] += 1
            if not equal:
                tally.counterexamples.append(
                    Counterexample(instance=label, theorem="3", detail="equitable partition without mu_1 equality")
                )
        if equal != bool(diagonal_regular[index]):
            tally.counterexamples.append(
                Counterexample(
                    instance=label,
                    theorem="5",
                    detail=f"mu_1 equality={equal} but diagonal blocks regular={bool(diagonal_regular[index])}",
                )
            )


def sweep_bounds(
    max_n: int = 6,
    connected_only: bool = True,
    policy: TolerancePolicy = DEFAULT_POLICY,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
    override: bool = False,
    workers: int = 1,
) -> SweepSummary:
    """
    Every graph on 3..max_n vertices (edge-subset enumeration) against every partition with 1 < k < n.

    Checks that all four bounds hold, that every equality has the structure it is
    claimed to force, and, on connected graphs, the mu_1 statements for equitable
    partitions and for partitions with regular cross blocks.
    """
    if max_n > cap and not override:
        raise EnumerationCapError(max_n, cap)
    graphs = (graph for n in range(3, max_n + 1) for graph in all_graphs(n, connected_only=connected_only))
    task = partial(_bounds_for_graph, policy=policy, cap=cap, override=override)
    tally = _run(graphs, task, workers)
    return tally.summary("bounds", {"max_n": max_n, "connected_only": connected_only})


# --- interlacing of random symmetric matrices with their quotients


def _haemers_for_instance(instance: Tuple[DenseMatrix, List[Partition]], policy: TolerancePolicy) -> _Tally:
    tally = _Tally()
    matrix, partitions = instance
    for partition in partitions:
        verdict = audit_haemers(matrix, partition, policy)
        tally.instances += 1
        tally.record(f"n={matrix.shape[0]} P={partition}", verdict)
        report = verdict.witness["interlacing"]
        alpha, beta = report["alpha"], report["beta"]
        offset = report["n"] - report["k"]
        tally.see_gap(min(min(alpha[i] - b, b - alpha[offset + i]) for i, b in enumerate(beta)))
        if report["tight"]:
            tally.equality_counts["tight"] += 1
        if report["exact"]:
            tally.equality_counts["exact"] += 1
    return tally


def sweep_haemers(
    count: int = 1000,
    max_n: int = 12,
    partitions_per_matrix: int = 5,
    seed: int = 0,
    policy: TolerancePolicy = DEFAULT_POLICY,
    *,
    workers: int = 1,
) -> SweepSummary:
    """Random symmetric matrices (entries uniform in [-1, 1]) against random partitions with 1 < k < n."""
    rng = np.random.default_rng(seed)
    instances: List[Tuple[DenseMatrix, List[Partition]]] = []
    for _ in range(count):
        n = int(rng.integers(3, max_n + 1))
        upper = np.triu(rng.uniform(-1.0, 1.0, size=(n, n)))
        matrix = upper + np.triu(upper, 1).T
        partitions = [_random_partition(rng, n, int(rng.integers(2, n))) for _ in range(partitions_per_matrix)]
        instances.append((matrix, partitions))
    tally = _run(instances, partial(_haemers_for_instance, policy=policy), workers)
    return tally.summary(
        "haemers", {"count": count, "max_n": max_n, "partitions_per_matrix": partitions_per_matrix, "seed": seed}
    )


# --- blow-ups of small templates


def _blow_up_instances(max_k: int, max_size: int) -> List[Tuple[Graph, Tuple[int, ...]]]:
    return [
        (template, sizes)
        for k in range(1, max_k + 1)
        for template in all_graphs(k)
        for sizes in product(range(1, max_size + 1), repeat=k)
    ]


def _blow_up_for_instance(instance: Tuple[Graph, Tuple[int, ...]], policy: TolerancePolicy) -> _Tally:
    template, sizes = instance
    blocked = blow_up(template, sizes)
    verdict = audit_theorem2(blocked.graph, blocked.blocks, policy, observe=False)
    tally = _Tally(instances=1)
    tally.record(f"template {_graph_label(template)} sizes={list(sizes)}", verdict)
    for check in verdict.conclusion:
        if check.holds:
            tally.equality_counts[check.name] += 1
    return tally


def sweep_blow_ups(
    max_k: int = 4,
    max_size: int = 3,
    policy: TolerancePolicy = DEFAULT_POLICY,
    *,
    workers: int = 1,
) -> SweepSummary:
    """Every blow-up of a template on at most max_k vertices with block sizes 1..max_size."""
    tally = _run(_blow_up_instances(max_k, max_size), partial(_blow_up_for_instance, policy=policy), workers)
    return tally.summary("blow-ups", {"max_k": max_k, "max_size": max_size})


# --- largest singular value of random nonnegative matrices


def _singular_for_instance(instance: Tuple[DenseMatrix, Partition, Partition], policy: TolerancePolicy) -> _Tally:
    matrix, rows, cols = instance
    tally = _Tally(instances=1)
    label = f"{matrix.shape[0]}x{matrix.shape[1]} P={rows} Q={cols}"
    for verdict in audit_theorem4(matrix, rows, cols, policy):
        tally.record(label, verdict)
        if verdict.case == "inequality":
            tally.see_gap(float(verdict.witness["gap"]))
        elif verdict.hypotheses_hold:
            tally.equality_counts["equality_hypotheses"] += 1
    return tally


def sweep_singular(
    count: int = 500,
    max_dim: int = 10,
    seed: int = 0,
    policy: TolerancePolicy = DEFAULT_POLICY,
    *,
    workers: int = 1,
) -> SweepSummary:
    """Random nonnegative m x n matrices (entries uniform in [0, 1]) with random row and column partitions."""
    rng = np.random.default_rng(seed)
    instances: List[Tuple[DenseMatrix, Partition, Partition]] = []
    for _ in range(count):
        m, n = (int(x) for x in rng.integers(1, max_dim + 1, size=2))
        matrix = rng.uniform(0.0, 1.0, size=(m, n))
        rows = _random_partition(rng, m, int(rng.integers(1, m + 1)))
        cols = _random_partition(rng, n, int(rng.integers(1, n + 1)))
        instances.append((matrix, rows, cols))
    tally = _run(instances, partial(_singular_for_instance, policy=policy), workers)
    return tally.summary("singular", {"count": count, "max_dim": max_dim, "seed": seed})


# --- joins of regular graphs


def regular_families(max_order: int) -> List[Tuple[str, Graph]]:
    """Cycles, complete graphs, empty graphs and hypercubes on at most max_order vertices."""
    family: List[Tuple[str, Graph]] = []
    family.extend((f"C{n}", cycle_graph(n)) for n in range(3, max_order + 1))
    family.extend((f"K{n}", complete_graph(n)) for n in range(1, max_order + 1))
    family.extend((f"E{n}", empty_graph(n)) for n in range(1, max_order + 1))
    d = 1
    while 1 << d <= max_order:
        family.append((f"Q{d}", hypercube(d)))
        d += 1
    return family


def _join_for_pair(pair: Sequence[Tuple[str, Graph]], policy: TolerancePolicy) -> _Tally:
    (first_name, first), (second_name, second) = pair
    label = f"{first_name} + {second_name}"
    tally = _Tally(instances=1)
    tally.record(label, audit_join([first, second], policy))

    formula = finck_grohmann_mu1(first.degree(0), first.n, second.degree(0), second.n)
    direct = symmetric_eigen(adjacency_matrix(join(first, second).graph), policy).mu(1)
    gap = abs(formula - direct)
    tally.checks += 1
    tally.see_gap(-gap)
    if gap <= FORMULA_TOL * max(1.0, formula):
        tally.equality_counts["formula"] += 1
    else:
        tally.counterexamples.append(
            Counterexample(
                instance=label,
                theorem="join",
                detail="join formula disagrees with the eigensolver",
                witness={"formula": formula, "direct": direct},
            )
        )
    return tally


def sweep_joins(max_order: int = 8, policy: TolerancePolicy = DEFAULT_POLICY, *, workers: int = 1) -> SweepSummary:
    """Every pair (with repetition) of regular graphs from ``regular_families``."""
    pairs = list(combinations_with_replacement(regular_families(max_order), 2))
    tally = _run(pairs, partial(_join_for_pair, policy=policy), workers)
    return tally.summary("joins", {"max_order": max_order})
