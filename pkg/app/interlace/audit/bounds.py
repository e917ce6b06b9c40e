"""
Partition bounds on sums of extreme eigenvalues of a graph.

    ineq4:  mu_1 + ... + mu_k                >=  sum_i 2e(P_i)/|P_i|
    ineq3:  mu_{n-k+2} + ... + mu_n          <=  sum_i 2e(P_i)/|P_i| - 2e(G)/n
    lapl1:  lambda_2 + ... + lambda_k        <=  sum_{i<j} e(P_i,P_j) (1/|P_i| + 1/|P_j|)
    lapl2:  lambda_{n-k+1} + ... + lambda_n  >=  sum_{i<j} e(P_i,P_j) (1/|P_i| + 1/|P_j|)

mu are adjacency eigenvalues in descending order, lambda Laplacian eigenvalues
in ascending order. The eigenvalue side (lhs) comes from the eigensolver; the
partition side (rhs) is exact rational arithmetic over integer edge counts.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Literal, Optional, Tuple, cast

from ...schema.audit import BoundReport
from ...schema.common import BoundKind, Term
from ..core.types import DEFAULT_POLICY, BoundId, Spectrum, TolerancePolicy
from ..exceptions import DimensionMismatchError, PartitionError
from ..graph.model import Graph, adjacency_matrix, edge_counts, laplacian_matrix
from ..numeric.eigen import symmetric_eigen
from ..partition.model import Partition

Orientation = Literal[">=", "<="]

ORIENTATION: dict[BoundId, Orientation] = {
    BoundId.INEQ4: ">=",
    BoundId.INEQ3: "<=",
    BoundId.LAPL1: "<=",
    BoundId.LAPL2: ">=",
}

LOWER_BOUNDS = frozenset({BoundId.INEQ4, BoundId.LAPL2})


def uses_laplacian(bound: BoundId) -> bool:
    return bound in (BoundId.LAPL1, BoundId.LAPL2)


def graph_spectrum(graph: Graph, laplacian: bool, policy: TolerancePolicy = DEFAULT_POLICY) -> Spectrum:
    source = laplacian_matrix(graph) if laplacian else adjacency_matrix(graph)
    return symmetric_eigen(source, policy)


def eigen_terms(spectrum: Spectrum, bound: BoundId, k: int) -> List[Term]:
    """
    The eigenvalues summed on the left side of ``bound``.

    This is the only place where lambda indices (ascending) are mapped onto the
    descending spectrum.
    """
    n = spectrum.n
    if bound is BoundId.INEQ4:
        return [Term(label=f"mu_{i}", value=spectrum.mu(i)) for i in range(1, k + 1)]
    if bound is BoundId.INEQ3:
        return [Term(label=f"mu_{i}", value=spectrum.mu(i)) for i in range(n - k + 2, n + 1)]
    if bound is BoundId.LAPL1:
        return [Term(label=f"lambda_{i}", value=spectrum.laplacian_lambda(i)) for i in range(2, k + 1)]
    return [Term(label=f"lambda_{i}", value=spectrum.laplacian_lambda(i)) for i in range(n - k + 1, n + 1)]


def within_terms(graph: Graph, partition: Partition) -> List[Tuple[str, Fraction]]:
    """2e(P_i)/|P_i| for every block."""
    return [
        (f"2e(P_{i + 1})/|P_{i + 1}|", Fraction(2 * edge_counts(graph, block), len(block)))
        for i, block in enumerate(partition.blocks)
    ]


def cross_terms(graph: Graph, partition: Partition) -> List[Tuple[str, Fraction]]:
    """e(P_i, P_j)(1/|P_i| + 1/|P_j|) for every pair i < j."""
    blocks = partition.blocks
    out: List[Tuple[str, Fraction]] = []
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            weight = Fraction(1, len(blocks[i])) + Fraction(1, len(blocks[j]))
            label = f"e(P_{i + 1},P_{j + 1})(1/|P_{i + 1}|+1/|P_{j + 1}|)"
            out.append((label, edge_counts(graph, blocks[i], blocks[j]) * weight))
    return out


def partition_terms(graph: Graph, partition: Partition, bound: BoundId) -> List[Tuple[str, Fraction]]:
    if uses_laplacian(bound):
        return cross_terms(graph, partition)
    terms = within_terms(graph, partition)
    if bound is BoundId.INEQ3:
        terms.append(("-2e(G)/n", Fraction(-2 * graph.edge_count, graph.n)))
    return terms


def check_block_count(graph: Graph, partition: Partition) -> None:
    if partition.ground != graph.n:
        raise DimensionMismatchError(
            f"Partition over [{partition.ground}] does not match a graph on {graph.n} vertices"
        )
    if not 1 < partition.k <= graph.n:
        raise PartitionError(f"Bounds need 1 < k <= n, got k={partition.k} for n={graph.n}")


def evaluate_bound(
    graph: Graph,
    partition: Partition,
    bound: BoundId,
    policy: TolerancePolicy = DEFAULT_POLICY,
    spectrum: Optional[Spectrum] = None,
) -> BoundReport:
    """
    Evaluate one of the four partition bounds.

    Args:
        graph: The graph
        partition: Vertex partition with 1 < k <= n blocks
        bound: Which inequality
        policy: Tolerance policy
        spectrum: Precomputed adjacency (ineq4/ineq3) or Laplacian (lapl1/lapl2) spectrum

    Returns:
        BoundReport whose gap is the inequality's slack (negative only on violation)

    Raises:
        DimensionMismatchError: If the partition does not cover the graph's vertices
        PartitionError: If k is outside 1 < k <= n
    """
    check_block_count(graph, partition)
    if spectrum is None:
        spectrum = graph_spectrum(graph, uses_laplacian(bound), policy)

    lhs_terms = eigen_terms(spectrum, bound, partition.k)
    rhs_exact = partition_terms(graph, partition, bound)

    lhs = math.fsum(term.value for term in lhs_terms)
    rhs = float(sum((value for _, value in rhs_exact), Fraction(0)))
    orientation = ORIENTATION[bound]
    gap = lhs - rhs if orientation == ">=" else rhs - lhs
    tolerance = policy.scaled(policy.eq_tol, lhs, rhs)

    return BoundReport(
        inequality=cast(BoundKind, bound.value),
        orientation=orientation,
        lhs=lhs,
        rhs=rhs,
        gap=gap,
        equality=abs(gap) <= tolerance,
        partition=partition.one_based(),
        lhs_terms=lhs_terms,
        rhs_terms=[Term(label=label, value=float(value)) for label, value in rhs_exact],
        tolerance=tolerance,
    )


def evaluate_all_bounds(
    graph: Graph,
    partition: Partition,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> List[BoundReport]:
    """All four bounds, sharing one adjacency and one Laplacian eigendecomposition."""
    check_block_count(graph, partition)
    adjacency = graph_spectrum(graph, False, policy)
    laplacian = graph_spectrum(graph, True, policy)
    return [
        evaluate_bound(graph, partition, bound, policy, laplacian if uses_laplacian(bound) else adjacency)
        for bound in BoundId
    ]
