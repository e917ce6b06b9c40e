"""
Block regularity, matrix equitability, and graph-partition classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from ..core.types import DEFAULT_POLICY, DenseMatrix, PartitionClass, TolerancePolicy, as_dense, inf_norm, is_integral
from ..exceptions import DimensionMismatchError, PartitionError
from ..graph.model import Graph, regularity
from .model import Partition, ProductPartition


def _sums_agree(sums: NDArray[np.float64], exact: bool, tolerance: float) -> bool:
    if sums.size <= 1:
        return True
    if exact:
        return bool(np.all(sums == sums[0]))
    return bool(np.all(np.abs(sums - sums[0]) <= tolerance))


def block_is_regular(
    matrix: DenseMatrix,
    rows: Sequence[int],
    cols: Sequence[int],
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> bool:
    """
    True iff all row sums of A[I, J] agree and all column sums of A[I, J] agree.

    Integral blocks are compared exactly; otherwise within eq_tol * max(1, ||A[I,J]||_inf).

    Raises:
        PartitionError: If I or J is empty
        DimensionMismatchError: If an index is out of range
    """
    source = as_dense(matrix)
    if len(rows) == 0 or len(cols) == 0:
        raise PartitionError("Row and column index sets must be nonempty")
    m, n = source.shape
    if any(not 0 <= i < m for i in rows) or any(not 0 <= j < n for j in cols):
        raise DimensionMismatchError(f"Block indices outside the {m}x{n} matrix")

    block = source[np.ix_(list(rows), list(cols))]
    exact = is_integral(block)
    tolerance = policy.scaled(policy.eq_tol, inf_norm(block))
    return _sums_agree(block.sum(axis=1), exact, tolerance) and _sums_agree(block.sum(axis=0), exact, tolerance)


def check_dimensions(matrix: DenseMatrix, product: ProductPartition) -> None:
    m, n = matrix.shape
    if product.rows.ground != m or product.cols.ground != n:
        raise DimensionMismatchError(
            f"Partitions over [{product.rows.ground}]x[{product.cols.ground}] do not match a {m}x{n} matrix"
        )


def first_irregular_block(
    matrix: DenseMatrix,
    product: ProductPartition,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> Optional[Tuple[int, int]]:
    """(p, q) of the first block A[P_p, Q_q] in row-major order that is not regular, or None."""
    source = as_dense(matrix)
    check_dimensions(source, product)
    for p, row_block in enumerate(product.rows.blocks):
        for q, col_block in enumerate(product.cols.blocks):
            if not block_is_regular(source, row_block, col_block, policy):
                return (p, q)
    return None


def is_equitable_for_matrix(
    matrix: DenseMatrix,
    product: ProductPartition,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> bool:
    """
    True iff every block A[P_p, Q_q] is regular.

    Raises:
        DimensionMismatchError: If the partitions do not match the matrix
    """
    return first_irregular_block(matrix, product, policy) is None


@dataclass(frozen=True)
class GraphPartitionReport:
    """Classification together with the blocks that broke regularity (0-based block indices)"""

    classification: PartitionClass
    irregular_blocks: Tuple[int, ...]
    non_semiregular_pairs: Tuple[Tuple[int, int], ...]


def inspect_graph_partition(graph: Graph, partition: Partition) -> GraphPartitionReport:
    if partition.ground != graph.n:
        raise DimensionMismatchError(
            f"Partition over [{partition.ground}] does not match a graph on {graph.n} vertices"
        )

    blocks = partition.blocks
    bad_pairs = tuple(
        (i, j)
        for i in range(len(blocks))
        for j in range(i + 1, len(blocks))
        if not regularity(graph, blocks[i], blocks[j])
    )
    bad_blocks = tuple(i for i, block in enumerate(blocks) if not regularity(graph, block))

    if bad_pairs:
        classification = PartitionClass.NEITHER
    elif bad_blocks:
        classification = PartitionClass.SEMIEQUITABLE_ONLY
    else:
        classification = PartitionClass.EQUITABLE
    return GraphPartitionReport(classification, bad_blocks, bad_pairs)


def classify_graph_partition(graph: Graph, partition: Partition) -> PartitionClass:
    """equitable, semiequitable-only, or neither."""
    return inspect_graph_partition(graph, partition).classification


def is_semiequitable(graph: Graph, partition: Partition) -> bool:
    return classify_graph_partition(graph, partition) is not PartitionClass.NEITHER
