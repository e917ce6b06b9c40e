"""
Quotient matrices and eigenvector lifting.

For partitions P of the rows and Q of the columns,

    b_pq = (1 / sqrt(|P_p| |Q_q|)) * sum_{i in P_p, j in Q_q} a_ij.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from ..core.types import DenseMatrix, Vector, as_dense, as_vector
from ..exceptions import DimensionMismatchError
from ..graph.model import Graph, adjacency_matrix, laplacian_matrix
from ..numeric.singular import hermitian_embedding
from ..partition.model import Partition, ProductPartition, concatenate
from ..partition.regularity import check_dimensions


@dataclass(frozen=True)
class QuotientMatrix:
    """A|P x Q together with the product partition and source shape that produced it"""

    matrix: DenseMatrix
    product: ProductPartition
    source_dims: Tuple[int, int]

    @property
    def shape(self) -> Tuple[int, int]:
        return (int(self.matrix.shape[0]), int(self.matrix.shape[1]))


def quotient_matrix(matrix: DenseMatrix, product: ProductPartition) -> QuotientMatrix:
    """
    Raises:
        DimensionMismatchError: If the partitions do not match the matrix
    """
    source = as_dense(matrix)
    check_dimensions(source, product)

    k, l = product.shape
    out = np.zeros((k, l), dtype=np.float64)
    for p, row_block in enumerate(product.rows.blocks):
        rows = source[list(row_block), :]
        for q, col_block in enumerate(product.cols.blocks):
            total = math.fsum(rows[:, list(col_block)].ravel().tolist())
            out[p, q] = total / math.sqrt(len(row_block) * len(col_block))

    out.setflags(write=False)
    return QuotientMatrix(matrix=out, product=product, source_dims=(int(source.shape[0]), int(source.shape[1])))


def square_quotient(matrix: DenseMatrix, partition: Partition) -> QuotientMatrix:
    """A|P x P."""
    return quotient_matrix(matrix, ProductPartition.square(partition))


def graph_quotient(graph: Graph, partition: Partition, laplacian: bool = False) -> QuotientMatrix:
    """A(G)|P x P, or L(G)|P x P when ``laplacian`` is set."""
    source = laplacian_matrix(graph) if laplacian else adjacency_matrix(graph)
    return square_quotient(source, partition)


def lift_vector(y: Sequence[float] | Vector, partition: Partition) -> Vector:
    """
    x_i = y_s / sqrt(|P_s|) for i in P_s; preserves the Euclidean norm and strict positivity.

    Raises:
        DimensionMismatchError: If y does not have one entry per block
    """
    values = as_vector(y)
    if values.shape[0] != partition.k:
        raise DimensionMismatchError(f"Vector of length {values.shape[0]} does not match {partition.k} blocks")
    lifted = np.zeros(partition.ground, dtype=np.float64)
    for s, block in enumerate(partition.blocks):
        lifted[list(block)] = values[s] / math.sqrt(len(block))
    lifted.setflags(write=False)
    return lifted


def block_size_vector(partition: Partition) -> Vector:
    """(sqrt|P_1|, ..., sqrt|P_k|); its lift is the all-ones vector."""
    return as_vector([math.sqrt(size) for size in partition.sizes])


def embedding_partition(rows: Partition, cols: Partition) -> Partition:
    """Partition of the embedding's index set: column blocks first, then row blocks shifted by n."""
    return concatenate(cols, rows)


def embedded_quotient_identity_gap(matrix: DenseMatrix, product: ProductPartition) -> float:
    """
    max |B|R x R - embed(A|P x Q)| for B = [[0, A^T], [A, 0]] and R = Q u P'.

    Zero up to rounding: the quotient of the embedding is the embedding of the quotient.
    """
    source = as_dense(matrix)
    embedded = hermitian_embedding(source)
    partition = embedding_partition(product.rows, product.cols)
    left = square_quotient(embedded, partition).matrix
    right = hermitian_embedding(quotient_matrix(source, product).matrix)
    return float(np.max(np.abs(left - right)))
