"""
Irreducibility of nonnegative matrices.
"""

from __future__ import annotations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ..core.types import DenseMatrix, as_dense
from ..exceptions import NegativeEntryError


def require_nonnegative(matrix: DenseMatrix) -> None:
    if np.any(matrix < 0.0):
        row, col = (int(x) for x in np.argwhere(matrix < 0.0)[0])
        raise NegativeEntryError(f"Matrix has a negative entry at ({row + 1}, {col + 1}): {matrix[row, col]}")


def is_nonnegative(matrix: DenseMatrix) -> bool:
    return bool(np.all(as_dense(matrix) >= 0.0))


def is_irreducible(matrix: DenseMatrix) -> bool:
    """
    True iff the digraph with an arc i -> j whenever M[i, j] > 0 is strongly connected.

    Raises:
        MatrixShapeError: If the input is not square
        NegativeEntryError: If any entry is negative
    """
    source = as_dense(matrix, square=True)
    require_nonnegative(source)
    if source.shape[0] == 1:
        return True
    support = csr_matrix((source > 0.0).astype(np.int8))
    components, _ = connected_components(support, directed=True, connection="strong")
    return int(components) == 1
