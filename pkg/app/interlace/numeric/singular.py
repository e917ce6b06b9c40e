"""
Singular values through the symmetric embedding B = [[0, A^T], [A, 0]].

The spectrum of B is {+sigma_i, -sigma_i} plus |m - n| zeros, so the largest
min(m, n) eigenvalues of B are the singular values of A.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

from ..core.types import DEFAULT_POLICY, DenseMatrix, TolerancePolicy, as_dense
from .eigen import symmetric_eigen


def hermitian_embedding(matrix: DenseMatrix) -> DenseMatrix:
    """
    Build the (n+m)x(n+m) matrix [[0, A^T], [A, 0]] for an m x n matrix A.

    Indices 0..n-1 address the columns of A, indices n..n+m-1 its rows.
    """
    source = as_dense(matrix)
    m, n = source.shape
    embedded = np.zeros((n + m, n + m), dtype=np.float64)
    embedded[:n, n:] = source.T
    embedded[n:, :n] = source
    embedded.setflags(write=False)
    return embedded


def singular_values(matrix: DenseMatrix, policy: TolerancePolicy = DEFAULT_POLICY) -> NDArray[np.float64]:
    """
    Descending singular values sigma_1 >= ... >= sigma_min(m,n) >= 0.

    Raises:
        NonFiniteEntryError: If the input has NaN/Inf entries
    """
    source = as_dense(matrix)
    count = min(source.shape)
    spectrum = symmetric_eigen(hermitian_embedding(source), policy)
    values = np.maximum(spectrum.values[:count].copy(), 0.0)
    values.setflags(write=False)
    return values


def largest_singular_value(matrix: DenseMatrix, policy: TolerancePolicy = DEFAULT_POLICY) -> float:
    return float(singular_values(matrix, policy)[0])
