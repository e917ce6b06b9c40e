"""
Largest adjacency eigenvalue of a join of regular graphs.

For G = G_1 + ... + G_k with G_i r_i-regular of order n_i, the quotient of
A(G) under the constituent partition is the k x k matrix with r_i on the
diagonal and sqrt(n_i n_j) off it. For k = 2 its characteristic equation is
(x - r_1)(x - r_2) - n_1 n_2 = 0.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from ..core.types import DEFAULT_POLICY, DenseMatrix, TolerancePolicy
from ..exceptions import GraphError
from ..numeric.eigen import symmetric_eigen


def _check_degree(r: int, n: int, position: int) -> None:
    if n < 1:
        raise GraphError(f"Constituent {position} must have at least one vertex, got n={n}")
    if not 0 <= r <= n - 1:
        raise GraphError(f"Constituent {position}: degree r={r} impossible on n={n} vertices")


def finck_grohmann_mu1(r1: int, n1: int, r2: int, n2: int) -> float:
    """
    Positive root of (x - r1)(x - r2) - n1 n2 = 0.

    Raises:
        GraphError: If a degree/order pair cannot describe a regular graph
    """
    _check_degree(r1, n1, 1)
    _check_degree(r2, n2, 2)
    return (r1 + r2 + math.sqrt((r1 - r2) ** 2 + 4 * n1 * n2)) / 2.0


def join_quotient(degrees: Sequence[int], orders: Sequence[int]) -> DenseMatrix:
    """The k x k quotient of a join of regular graphs under the constituent partition."""
    if len(degrees) != len(orders):
        raise GraphError(f"Got {len(degrees)} degrees for {len(orders)} constituents")
    if len(orders) < 2:
        raise GraphError(f"A join needs at least two constituents, got {len(orders)}")
    for position, (r, n) in enumerate(zip(degrees, orders), start=1):
        _check_degree(r, n, position)

    sizes = np.sqrt(np.asarray(orders, dtype=np.float64))
    matrix = np.outer(sizes, sizes)
    np.fill_diagonal(matrix, np.asarray(degrees, dtype=np.float64))
    matrix.setflags(write=False)
    return matrix


def join_mu1(degrees: Sequence[int], orders: Sequence[int], policy: TolerancePolicy = DEFAULT_POLICY) -> float:
    """mu_1 of the join quotient; agrees with ``finck_grohmann_mu1`` for two constituents."""
    return symmetric_eigen(join_quotient(degrees, orders), policy).mu(1)
