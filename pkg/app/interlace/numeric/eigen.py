"""
Dense symmetric eigensolver.

Cyclic Jacobi rotations in round-robin ordering: every step of a sweep
annihilates n/2 disjoint off-diagonal pairs at once, so a step is a handful of
vectorized row/column updates and a sweep visits each pair (p, q) exactly once.
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, Tuple

import numpy as np
from numpy.typing import NDArray

from ..core.types import DEFAULT_POLICY, DenseMatrix, Spectrum, TolerancePolicy, as_dense, inf_norm
from ..exceptions import AsymmetryError, ConvergenceError
from ..utils.logging import get_interlace_logger

logger = get_interlace_logger(__name__)

IndexPairs = Tuple[NDArray[np.intp], NDArray[np.intp]]


@lru_cache(maxsize=64)
def round_robin_schedule(n: int) -> Tuple[IndexPairs, ...]:
    """
    Circle-method pairing of 0..n-1: n-1 rounds (n even) or n rounds (n odd)
    of disjoint pairs, covering every unordered pair exactly once.
    """
    m = n if n % 2 == 0 else n + 1
    players = list(range(m))
    rounds: List[IndexPairs] = []
    for _ in range(m - 1):
        ps: List[int] = []
        qs: List[int] = []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a == n or b == n:
                continue
            ps.append(min(a, b))
            qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0], players[-1], *players[1:-1]]
    return tuple(rounds)


def _off_norm(work: DenseMatrix) -> float:
    return float(np.linalg.norm(work - np.diag(np.diag(work))))


def _rotate(work: DenseMatrix, basis: DenseMatrix, p: NDArray[np.intp], q: NDArray[np.intp]) -> None:
    apq = work[p, q]
    active = apq != 0.0
    if not np.any(active):
        return
    p, q, apq = p[active], q[active], apq[active]

    theta = (work[q, q] - work[p, p]) / (2.0 * apq)
    sign = np.where(theta >= 0.0, 1.0, -1.0)
    with np.errstate(over="ignore", invalid="ignore"):
        t = sign / (np.abs(theta) + np.hypot(theta, 1.0))
    t = np.where(np.isfinite(t), t, 0.0)
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c

    col_p, col_q = work[:, p], work[:, q]
    work[:, p] = col_p * c - col_q * s
    work[:, q] = col_p * s + col_q * c

    row_p, row_q = work[p, :], work[q, :]
    work[p, :] = c[:, None] * row_p - s[:, None] * row_q
    work[q, :] = s[:, None] * row_p + c[:, None] * row_q

    work[p, q] = 0.0
    work[q, p] = 0.0

    vec_p, vec_q = basis[:, p], basis[:, q]
    basis[:, p] = vec_p * c - vec_q * s
    basis[:, q] = vec_p * s + vec_q * c


def check_symmetric(matrix: DenseMatrix, policy: TolerancePolicy = DEFAULT_POLICY) -> None:
    """
    Raises:
        AsymmetryError: If ||M - M^T||_inf exceeds eigen_tol * max(1, ||M||_inf)
    """
    deviation = inf_norm(matrix - matrix.T)
    limit = policy.scaled(policy.eigen_tol, inf_norm(matrix))
    if deviation > limit:
        raise AsymmetryError(f"Matrix is not symmetric: ||M - M^T||_inf = {deviation:.3e} > {limit:.3e}", deviation)


def normalize_signs(vectors: DenseMatrix) -> DenseMatrix:
    """Flip each column so its largest-magnitude entry (first on ties) is positive."""
    fixed = np.array(vectors, dtype=np.float64, copy=True)
    if fixed.size == 0:
        return fixed
    pivots = np.argmax(np.abs(fixed), axis=0)
    signs = np.sign(fixed[pivots, np.arange(fixed.shape[1])])
    signs[signs == 0.0] = 1.0
    fixed *= signs
    return fixed


def symmetric_eigen(matrix: DenseMatrix, policy: TolerancePolicy = DEFAULT_POLICY) -> Spectrum:
    """
    Eigendecomposition of a real symmetric matrix.

    Args:
        matrix: Square symmetric matrix
        policy: Tolerance policy (symmetry check, convergence threshold, sweep cap)

    Returns:
        Spectrum with descending values; ties keep Jacobi output order

    Raises:
        MatrixShapeError: If the input is not square
        NonFiniteEntryError: If the input has NaN/Inf entries
        AsymmetryError: If the input is not symmetric within tolerance
        ConvergenceError: If the sweep cap is reached
    """
    source = as_dense(matrix, square=True)
    check_symmetric(source, policy)

    n = source.shape[0]
    # work holds M / 2^e with 1 <= max|m_ij| / 2^e < 2, exactly representable
    _, exponent = np.frexp(np.max(np.abs(source)))
    scale = float(np.ldexp(1.0, int(exponent) - 1))
    work = (source / scale + source.T / scale) / 2.0
    basis = np.eye(n, dtype=np.float64)

    target = policy.jacobi_offdiag_tol * float(np.linalg.norm(work))
    schedule = round_robin_schedule(n)

    sweeps = 0
    off = _off_norm(work)
    while off > target:
        if sweeps >= policy.max_sweeps:
            raise ConvergenceError(sweeps, off * scale)
        for p, q in schedule:
            _rotate(work, basis, p, q)
        sweeps += 1
        off = _off_norm(work)

    logger.debug("jacobi_converged", n=n, sweeps=sweeps, off_norm=off * scale)

    diagonal = np.diag(work) * scale
    order = np.argsort(-diagonal, kind="stable")
    values = diagonal[order]
    vectors = normalize_signs(basis[:, order])

    values.setflags(write=False)
    vectors.setflags(write=False)
    return Spectrum(values=values, vectors=vectors)


def eigenvalues(matrix: DenseMatrix, policy: TolerancePolicy = DEFAULT_POLICY) -> NDArray[np.float64]:
    return symmetric_eigen(matrix, policy).values
