"""
Interlacing of two descending spectra and its tight / exact classification.

For alpha (length n) and beta (length k <= n), interlacing means

    alpha_i >= beta_i >= alpha_{n-k+i}    for i = 1..k.

It is r-tight when beta_i = alpha_i for 1 <= i <= r and beta_i = alpha_{n-k+i}
for r < i <= k, and (p, q)-exact when the first p and the last q of those
equalities hold with 0 < p + q <= k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from ...schema.spectral import InterlacingReport
from ..core.types import DEFAULT_POLICY, DenseMatrix, TolerancePolicy, Vector, as_dense, as_vector
from ..exceptions import DimensionMismatchError, InterlacingPreconditionError, UnsortedSpectrumError
from ..numeric.eigen import eigenvalues
from ..partition.model import Partition
from ..quotient.quotient import square_quotient


@dataclass(frozen=True)
class _Pair:
    alpha: Vector
    beta: Vector
    tol: float

    @property
    def n(self) -> int:
        return int(self.alpha.shape[0])

    @property
    def k(self) -> int:
        return int(self.beta.shape[0])

    def head(self) -> List[bool]:
        return [bool(abs(self.alpha[i] - self.beta[i]) <= self.tol) for i in range(self.k)]

    def tail(self) -> List[bool]:
        offset = self.n - self.k
        return [bool(abs(self.alpha[offset + i] - self.beta[i]) <= self.tol) for i in range(self.k)]


def _require_descending(values: Vector, name: str, tol: float) -> None:
    rises = np.nonzero(np.diff(values) > tol)[0]
    if rises.size:
        i = int(rises[0])
        raise UnsortedSpectrumError(
            f"{name} is not descending at positions {i + 1},{i + 2}: {values[i]!r} < {values[i + 1]!r}"
        )


def _pair(alpha: Sequence[float] | Vector, beta: Sequence[float] | Vector, policy: TolerancePolicy) -> _Pair:
    a, b = as_vector(alpha), as_vector(beta)
    if a.size == 0 or b.size == 0:
        raise DimensionMismatchError("Both spectra must be nonempty")
    if b.size > a.size:
        raise DimensionMismatchError(f"Compressed spectrum has {b.size} values but the full one only {a.size}")
    tol = policy.scaled(policy.eq_tol, float(a[0]), float(a[-1]))
    _require_descending(a, "alpha", tol)
    _require_descending(b, "beta", tol)
    return _Pair(a, b, tol)


def _interlaced(pair: _Pair) -> bool:
    offset = pair.n - pair.k
    return all(
        pair.alpha[i] >= pair.beta[i] - pair.tol and pair.beta[i] >= pair.alpha[offset + i] - pair.tol
        for i in range(pair.k)
    )


def _require_interlaced(pair: _Pair) -> None:
    if not _interlaced(pair):
        raise InterlacingPreconditionError("Spectra are not interlaced; tightness and exactness are undefined")


def _tight(pair: _Pair) -> List[int]:
    head, tail = pair.head(), pair.tail()
    return [r for r in range(pair.k + 1) if all(head[:r]) and all(tail[r:])]


def _exact(pair: _Pair) -> Tuple[int, int]:
    head, tail = pair.head(), pair.tail()
    p = 0
    while p < pair.k and head[p]:
        p += 1
    q = 0
    while q < pair.k and tail[pair.k - 1 - q]:
        q += 1
    return p, q


def check_interlacing(
    alpha: Sequence[float] | Vector,
    beta: Sequence[float] | Vector,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> bool:
    """
    True iff alpha_i >= beta_i >= alpha_{n-k+i} within tolerance for every i.

    Raises:
        UnsortedSpectrumError: If either list is not descending
        DimensionMismatchError: If beta is longer than alpha
    """
    return _interlaced(_pair(alpha, beta, policy))


def classify_tight(
    alpha: Sequence[float] | Vector,
    beta: Sequence[float] | Vector,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> List[int]:
    """
    Every r in 0..k for which the interlacing is r-tight, ascending.

    Raises:
        InterlacingPreconditionError: If the spectra are not interlaced
    """
    pair = _pair(alpha, beta, policy)
    _require_interlaced(pair)
    return _tight(pair)


def classify_exact(
    alpha: Sequence[float] | Vector,
    beta: Sequence[float] | Vector,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> Tuple[int, int]:
    """
    (p_max, q_max): the longest run of head equalities and of tail equalities.

    Raises:
        InterlacingPreconditionError: If the spectra are not interlaced
    """
    pair = _pair(alpha, beta, policy)
    _require_interlaced(pair)
    return _exact(pair)


def interlacing_report(
    alpha: Sequence[float] | Vector,
    beta: Sequence[float] | Vector,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> InterlacingReport:
    """Verdict, tightness set and exactness maxima in one report; k = 1 and k = n are flagged degenerate."""
    pair = _pair(alpha, beta, policy)
    holds = _interlaced(pair)
    tight: List[int] = []
    p_max = q_max = 0
    if holds:
        tight = _tight(pair)
        p_max, q_max = _exact(pair)
    return InterlacingReport(
        n=pair.n,
        k=pair.k,
        holds=holds,
        tight_r_values=tight,
        tight=bool(tight),
        p_max=p_max,
        q_max=q_max,
        exact=p_max + q_max >= 1,
        degenerate=pair.k in (1, pair.n),
        alpha=pair.alpha.tolist(),
        beta=pair.beta.tolist(),
        tolerance=pair.tol,
    )


def quotient_interlacing(
    matrix: DenseMatrix,
    partition: Partition,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> InterlacingReport:
    """Interlacing report for the spectra of A and of A|P x P."""
    source = as_dense(matrix, square=True)
    alpha = eigenvalues(source, policy)
    beta = eigenvalues(square_quotient(source, partition).matrix, policy)
    return interlacing_report(alpha, beta, policy)
