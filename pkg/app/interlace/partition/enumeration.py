"""
Set-partition enumeration by restricted growth strings.

A restricted growth string a_1..a_n has a_1 = 0 and a_i <= 1 + max(a_1..a_{i-1});
element i goes to block a_i. Lexicographic order of the strings gives a
deterministic order of partitions, and fixing a prefix selects a contiguous
slice of that order, which is how work is split across workers.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from ..exceptions import EnumerationCapError, PartitionError
from ..utils.logging import get_interlace_logger
from .model import Partition

logger = get_interlace_logger(__name__)

DEFAULT_ENUMERATION_CAP = 10


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def bell_number(n: int) -> int:
    return sum(stirling2(n, k) for k in range(n + 1))


def _validate(n: int, k: Optional[int], cap: int, override: bool) -> None:
    if n < 1:
        raise PartitionError(f"Cannot enumerate partitions of an empty ground set (n={n})")
    if k is not None and not 1 <= k <= n:
        raise PartitionError(f"Block count k={k} outside 1..{n}")
    if n > cap and not override:
        raise EnumerationCapError(n, cap)


def _feasible(used: int, position: int, n: int, k: Optional[int]) -> bool:
    """Can a string with ``used`` blocks after ``position`` elements still end with exactly k blocks?"""
    if k is None:
        return True
    return used <= k and used + (n - position) >= k


def _validate_prefix(prefix: Sequence[int], n: int, k: Optional[int]) -> int:
    if len(prefix) > n:
        raise PartitionError(f"Prefix of length {len(prefix)} is longer than n={n}")
    used = 0
    for position, label in enumerate(prefix):
        if not 0 <= label <= used:
            raise PartitionError(f"Prefix {tuple(prefix)} is not a restricted growth string")
        used = max(used, label + 1)
        if not _feasible(used, position + 1, n, k):
            raise PartitionError(f"Prefix {tuple(prefix)} cannot be completed to {k} blocks")
    return used


def _grow(labels: List[int], used: int, n: int, k: Optional[int]) -> Iterator[Tuple[int, ...]]:
    position = len(labels)
    if position == n:
        if k is None or used == k:
            yield tuple(labels)
        return
    for label in range(used + 1):
        next_used = max(used, label + 1)
        if not _feasible(next_used, position + 1, n, k):
            continue
        labels.append(label)
        yield from _grow(labels, next_used, n, k)
        labels.pop()


def enumerate_rgs(n: int, k: Optional[int] = None, prefix: Sequence[int] = ()) -> Iterator[Tuple[int, ...]]:
    """Restricted growth strings of length n (exactly k blocks if given) extending ``prefix``, in lex order."""
    if not prefix:
        if n >= 1 and _feasible(1, 1, n, k):
            yield from _grow([0], 1, n, k)
        return
    used = _validate_prefix(prefix, n, k)
    yield from _grow(list(prefix), used, n, k)


def enumerate_partitions(
    n: int,
    k: Optional[int] = None,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
    override: bool = False,
    prefix: Sequence[int] = (),
) -> Iterator[Partition]:
    """
    Yield every set partition of 0..n-1 exactly once.

    Args:
        n: Ground-set size
        k: Exact number of blocks, or None for all partitions
        cap: Largest n allowed without ``override``
        override: Allow n > cap
        prefix: Restricted-growth-string prefix selecting a slice of the enumeration

    Raises:
        PartitionError: If n < 1, k is outside 1..n, or the prefix is invalid
        EnumerationCapError: If n > cap without override
    """
    _validate(n, k, cap, override)
    logger.debug("partition_enumeration_started", n=n, k=k, prefix=list(prefix))
    for labels in enumerate_rgs(n, k, prefix):
        yield Partition.from_labels(labels)


def rgs_prefixes(n: int, depth: int, k: Optional[int] = None) -> List[Tuple[int, ...]]:
    """
    All feasible restricted-growth-string prefixes of length min(depth, n), in lex order.

    Enumerating each prefix in turn and concatenating reproduces the full enumeration order.
    """
    depth = max(1, min(depth, n))
    return [labels for labels in enumerate_rgs(depth) if _feasible(max(labels) + 1, depth, n, k)]
