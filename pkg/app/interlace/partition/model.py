"""
Partitions of an index range.

Blocks are stored 0-based and canonically ordered (each block ascending,
blocks by smallest element). 1-based views exist only for I/O.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from ..exceptions import ParseError, PartitionError

Block = Tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    """Ordered list of nonempty, pairwise disjoint blocks covering 0..ground-1"""

    ground: int
    blocks: Tuple[Block, ...]

    def __post_init__(self) -> None:
        if self.ground < 1:
            raise PartitionError(f"Partition ground set must be nonempty, got n={self.ground}")

        seen = [False] * self.ground
        canonical: List[Block] = []
        for index, block in enumerate(self.blocks):
            if len(block) == 0:
                raise PartitionError(f"Block {index + 1} is empty")
            for element in block:
                if not 0 <= element < self.ground:
                    raise PartitionError(f"Element {element + 1} is outside 1..{self.ground}")
                if seen[element]:
                    raise PartitionError(f"Element {element + 1} appears in more than one block")
                seen[element] = True
            canonical.append(tuple(sorted(block)))

        missing = [i + 1 for i, hit in enumerate(seen) if not hit]
        if missing:
            raise PartitionError(f"Blocks do not cover the ground set; missing {missing}")

        canonical.sort(key=lambda b: b[0])
        object.__setattr__(self, "blocks", tuple(canonical))

    @classmethod
    def from_blocks(cls, ground: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        return cls(ground=ground, blocks=tuple(tuple(int(x) for x in block) for block in blocks))

    @classmethod
    def from_one_based(cls, ground: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        return cls(ground=ground, blocks=tuple(tuple(int(x) - 1 for x in block) for block in blocks))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        """Partition whose block of element i is ``labels[i]`` (any hashable integer labels)."""
        groups: dict[int, List[int]] = {}
        for element, label in enumerate(labels):
            groups.setdefault(int(label), []).append(element)
        return cls(ground=len(labels), blocks=tuple(tuple(g) for g in groups.values()))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(ground=n, blocks=tuple((i,) for i in range(n)))

    @classmethod
    def single_block(cls, n: int) -> "Partition":
        return cls(ground=n, blocks=(tuple(range(n)),))

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(block) for block in self.blocks)

    def labels(self) -> Tuple[int, ...]:
        """Restricted growth string: block index of each element."""
        out = [0] * self.ground
        for index, block in enumerate(self.blocks):
            for element in block:
                out[element] = index
        return tuple(out)

    def indicator(self) -> NDArray[np.float64]:
        """n x k 0/1 matrix with a one at (i, s) iff i is in block s."""
        matrix = np.zeros((self.ground, self.k), dtype=np.float64)
        for index, block in enumerate(self.blocks):
            matrix[list(block), index] = 1.0
        return matrix

    def refines(self, other: "Partition") -> bool:
        """True iff every block of self lies inside a block of ``other``."""
        if other.ground != self.ground:
            return False
        owner = other.labels()
        return all(len({owner[e] for e in block}) == 1 for block in self.blocks)

    def one_based(self) -> List[List[int]]:
        return [[e + 1 for e in block] for block in self.blocks]

    def __str__(self) -> str:
        inner = ",".join("{" + ",".join(str(e + 1) for e in block) + "}" for block in self.blocks)
        return "{" + inner + "}"


def concatenate(first: Partition, second: Partition) -> Partition:
    """Partition of 0..(n1+n2-1): blocks of ``first`` followed by blocks of ``second`` shifted by n1."""
    ground = first.ground + second.ground
    blocks = first.blocks + tuple(tuple(e + first.ground for e in b) for b in second.blocks)
    return Partition(ground=ground, blocks=blocks)


@dataclass(frozen=True)
class ProductPartition:
    """P x Q, a partition of [m] x [n] into the rectangles P_p x Q_q"""

    rows: Partition
    cols: Partition

    @classmethod
    def square(cls, partition: Partition) -> "ProductPartition":
        return cls(rows=partition, cols=partition)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows.k, self.cols.k)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


def parse_partition_text(text: str, ground: int | None = None, source: str | None = None) -> Partition:
    """
    Parse the partition text format: one block per line, 1-based integers
    separated by whitespace, blank lines ignored.

    Args:
        text: File contents
        ground: Expected ground-set size; inferred from the largest element when None
        source: File name used in error messages

    Raises:
        ParseError: On non-integer tokens, empty input, or invalid blocks (with line number)
    """
    blocks: List[List[int]] = []
    lines: List[int] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        try:
            block = [int(token) for token in stripped.split()]
        except ValueError as e:
            raise ParseError(f"Non-integer vertex in partition block: {stripped!r}", source, number) from e
        blocks.append(block)
        lines.append(number)

    if not blocks:
        raise ParseError("Partition file has no blocks", source)

    n = ground if ground is not None else max(max(b) for b in blocks)
    seen: dict[int, int] = {}
    for block, number in zip(blocks, lines):
        for vertex in block:
            if not 1 <= vertex <= n:
                raise ParseError(f"Vertex {vertex} outside 1..{n}", source, number)
            if vertex in seen:
                raise ParseError(f"Vertex {vertex} already in the block on line {seen[vertex]}", source, number)
            seen[vertex] = number

    try:
        return Partition.from_one_based(n, blocks)
    except PartitionError as e:
        raise ParseError(str(e), source) from e


def format_partition_text(partition: Partition) -> str:
    return "".join(" ".join(str(e) for e in block) + "\n" for block in partition.one_based())
