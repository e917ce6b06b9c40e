"""
Readers and writers for the plain-text input formats.

    edge list:  "n m" header, then m lines "u v" (1-based vertices)
    matrix:     "rows cols" header, then rows lines of whitespace-separated decimals
    partition:  one block per line, 1-based elements

Blank lines are ignored everywhere. Every ParseError carries the file name and,
where one applies, the line number.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Iterator, List, Literal, Optional, Tuple, Union, overload

import numpy as np

from ..core.types import DenseMatrix, as_dense
from ..exceptions import GraphError, ParseError
from ..graph.model import Graph
from ..partition.model import Partition, parse_partition_text

InputKind = Literal["graph", "matrix", "partition"]


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if tokens:
            yield number, tokens


def _header(lines: Iterator[Tuple[int, List[str]]], source: Optional[str], names: str) -> Tuple[int, int]:
    try:
        number, tokens = next(lines)
    except StopIteration:
        raise ParseError(f"Missing header line '{names}'", source) from None
    if len(tokens) != 2:
        raise ParseError(f"Header must be '{names}', got {' '.join(tokens)!r}", source, number)
    try:
        first, second = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise ParseError(f"Header must be two integers '{names}', got {' '.join(tokens)!r}", source, number) from None
    if first < 0 or second < 0:
        raise ParseError(f"Header values must be nonnegative, got {first} {second}", source, number)
    return first, second


def parse_edge_list(text: str, source: Optional[str] = None) -> Graph:
    """
    Parse an edge list into a Graph.

    Raises:
        ParseError: On a malformed header or edge line, a vertex out of range, a self-loop,
            a duplicate edge, or an edge count that disagrees with the header
    """
    lines = _content_lines(text)
    n, m = _header(lines, source, "n m")
    edges: List[Tuple[int, int]] = []
    seen: dict[Tuple[int, int], int] = {}
    for number, tokens in lines:
        if len(tokens) != 2:
            raise ParseError(f"Edge line must be 'u v', got {' '.join(tokens)!r}", source, number)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"Non-integer vertex in edge {' '.join(tokens)!r}", source, number) from None
        for vertex in (u, v):
            if not 1 <= vertex <= n:
                raise ParseError(f"Vertex {vertex} outside 1..{n}", source, number)
        if u == v:
            raise ParseError(f"Self-loop at vertex {u}", source, number)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"Duplicate edge {{{key[0]},{key[1]}}} (first on line {seen[key]})", source, number)
        seen[key] = number
        edges.append((u, v))

    if len(edges) != m:
        raise ParseError(f"Header declares {m} edges but {len(edges)} were given", source)
    try:
        return Graph.from_edges(n, edges)
    except GraphError as e:
        raise ParseError(str(e), source) from e


def parse_matrix_text(text: str, source: Optional[str] = None) -> DenseMatrix:
    """
    Parse a dense matrix.

    Raises:
        ParseError: On a malformed header, a row of the wrong length, a non-numeric or
            non-finite entry, or a row count that disagrees with the header
    """
    lines = _content_lines(text)
    rows, cols = _header(lines, source, "rows cols")
    if rows == 0 or cols == 0:
        raise ParseError(f"Matrix must have at least one row and column, got {rows}x{cols}", source)

    data: List[List[float]] = []
    for number, tokens in lines:
        if len(data) == rows:
            raise ParseError(f"More than the {rows} rows declared in the header", source, number)
        if len(tokens) != cols:
            raise ParseError(f"Row has {len(tokens)} entries, expected {cols}", source, number)
        row: List[float] = []
        for token in tokens:
            try:
                value = float(token)
            except ValueError:
                raise ParseError(f"Non-numeric matrix entry {token!r}", source, number) from None
            if not math.isfinite(value):
                raise ParseError(f"Non-finite matrix entry {token!r}", source, number)
            row.append(value)
        data.append(row)

    if len(data) != rows:
        raise ParseError(f"Header declares {rows} rows but {len(data)} were given", source)
    return as_dense(np.array(data, dtype=np.float64))


def parse_spectrum_text(text: str, source: Optional[str] = None) -> List[float]:
    """Comma- or whitespace-separated reals, e.g. ``"2,0,0,-2"``."""
    values: List[float] = []
    for token in text.replace(",", " ").split():
        try:
            value = float(token)
        except ValueError:
            raise ParseError(f"Non-numeric eigenvalue {token!r}", source) from None
        if not math.isfinite(value):
            raise ParseError(f"Non-finite eigenvalue {token!r}", source)
        values.append(value)
    if not values:
        raise ParseError("Empty eigenvalue list", source)
    return values


def format_edge_list(graph: Graph) -> str:
    """Canonical edge list: header, then sorted 1-based pairs."""
    lines = [f"{graph.n} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.one_based_edges())
    return "\n".join(lines) + "\n"


def _read(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read input: {e.strerror}", str(path)) from e


@overload
def parse_inputs(path: Union[str, Path], kind: Literal["graph"], ground: Optional[int] = None) -> Graph: ...


@overload
def parse_inputs(path: Union[str, Path], kind: Literal["matrix"], ground: Optional[int] = None) -> DenseMatrix: ...


@overload
def parse_inputs(path: Union[str, Path], kind: Literal["partition"], ground: Optional[int] = None) -> Partition: ...


def parse_inputs(
    path: Union[str, Path], kind: InputKind, ground: Optional[int] = None
) -> Union[Graph, DenseMatrix, Partition]:
    """
    Read and validate one input file.

    Args:
        path: File to read
        kind: graph (edge list), matrix, or partition
        ground: Expected partition ground-set size (partition files only)

    Raises:
        ParseError: If the file is unreadable or malformed
    """
    text = _read(path)
    source = str(path)
    if kind == "graph":
        return parse_edge_list(text, source)
    if kind == "matrix":
        return parse_matrix_text(text, source)
    return parse_partition_text(text, ground, source)
