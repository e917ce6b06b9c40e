"""Hypothesis strategies for graphs and partitions."""

from hypothesis import strategies as st

from app.interlace.graph.model import Graph
from app.interlace.partition.model import Partition


@st.composite
def graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    kept = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n=n, edges=tuple(pair for pair, keep in zip(pairs, kept) if keep))


@st.composite
def partitions(draw: st.DrawFn, n: int) -> Partition:
    labels = draw(st.lists(st.integers(min_value=0, max_value=n - 1), min_size=n, max_size=n))
    return Partition.from_labels(labels)
