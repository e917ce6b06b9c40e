import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.interlace.core.types import PartitionClass
from app.interlace.exceptions import EnumerationCapError, ParseError, PartitionError
from app.interlace.graph.generators import all_graphs, complete_graph, star_graph
from app.interlace.graph.model import Graph, adjacency_matrix
from app.interlace.partition.enumeration import (
    bell_number,
    enumerate_partitions,
    enumerate_rgs,
    rgs_prefixes,
    stirling2,
)
from app.interlace.partition.model import (
    Partition,
    ProductPartition,
    concatenate,
    format_partition_text,
    parse_partition_text,
)
from app.interlace.partition.regularity import (
    block_is_regular,
    classify_graph_partition,
    first_irregular_block,
    inspect_graph_partition,
    is_equitable_for_matrix,
    is_semiequitable,
)
from tests.strategies import graphs, partitions


def test_blocks_are_canonicalized() -> None:
    partition = Partition.from_one_based(4, [[4, 2], [3, 1]])
    assert partition.one_based() == [[1, 3], [2, 4]]
    assert partition.labels() == (0, 1, 0, 1)
    assert str(partition) == "{{1,3},{2,4}}"


@pytest.mark.parametrize(
    "blocks, message",
    [
        ([[1, 2], []], "empty"),
        ([[1, 2], [2, 3]], "more than one block"),
        ([[1, 2]], "missing"),
        ([[1, 2, 5]], "outside"),
    ],
)
def test_invalid_partitions(blocks: list[list[int]], message: str) -> None:
    with pytest.raises(PartitionError, match=message):
        Partition.from_one_based(3, blocks)


def test_indicator_and_refinement() -> None:
    fine = Partition.from_one_based(4, [[1], [3], [2, 4]])
    coarse = Partition.from_one_based(4, [[1, 3], [2, 4]])
    assert fine.refines(coarse)
    assert not coarse.refines(fine)
    indicator = coarse.indicator()
    assert indicator.shape == (4, 2)
    assert np.array_equal(indicator.sum(axis=1), np.ones(4))
    assert Partition.singletons(3).refines(Partition.single_block(3))


def test_concatenate_shifts_second_partition() -> None:
    joined = concatenate(Partition.single_block(2), Partition.from_one_based(3, [[1], [2, 3]]))
    assert joined.one_based() == [[1, 2], [3], [4, 5]]


def test_parse_partition_text() -> None:
    assert parse_partition_text("1 3\n\n2 4\n", 4).one_based() == [[1, 3], [2, 4]]
    assert parse_partition_text("2\n1 3\n").ground == 3


@pytest.mark.parametrize(
    "text, line",
    [
        ("1 2\n2 3\n", 2),
        ("1 x\n", 1),
        ("1 2\n9\n", 2),
    ],
)
def test_parse_partition_errors_carry_line_numbers(text: str, line: int) -> None:
    with pytest.raises(ParseError) as info:
        parse_partition_text(text, 3, "p.part")
    assert info.value.line == line
    assert str(info.value).startswith(f"p.part:{line}:")


def test_parse_partition_rejects_uncovered_ground_set() -> None:
    with pytest.raises(ParseError, match="missing"):
        parse_partition_text("1 2\n", 3)


def test_partition_text_round_trip() -> None:
    partition = Partition.from_one_based(5, [[1, 4], [2], [3, 5]])
    assert parse_partition_text(format_partition_text(partition), 5) == partition


def test_stirling_and_bell_numbers() -> None:
    assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert [bell_number(n) for n in range(1, 8)] == [1, 2, 5, 15, 52, 203, 877]


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_counts_and_uniqueness(n: int) -> None:
    partitions = list(enumerate_partitions(n))
    assert len(partitions) == bell_number(n)
    assert len(set(partitions)) == len(partitions)
    for k in range(1, n + 1):
        assert sum(1 for _ in enumerate_partitions(n, k)) == stirling2(n, k)


def test_enumeration_order_is_lexicographic_rgs() -> None:
    assert list(enumerate_rgs(3)) == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    assert [p.one_based() for p in enumerate_partitions(3, 2)] == [
        [[1, 2], [3]],
        [[1, 3], [2]],
        [[1], [2, 3]],
    ]


@given(st.integers(min_value=1, max_value=8), st.integers(min_value=1, max_value=5))
def test_prefix_slices_reproduce_the_full_order(n: int, depth: int) -> None:
    full = list(enumerate_rgs(n))
    sliced = [labels for prefix in rgs_prefixes(n, depth) for labels in enumerate_rgs(n, prefix=prefix)]
    assert sliced == full


def test_prefix_slices_with_block_count() -> None:
    full = list(enumerate_partitions(6, 3))
    sliced = [p for prefix in rgs_prefixes(6, 3, 3) for p in enumerate_partitions(6, 3, prefix=prefix)]
    assert sliced == full


def test_enumeration_cap() -> None:
    with pytest.raises(EnumerationCapError):
        next(enumerate_partitions(11))
    assert next(enumerate_partitions(11, 1, override=True)) == Partition.single_block(11)
    with pytest.raises(EnumerationCapError):
        next(enumerate_partitions(5, cap=4))


def test_invalid_enumeration_requests() -> None:
    with pytest.raises(PartitionError):
        next(enumerate_partitions(3, 4))
    with pytest.raises(PartitionError):
        next(enumerate_partitions(4, 2, prefix=(0, 2)))


def test_block_regularity() -> None:
    a = np.array([[0, 1, 1], [1, 0, 0], [1, 0, 0]], dtype=float)
    assert block_is_regular(a, [0], [1, 2])
    assert block_is_regular(a, [1, 2], [0])
    assert not block_is_regular(a, [0, 1], [1, 2])
    b = np.array([[0.5, 0.25], [0.25, 0.5]])
    assert block_is_regular(b, [0, 1], [0, 1])


def test_first_irregular_block_and_equitability(c4: Graph, bipartition: Partition) -> None:
    a = adjacency_matrix(c4)
    assert is_equitable_for_matrix(a, ProductPartition.square(bipartition))
    lopsided = Partition.from_one_based(4, [[1], [2, 3, 4]])
    assert first_irregular_block(a, ProductPartition.square(lopsided)) == (0, 1)


def test_graph_partition_classification(k4_minus_edge: Graph) -> None:
    assert classify_graph_partition(k4_minus_edge, Partition.from_one_based(4, [[1, 3], [2, 4]])) is (
        PartitionClass.EQUITABLE
    )
    report = inspect_graph_partition(k4_minus_edge, Partition.from_one_based(4, [[1, 2, 3], [4]]))
    assert report.classification is PartitionClass.SEMIEQUITABLE_ONLY
    assert report.irregular_blocks == (0,)
    lopsided = Partition.from_one_based(4, [[1, 2], [3, 4]])
    assert classify_graph_partition(k4_minus_edge, lopsided) is PartitionClass.NEITHER
    assert not is_semiequitable(k4_minus_edge, lopsided)


def test_classification_of_small_graphs() -> None:
    star = star_graph(3)
    assert classify_graph_partition(star, Partition.from_one_based(4, [[1], [2, 3, 4]])) is PartitionClass.EQUITABLE
    assert all(
        classify_graph_partition(complete_graph(3), p) is PartitionClass.EQUITABLE for p in enumerate_partitions(3)
    )


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_graph_and_matrix_equitability_agree(data: st.DataObject) -> None:
    graph = data.draw(graphs(max_n=8))
    partition = data.draw(partitions(graph.n))
    equitable = classify_graph_partition(graph, partition) is PartitionClass.EQUITABLE
    assert equitable == is_equitable_for_matrix(adjacency_matrix(graph), ProductPartition.square(partition))


@pytest.mark.parametrize("n", [3, 4])
def test_graph_and_matrix_equitability_agree_on_every_small_graph(n: int) -> None:
    equitable_count = 0
    for graph in all_graphs(n):
        adjacency = adjacency_matrix(graph)
        for partition in enumerate_partitions(n):
            equitable = classify_graph_partition(graph, partition) is PartitionClass.EQUITABLE
            assert equitable == is_equitable_for_matrix(adjacency, ProductPartition.square(partition))
            equitable_count += equitable
    assert equitable_count > 0


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_block_regularity_ignores_row_and_column_order(data: st.DataObject) -> None:
    m = data.draw(st.integers(min_value=1, max_value=5))
    n = data.draw(st.integers(min_value=1, max_value=5))
    entries = data.draw(st.lists(st.integers(min_value=0, max_value=2), min_size=m * n, max_size=m * n))
    a = np.array(entries, dtype=float).reshape(m, n)
    rows = data.draw(st.lists(st.integers(min_value=0, max_value=m - 1), min_size=1, unique=True))
    cols = data.draw(st.lists(st.integers(min_value=0, max_value=n - 1), min_size=1, unique=True))
    expected = block_is_regular(a, rows, cols)

    assert block_is_regular(a, data.draw(st.permutations(rows)), data.draw(st.permutations(cols))) == expected

    row_order = data.draw(st.permutations(range(m)))
    col_order = data.draw(st.permutations(range(n)))
    shuffled = a[np.ix_(row_order, col_order)]
    moved_rows = [row_order.index(i) for i in rows]
    moved_cols = [col_order.index(j) for j in cols]
    assert block_is_regular(shuffled, moved_rows, moved_cols) == expected
