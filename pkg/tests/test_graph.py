import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.interlace.exceptions import GraphError
from app.interlace.graph.generators import (
    all_graphs,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    hypercube,
    path_graph,
    star_graph,
)
from app.interlace.graph.model import Graph, adjacency_matrix, edge_counts, laplacian_matrix, regularity
from app.interlace.graph.operations import blow_up, disjoint_union, join
from tests.strategies import graphs, partitions


def test_edges_are_normalized_and_sorted() -> None:
    graph = Graph.from_edges(4, [(4, 1), (3, 2), (2, 1)])
    assert graph.edges == ((0, 1), (0, 3), (1, 2))
    assert graph.one_based_edges() == [(1, 2), (1, 4), (2, 3)]
    assert graph == Graph.from_edges(4, [(1, 2), (2, 3), (1, 4)])


@pytest.mark.parametrize(
    "pairs, message",
    [
        ([(1, 1)], "Self-loop"),
        ([(1, 2), (2, 1)], "Duplicate edge"),
        ([(1, 5)], "outside"),
    ],
)
def test_invalid_edges(pairs: list[tuple[int, int]], message: str) -> None:
    with pytest.raises(GraphError, match=message):
        Graph.from_edges(4, pairs)


def test_adjacency_and_laplacian(c4: Graph) -> None:
    a = adjacency_matrix(c4)
    lap = laplacian_matrix(c4)
    assert np.array_equal(a, a.T)
    assert np.all(np.diag(a) == 0.0)
    assert np.all(lap.sum(axis=1) == 0.0)
    assert lap.tolist()[0] == [2.0, -1.0, 0.0, -1.0]


def test_degrees_and_connectivity(k4_minus_edge: Graph) -> None:
    assert k4_minus_edge.degrees() == (2, 3, 2, 3)
    assert not k4_minus_edge.is_regular()
    assert k4_minus_edge.is_connected()
    assert not disjoint_union(complete_graph(2), complete_graph(2)).graph.is_connected()
    assert empty_graph(1).is_connected()


def test_edge_counts(c4: Graph) -> None:
    assert edge_counts(c4, [0, 1, 2, 3]) == 4
    assert edge_counts(c4, [0, 2]) == 0
    assert edge_counts(c4, [0, 2], [1, 3]) == 4
    assert edge_counts(c4, [0], [1, 2]) == 1


def test_regularity(c4: Graph, k4_minus_edge: Graph) -> None:
    assert regularity(c4, [0, 1])
    assert regularity(c4, [0, 2], [1, 3])
    verdict = regularity(k4_minus_edge, [0, 1, 2], [3])
    assert verdict
    assert not regularity(k4_minus_edge, [0, 1, 2])
    assert regularity(k4_minus_edge, [0, 1, 2]).x_degrees == (1, 2, 1)
    # an empty bipartite graph is semiregular
    assert regularity(empty_graph(3), [0], [1, 2])


def test_generators() -> None:
    assert cycle_graph(5).degrees() == (2,) * 5
    assert complete_graph(4).edge_count == 6
    assert path_graph(3).edges == ((0, 1), (1, 2))
    assert star_graph(3).degrees() == (3, 1, 1, 1)
    assert complete_bipartite(2, 3).edge_count == 6
    assert hypercube(3).degrees() == (3,) * 8
    assert hypercube(3).edge_count == 12
    with pytest.raises(GraphError):
        cycle_graph(2)


@pytest.mark.parametrize("n, total, connected", [(1, 1, 1), (2, 2, 1), (3, 8, 4), (4, 64, 38)])
def test_all_graphs_counts(n: int, total: int, connected: int) -> None:
    assert sum(1 for _ in all_graphs(n)) == total
    assert sum(1 for _ in all_graphs(n, connected_only=True)) == connected


def test_all_graphs_order_is_by_bitmask() -> None:
    graphs = list(all_graphs(3))
    assert graphs[0].edge_count == 0
    assert graphs[1].edges == ((0, 1),)
    assert graphs[-1] == complete_graph(3)


def test_join_blocks_follow_argument_order() -> None:
    blocked = join(cycle_graph(4), complete_graph(2))
    assert blocked.graph.n == 6
    assert blocked.graph.edge_count == 4 + 1 + 8
    assert blocked.blocks.one_based() == [[1, 2, 3, 4], [5, 6]]
    with pytest.raises(GraphError):
        join(cycle_graph(4))


def test_blow_up_of_an_edge_is_complete_bipartite() -> None:
    blocked = blow_up(complete_graph(2), [2, 3])
    assert blocked.graph == complete_bipartite(2, 3)
    assert blocked.blocks.sizes == (2, 3)


def test_blow_up_loops_fill_blocks() -> None:
    blocked = blow_up(empty_graph(2), [3, 1], loops=[True, False])
    assert blocked.graph.edge_count == 3
    with pytest.raises(GraphError):
        blow_up(empty_graph(2), [3])
    with pytest.raises(GraphError):
        blow_up(empty_graph(2), [0, 1])


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_edges_split_into_within_and_cross_counts(data: st.DataObject) -> None:
    graph = data.draw(graphs(max_n=8))
    blocks = data.draw(partitions(graph.n)).blocks
    within = sum(edge_counts(graph, block) for block in blocks)
    cross = sum(edge_counts(graph, blocks[i], blocks[j]) for i in range(len(blocks)) for j in range(i + 1, len(blocks)))
    assert within + cross == graph.edge_count
