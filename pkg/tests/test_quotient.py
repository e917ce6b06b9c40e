import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.interlace.exceptions import DimensionMismatchError
from app.interlace.graph.model import Graph, adjacency_matrix, laplacian_matrix
from app.interlace.numeric.eigen import symmetric_eigen
from app.interlace.partition.model import Partition, ProductPartition
from app.interlace.quotient.quotient import (
    block_size_vector,
    embedded_quotient_identity_gap,
    embedding_partition,
    graph_quotient,
    lift_vector,
    quotient_matrix,
    square_quotient,
)
from app.interlace.search.refinement import equitable_refinement
from tests.strategies import graphs, partitions


def test_c4_bipartition_quotient(c4: Graph, bipartition: Partition) -> None:
    quotient = graph_quotient(c4, bipartition)
    np.testing.assert_allclose(quotient.matrix, [[0.0, 2.0], [2.0, 0.0]], atol=1e-15)
    assert quotient.shape == (2, 2)
    assert quotient.source_dims == (4, 4)


def test_laplacian_quotient(c4: Graph, bipartition: Partition) -> None:
    quotient = graph_quotient(c4, bipartition, laplacian=True)
    np.testing.assert_allclose(quotient.matrix, [[2.0, -2.0], [-2.0, 2.0]], atol=1e-15)


def test_semiequitable_quotient(k4_minus_edge: Graph) -> None:
    partition = Partition.from_one_based(4, [[1, 2, 3], [4]])
    quotient = graph_quotient(k4_minus_edge, partition).matrix
    np.testing.assert_allclose(quotient, [[4.0 / 3.0, math.sqrt(3.0)], [math.sqrt(3.0), 0.0]], atol=1e-15)


def test_rectangular_quotient_of_all_ones() -> None:
    product = ProductPartition(rows=Partition.single_block(2), cols=Partition.single_block(3))
    quotient = quotient_matrix(np.ones((2, 3)), product)
    assert quotient.matrix[0, 0] == pytest.approx(math.sqrt(6.0), abs=1e-15)


def test_singleton_partition_reproduces_the_matrix() -> None:
    a = np.random.default_rng(5).uniform(-1.0, 1.0, size=(4, 4))
    np.testing.assert_allclose(square_quotient(a, Partition.singletons(4)).matrix, a, atol=1e-15)


def test_quotient_of_symmetric_matrix_is_symmetric() -> None:
    rng = np.random.default_rng(8)
    upper = np.triu(rng.uniform(0.0, 1.0, size=(6, 6)))
    a = upper + np.triu(upper, 1).T
    q = square_quotient(a, Partition.from_one_based(6, [[1, 4], [2, 3, 6], [5]])).matrix
    np.testing.assert_allclose(q, q.T, atol=1e-15)


def test_dimension_mismatch_is_rejected(c4: Graph) -> None:
    with pytest.raises(DimensionMismatchError):
        square_quotient(adjacency_matrix(c4), Partition.single_block(3))


def test_lift_vector(bipartition: Partition) -> None:
    lifted = lift_vector([1.0, 1.0], bipartition)
    np.testing.assert_allclose(lifted, [1 / math.sqrt(2)] * 4)
    assert np.linalg.norm(lifted) == pytest.approx(math.sqrt(2.0))
    with pytest.raises(DimensionMismatchError):
        lift_vector([1.0, 2.0, 3.0], bipartition)


def test_block_size_vector_lifts_to_all_ones() -> None:
    partition = Partition.from_one_based(5, [[1], [2, 3, 4], [5]])
    np.testing.assert_allclose(lift_vector(block_size_vector(partition), partition), np.ones(5))


def test_embedding_partition_lists_columns_first() -> None:
    rows = Partition.from_one_based(2, [[1, 2]])
    cols = Partition.from_one_based(3, [[1], [2, 3]])
    assert embedding_partition(rows, cols).one_based() == [[1], [2, 3], [4, 5]]


@pytest.mark.parametrize("seed", range(4))
def test_quotient_of_embedding_is_embedding_of_quotient(seed: int) -> None:
    rng = np.random.default_rng(seed)
    a = rng.uniform(0.0, 1.0, size=(4, 6))
    product = ProductPartition(
        rows=Partition.from_one_based(4, [[1, 3], [2], [4]]),
        cols=Partition.from_one_based(6, [[1, 2, 6], [3, 4, 5]]),
    )
    assert embedded_quotient_identity_gap(a, product) <= 1e-12


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_lifted_quotient_eigenvectors_of_equitable_partitions(data: st.DataObject) -> None:
    graph = data.draw(graphs(max_n=8))
    partition = equitable_refinement(graph, data.draw(partitions(graph.n)))
    for laplacian in (False, True):
        a = laplacian_matrix(graph) if laplacian else adjacency_matrix(graph)
        spectrum = symmetric_eigen(graph_quotient(graph, partition, laplacian=laplacian).matrix)
        for i in range(partition.k):
            x = lift_vector(spectrum.vectors[:, i], partition)
            np.testing.assert_allclose(a @ x, spectrum.values[i] * x, atol=1e-9)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_single_block_quotient_is_the_average_degree(graph: Graph) -> None:
    quotient = graph_quotient(graph, Partition.single_block(graph.n))
    assert quotient.shape == (1, 1)
    assert quotient.matrix[0, 0] == pytest.approx(2 * graph.edge_count / graph.n, abs=1e-12)
