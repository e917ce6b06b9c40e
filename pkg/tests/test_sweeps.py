import pytest

from app.interlace.audit.sweeps import (
    regular_families,
    sweep_blow_ups,
    sweep_bounds,
    sweep_haemers,
    sweep_joins,
    sweep_singular,
)
from app.interlace.exceptions import EnumerationCapError

BLOW_UP_CLAIMS = ["A and A|PxP have the same nonzero eigenvalues", "tr(A^2) = tr((A|PxP)^2)"]


def test_bounds_sweep_on_small_graphs() -> None:
    summary = sweep_bounds(max_n=4)
    assert summary.kind == "bounds"
    assert summary.instances == 4 * 3 + 38 * 13
    assert summary.passed
    assert summary.worst_gap is not None and summary.worst_gap > -1e-9
    assert summary.equality_counts["ineq4"] > 0
    assert summary.equality_counts["equitable"] <= summary.equality_counts["semiequitable"]


def test_bounds_sweep_over_disconnected_graphs() -> None:
    summary = sweep_bounds(max_n=4, connected_only=False)
    assert summary.instances == 8 * 3 + 64 * 13
    assert summary.passed
    assert summary.parameters == {"max_n": 4, "connected_only": False}


def test_bounds_sweep_respects_the_cap() -> None:
    with pytest.raises(EnumerationCapError):
        sweep_bounds(max_n=11)


def test_haemers_sweep() -> None:
    summary = sweep_haemers(count=20, max_n=6, partitions_per_matrix=3, seed=7)
    assert summary.instances == 60
    assert summary.checks == 120
    assert summary.passed
    assert summary.worst_gap is not None and summary.worst_gap > -1e-6


def test_haemers_sweep_is_seeded() -> None:
    assert sweep_haemers(count=10, max_n=5, seed=3) == sweep_haemers(count=10, max_n=5, seed=3)


def test_blow_up_sweep() -> None:
    summary = sweep_blow_ups(max_k=3, max_size=2)
    assert summary.instances == 1 * 2 + 2 * 4 + 8 * 8
    assert summary.passed
    assert [summary.equality_counts[name] for name in BLOW_UP_CLAIMS] == [74, 74]


def test_singular_sweep() -> None:
    summary = sweep_singular(count=30, max_dim=5, seed=1)
    assert summary.instances == 30
    assert 30 <= summary.checks <= 60
    assert summary.passed
    assert summary.worst_gap is not None and summary.worst_gap > -1e-9


def test_regular_families() -> None:
    names = [name for name, _ in regular_families(4)]
    assert names == ["C3", "C4", "K1", "K2", "K3", "K4", "E1", "E2", "E3", "E4", "Q1", "Q2"]
    assert all(graph.is_regular() for _, graph in regular_families(8))


def test_join_sweep() -> None:
    summary = sweep_joins(max_order=4)
    assert summary.instances == 78
    assert summary.equality_counts["formula"] == 78
    assert summary.passed


def test_worker_count_does_not_change_the_summary() -> None:
    assert sweep_bounds(max_n=4, workers=2) == sweep_bounds(max_n=4)
    assert sweep_joins(max_order=5, workers=2) == sweep_joins(max_order=5)


@pytest.mark.slow
def test_bounds_sweep_up_to_six_vertices() -> None:
    summary = sweep_bounds(max_n=6, workers=4)
    assert summary.instances == 4 * 3 + 38 * 13 + 728 * 50 + 26704 * 201
    assert summary.passed


@pytest.mark.slow
def test_acceptance_sized_random_sweeps() -> None:
    assert sweep_haemers(count=1000, max_n=12, workers=4).passed
    assert sweep_singular(count=500, max_dim=10, workers=4).passed
    assert sweep_blow_ups(max_k=4, max_size=3, workers=4).passed
    assert sweep_joins(max_order=8, workers=4).passed
