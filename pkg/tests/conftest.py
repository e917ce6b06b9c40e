from pathlib import Path
from typing import Iterator

import pytest

from app.interlace.config.settings import reset_settings_cache
from app.interlace.core.types import TolerancePolicy
from app.interlace.graph.generators import complete_graph, cycle_graph, path_graph
from app.interlace.graph.model import Graph
from app.interlace.partition.model import Partition

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def test_environment(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    monkeypatch.setenv("INTERLACE_ENVIRONMENT", "test")
    reset_settings_cache()
    yield
    reset_settings_cache()


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


@pytest.fixture
def policy() -> TolerancePolicy:
    return TolerancePolicy()


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture
def k4_minus_edge() -> Graph:
    """K4 without the edge {1,3}."""
    return Graph.from_edges(4, [(1, 2), (1, 4), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def bipartition() -> Partition:
    return Partition.from_one_based(4, [[1, 3], [2, 4]])
