import json
from pathlib import Path

import numpy as np
import pytest
import yaml

from app.interlace.audit.bounds import evaluate_bound
from app.interlace.core.types import BoundId
from app.interlace.exceptions import ParseError
from app.interlace.graph.model import Graph
from app.interlace.io.parsers import (
    format_edge_list,
    parse_edge_list,
    parse_inputs,
    parse_matrix_text,
    parse_spectrum_text,
)
from app.interlace.io.render import render, report_payload, round_significant
from app.interlace.partition.model import Partition
from app.schema.common import Term


def test_edge_list_fixture(fixtures: Path, k4_minus_edge: Graph) -> None:
    graph = parse_inputs(fixtures / "k4e.el", "graph")
    assert graph == k4_minus_edge
    assert format_edge_list(graph) == (fixtures / "k4e.el").read_text()


def test_edge_list_ignores_blank_lines() -> None:
    graph = parse_edge_list("\n3 2\n\n2 1\n3 2\n")
    assert graph.one_based_edges() == [(1, 2), (2, 3)]


@pytest.mark.parametrize(
    "text, message",
    [
        ("", "g.el: Missing header line 'n m'"),
        ("3\n", "g.el:1: Header must be 'n m', got '3'"),
        ("3 1\n1 1\n", "g.el:2: Self-loop at vertex 1"),
        ("3 1\n1 4\n", "g.el:2: Vertex 4 outside 1..3"),
        ("3 1\n1 b\n", "g.el:2: Non-integer vertex in edge '1 b'"),
        ("3 2\n1 2\n\n2 1\n", "g.el:4: Duplicate edge {1,2} (first on line 2)"),
        ("3 2\n1 2\n", "g.el: Header declares 2 edges but 1 were given"),
    ],
)
def test_edge_list_errors(text: str, message: str) -> None:
    with pytest.raises(ParseError) as excinfo:
        parse_edge_list(text, "g.el")
    assert str(excinfo.value) == message


def test_matrix_fixture(fixtures: Path) -> None:
    matrix = parse_inputs(fixtures / "ones23.mat", "matrix")
    assert matrix.shape == (2, 3)
    assert np.all(matrix == 1.0)


@pytest.mark.parametrize(
    "text, line",
    [
        ("2 2\n1 2\n3\n", 3),
        ("1 1\nnan\n", 2),
        ("1 2\n1 x\n", 2),
        ("1 1\n1\n2\n", 3),
        ("2 x\n", 1),
    ],
)
def test_matrix_errors_carry_line_numbers(text: str, line: int) -> None:
    with pytest.raises(ParseError) as excinfo:
        parse_matrix_text(text, "m.mat")
    assert excinfo.value.line == line
    assert excinfo.value.path == "m.mat"


def test_matrix_row_count_mismatch() -> None:
    with pytest.raises(ParseError, match="declares 2 rows but 1"):
        parse_matrix_text("2 1\n5\n")


def test_partition_fixture(fixtures: Path) -> None:
    partition = parse_inputs(fixtures / "bip.part", "partition", ground=4)
    assert partition == Partition.from_one_based(4, [[1, 3], [2, 4]])


def test_partition_must_cover_the_ground_set(fixtures: Path) -> None:
    with pytest.raises(ParseError):
        parse_inputs(fixtures / "p.part", "partition", ground=4)


def test_missing_file(tmp_path: Path) -> None:
    with pytest.raises(ParseError) as excinfo:
        parse_inputs(tmp_path / "absent.el", "graph")
    assert excinfo.value.path == str(tmp_path / "absent.el")


def test_spectrum_text() -> None:
    assert parse_spectrum_text("2,0, 0 -2") == [2.0, 0.0, 0.0, -2.0]
    with pytest.raises(ParseError):
        parse_spectrum_text(" , ")
    with pytest.raises(ParseError):
        parse_spectrum_text("1,inf")


def test_round_significant() -> None:
    assert round_significant(0.1 + 0.2) == 0.3
    assert round_significant(2.0000000000001) == 2.0
    assert str(round_significant(-0.0)) == "0.0"
    assert round_significant(1 / 3, 3) == 0.333


def test_payload_rounds_nested_values() -> None:
    payload = report_payload([Term(label="mu_1", value=-1e-17 + 1e-17), Term(label="x", value=1 / 3)], 4)
    assert payload == [{"label": "mu_1", "value": 0.0}, {"label": "x", "value": 0.3333}]


def test_json_and_text_carry_the_same_numbers(c4: Graph, bipartition: Partition) -> None:
    report = evaluate_bound(c4, bipartition, BoundId.INEQ3)
    as_json = json.loads(render(report, "json"))
    as_text = yaml.safe_load(render(report, "text"))
    assert as_json == as_text
    assert as_json["inequality"] == "ineq3"
    assert render(report, "json") == render(evaluate_bound(c4, bipartition, BoundId.INEQ3), "json")
