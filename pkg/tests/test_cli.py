import json
from pathlib import Path
from typing import Any, List

import pytest
import yaml
from pytest_mock import MockerFixture

from app.interlace.cli import EXIT_AUDIT_FAILED, EXIT_INPUT_ERROR, EXIT_OK, run
from app.schema.audit import AuditVerdict
from app.schema.common import Check


def _run_json(capsys: pytest.CaptureFixture[str], argv: List[str], status: int = EXIT_OK) -> Any:
    assert run(argv) == status
    return json.loads(capsys.readouterr().out)


def test_spectrum(capsys: pytest.CaptureFixture[str], fixtures: Path) -> None:
    report = _run_json(capsys, ["spectrum", "--matrix", str(fixtures / "k2.mat")])
    assert report["kind"] == "eigenvalues"
    assert report["values"] == [1.0, -1.0]


def test_laplacian_spectrum(capsys: pytest.CaptureFixture[str], fixtures: Path) -> None:
    report = _run_json(capsys, ["spectrum", "--graph", str(fixtures / "c4.el"), "--laplacian"])
    assert report["source"] == "laplacian"
    assert report["values"] == pytest.approx([4.0, 2.0, 2.0, 0.0], abs=1e-9)


def test_rectangular_quotient(capsys: pytest.CaptureFixture[str], fixtures: Path) -> None:
    report = _run_json(
        capsys,
        [
            "quotient",
            "--matrix",
            str(fixtures / "ones23.mat"),
            "--partition",
            str(fixtures / "rows2.part"),
            "--col-partition",
            str(fixtures / "cols3.part"),
        ],
    )
    assert report["matrix"] == [[2.44948974278]]
    assert report["values"] == [2.44948974278]
    assert report["equitable"] is True


def test_quotient_reports_the_irregular_block(capsys: pytest.CaptureFixture[str], fixtures: Path) -> None:
    report = _run_json(
        capsys, ["quotient", "--graph", str(fixtures / "p3.el"), "--partition", str(fixtures / "p.part")]
    )
    assert report["equitable"] is False
    assert report["irregular_block"] == [1, 2]


def test_interlace_from_spectra(capsys: pytest.CaptureFixture[str]) -> None:
    report = _run_json(capsys, ["interlace", "--alpha", "2,0,0,-2", "--beta", "2,-2"])
    assert report["tight_r_values"] == [1]
    assert [report["p_max"], report["q_max"]] == [1, 1]


def test_bounds(capsys: pytest.CaptureFixture[str], fixtures: Path) -> None:
    reports = _run_json(capsys, ["bounds", "--graph", str(fixtures / "k3.el"), "--partition", str(fixtures / "p.part")])
    assert [r["inequality"] for r in reports] == ["ineq4", "ineq3", "lapl1", "lapl2"]
    assert [r["equality"] for r in reports] == [True, True, True, False]


def test_audit_theorem3(capsys: pytest.CaptureFixture[str], fixtures: Path) -> None:
    report = _run_json(
        capsys,
        ["audit", "--theorem", "3", "--graph", str(fixtures / "c4.el"), "--partition", str(fixtures / "bip.part")],
    )
    assert report["passed"] is True
    assert report["verdicts"][0]["witness"]["mu1_quotient"] == 2.0


def test_audit_theorem5(capsys: pytest.CaptureFixture[str], fixtures: Path) -> None:
    report = _run_json(
        capsys,
        ["audit", "--theorem", "5", "--graph", str(fixtures / "k4e.el"), "--partition", str(fixtures / "k4e.part")],
    )
    assert report["verdicts"][0]["witness"]["first_irregular_diagonal_block"] == 1


def test_audit_theorem4(capsys: pytest.CaptureFixture[str], fixtures: Path) -> None:
    report = _run_json(
        capsys,
        [
            "audit",
            "--theorem",
            "4",
            "--matrix",
            str(fixtures / "ones23.mat"),
            "--partition",
            str(fixtures / "rows2.part"),
            "--col-partition",
            str(fixtures / "cols3.part"),
        ],
    )
    assert [v["case"] for v in report["verdicts"]] == ["inequality", "equality"]


def test_audit_join(capsys: pytest.CaptureFixture[str], fixtures: Path) -> None:
    report = _run_json(
        capsys, ["audit", "--theorem", "join", "--graph", str(fixtures / "c4.el"), "--graph", str(fixtures / "k2.el")]
    )
    assert report["verdicts"][0]["witness"]["mu1_formula"] == 4.37228132327


def test_failed_audit_exits_with_one(
    capsys: pytest.CaptureFixture[str], fixtures: Path, mocker: MockerFixture
) -> None:
    failing = AuditVerdict(
        theorem="3",
        hypotheses_hold=True,
        conclusion=[Check(name="mu_1(A) = mu_1(A|PxP)", holds=False)],
        conclusion_holds=False,
        tolerance=1e-8,
    )
    mocker.patch("app.interlace.cli.audit_theorem3", return_value=failing)
    report = _run_json(
        capsys,
        ["audit", "--theorem", "3", "--graph", str(fixtures / "c4.el"), "--partition", str(fixtures / "bip.part")],
        EXIT_AUDIT_FAILED,
    )
    assert report["passed"] is False


def test_refine(capsys: pytest.CaptureFixture[str], fixtures: Path) -> None:
    report = _run_json(capsys, ["refine", "--graph", str(fixtures / "k4e.el")])
    assert report == {
        "seed": [[1, 2, 3, 4]],
        "partition": [[1, 3], [2, 4]],
        "classification": "equitable",
        "rounds": 1,
    }


def test_list_equitable_partitions(capsys: pytest.CaptureFixture[str], fixtures: Path) -> None:
    report = _run_json(capsys, ["refine", "--graph", str(fixtures / "c4.el"), "--max-k", "2"])
    assert len(report["partitions"]) == 4
    assert report["candidates_examined"] == 8


def test_search(capsys: pytest.CaptureFixture[str], fixtures: Path) -> None:
    report = _run_json(capsys, ["search", "--graph", str(fixtures / "c4.el"), "--k", "2", "--bound", "lapl2"])
    assert report["best_partition"] == [[1, 3], [2, 4]]
    assert report["objective"] == 4.0


def test_join_mu1(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["join-mu1", "--r1", "2", "--n1", "4", "--r2", "1", "--n2", "2"]) == EXIT_OK
    assert '"mu1": 4.37228132327' in capsys.readouterr().out


def test_join_mu1_for_several_constituents(capsys: pytest.CaptureFixture[str]) -> None:
    report = _run_json(capsys, ["join-mu1", "--degrees", "2,1,0", "--orders", "4,2,1"])
    assert report["orders"] == [4, 2, 1]
    assert report["mu1"] > 4.37228132327


def test_sweep(capsys: pytest.CaptureFixture[str]) -> None:
    report = _run_json(capsys, ["sweep", "--kind", "joins", "--max-n", "4"])
    assert report["instances"] == 78
    assert report["counterexamples"] == []


def test_text_format(capsys: pytest.CaptureFixture[str], fixtures: Path) -> None:
    assert run(["spectrum", "--graph", str(fixtures / "c4.el"), "--format", "text"]) == EXIT_OK
    report = yaml.safe_load(capsys.readouterr().out)
    assert report["values"] == pytest.approx([2.0, 0.0, 0.0, -2.0], abs=1e-9)


def test_output_is_deterministic(capsys: pytest.CaptureFixture[str], fixtures: Path) -> None:
    argv = ["bounds", "--graph", str(fixtures / "k4e.el"), "--partition", str(fixtures / "k4e.part")]
    outputs = []
    for _ in range(3):
        assert run(argv) == EXIT_OK
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1] == outputs[2]


def test_out_file(capsys: pytest.CaptureFixture[str], fixtures: Path, tmp_path: Path) -> None:
    target = tmp_path / "report.json"
    assert run(["spectrum", "--graph", str(fixtures / "k3.el"), "--out", str(target)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["values"] == [2.0, -1.0, -1.0]


def test_parse_error_exits_with_two(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    broken = tmp_path / "loop.el"
    broken.write_text("3 1\n2 2\n")
    assert run(["spectrum", "--graph", str(broken)]) == EXIT_INPUT_ERROR
    captured = capsys.readouterr()
    assert captured.out == ""
    assert f"error: {broken}:2: Self-loop at vertex 2" in captured.err


@pytest.mark.parametrize(
    "argv, message",
    [
        (["bounds", "--graph", "{fixtures}/k3.el"], "needs --partition"),
        (["spectrum"], "needs --graph"),
        (["interlace", "--alpha", "1,0"], "must be given together"),
        (["join-mu1", "--r1", "2"], "join-mu1 needs"),
        (["join-mu1", "--degrees", "2.5,1", "--orders", "4,2"], "--degrees takes integers, got 2.5"),
        (["join-mu1", "--degrees", "2,1", "--orders", "4,2.0,3.5"], "--orders takes integers, got 3.5"),
        (["bounds", "--graph", "{fixtures}/c4.el", "--partition", "{fixtures}/p.part"], "missing [4]"),
    ],
)
def test_input_errors(capsys: pytest.CaptureFixture[str], fixtures: Path, argv: List[str], message: str) -> None:
    assert run([arg.format(fixtures=fixtures) for arg in argv]) == EXIT_INPUT_ERROR
    assert message in capsys.readouterr().err


def test_invalid_tolerance(capsys: pytest.CaptureFixture[str], fixtures: Path) -> None:
    assert run(["spectrum", "--graph", str(fixtures / "k3.el"), "--tol", "1e-12"]) == EXIT_INPUT_ERROR
    assert "invalid settings" in capsys.readouterr().err


def test_missing_command(capsys: pytest.CaptureFixture[str]) -> None:
    assert run([]) == EXIT_INPUT_ERROR


def test_audit_theorem3_on_a_path(capsys: pytest.CaptureFixture[str], fixtures: Path) -> None:
    report = _run_json(
        capsys,
        ["audit", "--theorem", "3", "--graph", str(fixtures / "p3.el"), "--partition", str(fixtures / "p3.part")],
    )
    assert report["passed"] is True
    assert report["verdicts"][0]["witness"]["mu1_quotient"] == 1.41421356237


def test_refine_a_star(capsys: pytest.CaptureFixture[str], fixtures: Path) -> None:
    report = _run_json(capsys, ["refine", "--graph", str(fixtures / "star.el")])
    assert report["partition"] == [[1], [2, 3, 4]]
