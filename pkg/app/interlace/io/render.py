"""
Report rendering.

Both formats start from the same rounded payload: every float is cut to the
configured number of significant digits and negative zero becomes zero, so
JSON and text output carry identical numbers and repeated runs are
byte-identical.
"""

from __future__ import annotations

import json
from typing import Any, Literal, Sequence, Union

import yaml
from pydantic import BaseModel

OutputFormat = Literal["text", "json"]

Renderable = Union[BaseModel, Sequence[BaseModel]]


def round_significant(value: float, digits: int = 12) -> float:
    rounded = float(f"{value:.{digits}g}")
    return 0.0 if rounded == 0.0 else rounded


def _round_tree(data: Any, digits: int) -> Any:
    if isinstance(data, bool) or data is None:
        return data
    if isinstance(data, float):
        return round_significant(data, digits)
    if isinstance(data, dict):
        return {key: _round_tree(value, digits) for key, value in data.items()}  # type: ignore[misc]
    if isinstance(data, (list, tuple)):
        return [_round_tree(item, digits) for item in data]  # type: ignore[misc]
    return data


def report_payload(report: Renderable, digits: int = 12) -> Any:
    """JSON-compatible tree of one report or a list of reports, rounded."""
    if isinstance(report, BaseModel):
        return _round_tree(report.model_dump(mode="json"), digits)
    return [_round_tree(item.model_dump(mode="json"), digits) for item in report]


def render(report: Renderable, fmt: OutputFormat = "json", digits: int = 12) -> str:
    payload = report_payload(report, digits)
    if fmt == "json":
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    return yaml.safe_dump(payload, sort_keys=False, allow_unicode=True, default_flow_style=None, width=120)
