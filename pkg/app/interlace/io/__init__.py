from .parsers import (
    format_edge_list,
    parse_edge_list,
    parse_inputs,
    parse_matrix_text,
    parse_spectrum_text,
)
from .render import render, report_payload, round_significant

__all__ = [
    "format_edge_list",
    "parse_edge_list",
    "parse_inputs",
    "parse_matrix_text",
    "parse_spectrum_text",
    "render",
    "report_payload",
    "round_significant",
]
