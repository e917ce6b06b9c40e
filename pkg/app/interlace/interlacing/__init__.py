from .classify import check_interlacing, classify_exact, classify_tight, interlacing_report, quotient_interlacing

__all__ = [
    "check_interlacing",
    "classify_tight",
    "classify_exact",
    "interlacing_report",
    "quotient_interlacing",
]
