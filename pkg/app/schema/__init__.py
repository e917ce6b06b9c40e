from .audit import (
    AuditReport,
    AuditVerdict,
    BoundReport,
    Counterexample,
    JoinReport,
    SweepKind,
    SweepSummary,
    TheoremId,
)
from .common import BlockList, BoundKind, Check, MatrixSource, Term, Tolerance
from .search import EquitableListing, RefinementReport, SearchResult
from .spectral import InterlacingReport, QuotientReport, SpectrumReport

__all__ = [
    # common
    "BlockList",
    "BoundKind",
    "MatrixSource",
    "Tolerance",
    "Term",
    "Check",
    # spectral
    "SpectrumReport",
    "QuotientReport",
    "InterlacingReport",
    # audit
    "TheoremId",
    "SweepKind",
    "BoundReport",
    "AuditVerdict",
    "AuditReport",
    "Counterexample",
    "SweepSummary",
    "JoinReport",
    # search
    "SearchResult",
    "RefinementReport",
    "EquitableListing",
]
