from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from .common import BlockList, BoundKind, Check, Term

TheoremId = Literal["1", "2", "3", "4", "5", "c1", "H", "join"]

SweepKind = Literal["bounds", "haemers", "blow-ups", "singular", "joins"]


class BoundReport(BaseModel):
    inequality: BoundKind
    orientation: Literal[">=", "<="] = Field(..., description="lhs (eigenvalue side) versus rhs (partition side)")
    lhs: float
    rhs: float
    gap: float = Field(..., description="slack of the inequality; negative only on violation")
    equality: bool
    partition: BlockList
    lhs_terms: List[Term] = Field(default_factory=list[Term])
    rhs_terms: List[Term] = Field(default_factory=list[Term])
    tolerance: float = Field(..., gt=0.0)


class AuditVerdict(BaseModel):
    theorem: TheoremId
    case: Optional[str] = None
    hypotheses: List[Check] = Field(default_factory=list[Check])
    hypotheses_hold: bool
    conclusion: List[Check] = Field(default_factory=list[Check])
    conclusion_holds: Optional[bool] = Field(None, description="null when the hypotheses fail")
    observations: List[Check] = Field(default_factory=list[Check])
    witness: Dict[str, Any] = Field(default_factory=dict)
    flags: List[str] = Field(default_factory=list[str])
    tolerance: float = Field(..., gt=0.0)

    @property
    def counterexample(self) -> bool:
        return self.hypotheses_hold and self.conclusion_holds is False


class AuditReport(BaseModel):
    theorem: TheoremId
    verdicts: List[AuditVerdict]
    passed: bool


class Counterexample(BaseModel):
    instance: str
    theorem: str
    detail: str
    witness: Dict[str, Any] = Field(default_factory=dict)


class SweepSummary(BaseModel):
    kind: SweepKind
    instances: int = 0
    checks: int = 0
    equality_counts: Dict[str, int] = Field(default_factory=dict)
    counterexamples: List[Counterexample] = Field(default_factory=list[Counterexample])
    worst_gap: Optional[float] = None
    parameters: Dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


class JoinReport(BaseModel):
    degrees: List[int]
    orders: List[int]
    mu1: float
