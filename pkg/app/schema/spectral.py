from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from .common import BlockList, MatrixSource, Tolerance


class SpectrumReport(BaseModel):
    kind: Literal["eigenvalues", "singular_values"]
    source: MatrixSource
    rows: int = Field(..., ge=1)
    cols: int = Field(..., ge=1)
    values: List[float]
    tolerance: Tolerance


class QuotientReport(BaseModel):
    source: MatrixSource
    row_partition: BlockList
    col_partition: BlockList
    matrix: List[List[float]]
    equitable: bool
    values: List[float] = Field(default_factory=list[float], description="eigenvalues when P = Q, else singular values")
    irregular_block: Optional[List[int]] = None
    tolerance: Tolerance


class InterlacingReport(BaseModel):
    n: int = Field(..., ge=1)
    k: int = Field(..., ge=1)
    holds: bool
    tight_r_values: List[int] = Field(default_factory=list[int])
    tight: bool = False
    p_max: int = Field(0, ge=0)
    q_max: int = Field(0, ge=0)
    exact: bool = False
    degenerate: bool = False
    alpha: List[float]
    beta: List[float]
    tolerance: float = Field(..., gt=0.0)
