from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, Field

from .audit import BoundReport
from .common import BlockList, BoundKind


class SearchResult(BaseModel):
    inequality: BoundKind
    k: int = Field(..., ge=2)
    best_partition: BlockList
    objective: float
    candidates_examined: int = Field(..., ge=0)
    exhaustive: bool
    report: Optional[BoundReport] = None


class RefinementReport(BaseModel):
    seed: BlockList
    partition: BlockList
    classification: str
    rounds: int = Field(0, ge=0)


class EquitableListing(BaseModel):
    max_k: int = Field(..., ge=1)
    partitions: List[BlockList] = Field(default_factory=list[BlockList])
    candidates_examined: int = Field(0, ge=0)
