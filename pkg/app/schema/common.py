from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, Field

# Partitions travel as lists of 1-based blocks, e.g. [[1, 3], [2, 4]].
BlockList = List[List[int]]

BoundKind = Literal["ineq4", "ineq3", "lapl1", "lapl2"]

MatrixSource = Literal["adjacency", "laplacian", "matrix"]


class Tolerance(BaseModel):
    eigen_tol: float = Field(..., gt=0.0)
    eq_tol: float = Field(..., gt=0.0)


class Term(BaseModel):
    label: str
    value: float


class Check(BaseModel):
    name: str
    holds: bool
    detail: Optional[str] = None
