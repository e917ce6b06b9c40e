"""
Core types for the interlacing toolkit.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Sequence, TypeAlias

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..exceptions import MatrixShapeError, NonFiniteEntryError

DenseMatrix: TypeAlias = NDArray[np.float64]
Vector: TypeAlias = NDArray[np.float64]


class BoundId(str, Enum):
    """The four partition bounds on sums of extreme eigenvalues"""

    INEQ4 = "ineq4"
    INEQ3 = "ineq3"
    LAPL1 = "lapl1"
    LAPL2 = "lapl2"


class PartitionClass(str, Enum):
    """Classification of a vertex partition with respect to a graph"""

    EQUITABLE = "equitable"
    SEMIEQUITABLE_ONLY = "semiequitable-only"
    NEITHER = "neither"


class TolerancePolicy(BaseModel):
    """Shared tolerance policy; both thresholds are relative to max(1, ||M||_inf)"""

    model_config = ConfigDict(frozen=True)

    eigen_tol: float = Field(1e-10, gt=0.0)
    eq_tol: float = Field(1e-8, gt=0.0)
    jacobi_offdiag_tol: float = Field(1e-12, gt=0.0)
    max_sweeps: int = Field(100, ge=1)

    @model_validator(mode="after")
    def validate_ordering(self) -> "TolerancePolicy":
        if self.eq_tol < self.eigen_tol:
            raise ValueError(f"eq_tol ({self.eq_tol}) must be >= eigen_tol ({self.eigen_tol})")
        return self

    def scaled(self, tol: float, *magnitudes: float) -> float:
        """Scale ``tol`` by max(1, |m| for m in magnitudes)."""
        return tol * max([1.0, *(abs(m) for m in magnitudes)])

    def equal(self, a: float, b: float, scale: float = 1.0) -> bool:
        return abs(a - b) <= self.eq_tol * max(1.0, abs(scale))


DEFAULT_POLICY = TolerancePolicy()


def as_dense(data: Any, *, square: bool = False) -> DenseMatrix:
    """
    Validate and freeze a real dense matrix.

    Args:
        data: Array-like of reals (nested sequences or ndarray)
        square: Require rows == cols

    Returns:
        Read-only float64 copy of ``data``

    Raises:
        MatrixShapeError: If data is not a nonempty 2-D array (or not square when required)
        NonFiniteEntryError: If any entry is NaN or infinite
    """
    try:
        matrix = np.array(data, dtype=np.float64, copy=True)
    except (TypeError, ValueError) as e:
        raise MatrixShapeError(f"Cannot interpret input as a real matrix: {e}") from e

    if matrix.ndim != 2 or matrix.shape[0] == 0 or matrix.shape[1] == 0:
        raise MatrixShapeError(f"Expected a nonempty 2-D matrix, got shape {matrix.shape}")
    if square and matrix.shape[0] != matrix.shape[1]:
        raise MatrixShapeError(f"Expected a square matrix, got {matrix.shape[0]}x{matrix.shape[1]}")
    if not np.all(np.isfinite(matrix)):
        raise NonFiniteEntryError("Matrix contains NaN or infinite entries")

    matrix.setflags(write=False)
    return matrix


def as_vector(data: Sequence[float] | Vector) -> Vector:
    vector = np.array(data, dtype=np.float64, copy=True).reshape(-1)
    if not np.all(np.isfinite(vector)):
        raise NonFiniteEntryError("Vector contains NaN or infinite entries")
    vector.setflags(write=False)
    return vector


def inf_norm(matrix: DenseMatrix) -> float:
    """Maximum absolute row sum."""
    return float(np.max(np.sum(np.abs(matrix), axis=1)))


def is_integral(matrix: DenseMatrix) -> bool:
    return bool(np.all(matrix == np.round(matrix)))


@dataclass(frozen=True)
class Spectrum:
    """
    Descending eigenvalues with paired orthonormal eigenvectors.

    ``vectors[:, i]`` belongs to ``values[i]``; the entry of largest magnitude in
    each column is positive.
    """

    values: Vector
    vectors: DenseMatrix

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    def mu(self, i: int) -> float:
        """mu_i, 1-based, descending."""
        return float(self.values[i - 1])

    def laplacian_lambda(self, i: int) -> float:
        """lambda_i, 1-based, ascending: lambda_i = values[n - i + 1]."""
        return float(self.values[self.n - i])
