"""
Custom exceptions for the interlacing toolkit.
"""

from typing import Optional


class InterlaceException(Exception):
    """Base exception for all interlacing-toolkit errors."""

    pass


class InputException(InterlaceException):
    """Exception raised for invalid caller input; the CLI maps it to exit status 2."""

    pass


class ComputationException(InterlaceException):
    """Exception raised when a numerical procedure cannot produce a result."""

    pass


class MatrixShapeError(InputException):
    """Matrix is not two-dimensional, empty, or not square where required."""

    pass


class NonFiniteEntryError(InputException):
    """Matrix or vector contains NaN or infinity."""

    pass


class AsymmetryError(InputException):
    """Matrix deviates from its transpose beyond tolerance."""

    def __init__(self, message: str, deviation: float):
        super().__init__(message)
        self.deviation = deviation


class NegativeEntryError(InputException):
    """Matrix has a negative entry where a nonnegative matrix is required."""

    pass


class DimensionMismatchError(InputException):
    """Partitions or vectors do not match the matrix dimensions."""

    pass


class UnsortedSpectrumError(InputException):
    """Eigenvalue list is not in descending order."""

    pass


class PartitionError(InputException):
    """Partition blocks are empty, overlapping, or do not cover the ground set."""

    pass


class GraphError(InputException):
    """Graph has self-loops, duplicate edges, or out-of-range vertices."""

    pass


class EnumerationCapError(InputException):
    """Exhaustive enumeration requested above the configured cap without override."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"Enumeration over n={n} exceeds cap {cap}; pass an explicit override to proceed")
        self.n = n
        self.cap = cap


class UsageError(InputException):
    """Missing or conflicting command-line inputs."""

    pass


class ParseError(InputException):
    """Input file is malformed."""

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        location = ""
        if path is not None:
            location = f"{path}:{line}: " if line is not None else f"{path}: "
        elif line is not None:
            location = f"line {line}: "
        super().__init__(f"{location}{message}")
        self.path = path
        self.line = line


class ConvergenceError(ComputationException):
    """Jacobi iteration did not reach the off-diagonal threshold within the sweep cap."""

    def __init__(self, sweeps: int, off_norm: float):
        super().__init__(f"Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:.3e})")
        self.sweeps = sweeps
        self.off_norm = off_norm


class InterlacingPreconditionError(ComputationException):
    """Tightness or exactness requested for spectra that are not interlaced."""

    pass
