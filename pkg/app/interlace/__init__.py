"""
Exact interlacing toolkit.

Quotient matrices of graphs and nonnegative symmetric matrices, classification
of eigenvalue interlacing as tight or exact, and audits of the equality
statements for partition bounds on extreme eigenvalues.
"""

from .exceptions import ComputationException, InputException, InterlaceException
from .utils.logging import setup_interlace_logger

__version__ = "0.1.0"
__all__ = ["ComputationException", "InputException", "InterlaceException", "setup_interlace_logger"]
