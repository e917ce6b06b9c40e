from .eigen import check_symmetric, eigenvalues, normalize_signs, symmetric_eigen
from .irreducible import is_irreducible, is_nonnegative, require_nonnegative
from .singular import hermitian_embedding, largest_singular_value, singular_values

__all__ = [
    "symmetric_eigen",
    "eigenvalues",
    "check_symmetric",
    "normalize_signs",
    "singular_values",
    "largest_singular_value",
    "hermitian_embedding",
    "is_irreducible",
    "is_nonnegative",
    "require_nonnegative",
]
