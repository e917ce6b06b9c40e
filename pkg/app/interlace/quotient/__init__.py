from .quotient import (
    QuotientMatrix,
    block_size_vector,
    embedded_quotient_identity_gap,
    embedding_partition,
    graph_quotient,
    lift_vector,
    quotient_matrix,
    square_quotient,
)

__all__ = [
    "QuotientMatrix",
    "quotient_matrix",
    "square_quotient",
    "graph_quotient",
    "lift_vector",
    "block_size_vector",
    "embedding_partition",
    "embedded_quotient_identity_gap",
]
