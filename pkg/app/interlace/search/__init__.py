from .optimize import maximize_bound, partition_objective
from .refinement import equitable_refinement, find_equitable_partitions, refine

__all__ = [
    "equitable_refinement",
    "find_equitable_partitions",
    "maximize_bound",
    "partition_objective",
    "refine",
]
