from .bounds import ORIENTATION, evaluate_all_bounds, evaluate_bound
from .finck_grohmann import finck_grohmann_mu1, join_mu1, join_quotient
from .sweeps import sweep_blow_ups, sweep_bounds, sweep_haemers, sweep_joins, sweep_singular
from .theorems import (
    audit_corollary1,
    audit_haemers,
    audit_join,
    audit_theorem1,
    audit_theorem2,
    audit_theorem3,
    audit_theorem4,
    audit_theorem5,
)

__all__ = [
    "ORIENTATION",
    "audit_corollary1",
    "audit_haemers",
    "audit_join",
    "audit_theorem1",
    "audit_theorem2",
    "audit_theorem3",
    "audit_theorem4",
    "audit_theorem5",
    "evaluate_all_bounds",
    "evaluate_bound",
    "finck_grohmann_mu1",
    "join_mu1",
    "join_quotient",
    "sweep_blow_ups",
    "sweep_bounds",
    "sweep_haemers",
    "sweep_joins",
    "sweep_singular",
]
