"""Null-space solvers for dark and semi-dark subspaces, with combinatorial oracles"""

from darkstates.solver.audit import conjecture_check, dimension_table, qudit_feasibility
from darkstates.solver.oracle import (
    dark_dimension_oracle,
    hook_length_count,
    label_sum_counts,
    semidark_dimension_oracle,
)
from darkstates.solver.subspace import (
    dark_basis,
    family_operators,
    full_ladder_basis,
    semidark_basis,
    su2_multiplet_census,
)

__all__ = [
    "conjecture_check",
    "dimension_table",
    "qudit_feasibility",
    "dark_dimension_oracle",
    "hook_length_count",
    "label_sum_counts",
    "semidark_dimension_oracle",
    "dark_basis",
    "family_operators",
    "full_ladder_basis",
    "semidark_basis",
    "su2_multiplet_census",
]
