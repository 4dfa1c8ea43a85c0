"""Local and collective SU(2)/SU(d) generators, rotations and permutations"""

from darkstates.operators.ladders import (
    CollectiveOperator,
    Ladder,
    LocalOperator,
    adjacent_ladders,
    all_sud_ladders,
    collective,
    spin_components,
    spin_j0,
    spin_ladder,
    sud_ladder,
)
from darkstates.operators.rotations import (
    flip_operator,
    level_swap,
    random_su2_parameters,
    sample_unitary,
    su2_rotation,
)

__all__ = [
    "CollectiveOperator",
    "Ladder",
    "LocalOperator",
    "adjacent_ladders",
    "all_sud_ladders",
    "collective",
    "spin_components",
    "spin_j0",
    "spin_ladder",
    "sud_ladder",
    "flip_operator",
    "level_swap",
    "random_su2_parameters",
    "sample_unitary",
    "su2_rotation",
]
