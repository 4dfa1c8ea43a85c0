"""
darkstates - multipartite dark and semi-dark quantum states

Construct, solve for and verify states of N d-level systems that are
invariant under collective SU(d) or SU(2) transformations, and simulate a
decoherence-free qubit under collective noise.
"""

__version__ = "0.1.0"

from darkstates.core.config import Config
from darkstates.core.errors import DarkStatesError
from darkstates.core.types import (
    BasisState,
    DarkSubspace,
    DensityMatrix,
    StateVector,
    Verdict,
)

__all__ = [
    "__version__",
    "Config",
    "DarkStatesError",
    "BasisState",
    "DarkSubspace",
    "DensityMatrix",
    "StateVector",
    "Verdict",
]
