"""Algebraic and randomized darkness certificates"""

from darkstates.verify.invariance import (
    annihilation_residuals,
    density_invariance,
    invariance_verdict,
    is_dark_random,
    is_semidark_random,
    mixture_invariance,
)
from darkstates.verify.closure import collapse_darkness_check, superposition_closure_check

__all__ = [
    "annihilation_residuals",
    "density_invariance",
    "invariance_verdict",
    "is_dark_random",
    "is_semidark_random",
    "mixture_invariance",
    "collapse_darkness_check",
    "superposition_closure_check",
]
