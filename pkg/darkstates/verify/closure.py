"""
Closure checks: superpositions of dark states and collapse onto a dark state
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np
import structlog

from darkstates.core.errors import PreconditionError, ShapeMismatchError
from darkstates.core.types import CollapseOutcome, CollapseVerdict, StateVector, Verdict
from darkstates.hilbert.states import collapse
from darkstates.linalg.kernel import DEFAULT_TOL, make_rng
from darkstates.verify.invariance import DEFAULT_TRIALS, is_dark_random

logger = structlog.get_logger(__name__)


def _require_dark(
    psi: StateVector, name: str, trials: int, tol: float, rng: np.random.Generator
) -> None:
    verdict = is_dark_random(psi, trials=trials, tol=tol, rng=rng)
    if not verdict.passed:
        raise PreconditionError(
            f"{name} is not dark (deviation {verdict.max_deviation:.3g} > {tol:.3g})"
        )


def superposition_closure_check(
    psi: StateVector,
    phi: StateVector,
    coefficients: Sequence[complex] = (1.0, 1.0),
    trials: int = DEFAULT_TRIALS,
    tol: float = DEFAULT_TOL,
    rng: Optional[np.random.Generator] = None,
    seed: Optional[int] = None,
) -> Verdict:
    """
    Normalize a1*psi + a2*phi and test it for darkness.

    Both inputs must be dark themselves; a vanishing superposition raises
    PreconditionError.
    """
    if (psi.d, psi.n) != (phi.d, phi.n):
        raise ShapeMismatchError(f"States live on (d={psi.d}, N={psi.n}) and (d={phi.d}, N={phi.n})")
    if len(coefficients) != 2:
        raise PreconditionError(f"Expected two coefficients, got {len(coefficients)}")
    rng, seed = make_rng(rng, seed)
    _require_dark(psi, "First state", trials, tol, rng)
    _require_dark(phi, "Second state", trials, tol, rng)

    a1, a2 = (complex(c) for c in coefficients)
    combined = psi.with_amplitudes(a1 * psi.amplitudes + a2 * phi.amplitudes)
    if combined.norm() <= tol:
        raise PreconditionError("The superposition vanishes")
    verdict = is_dark_random(combined.normalized(), trials=trials, tol=tol, rng=rng)
    return verdict.model_copy(update={"seed": seed})


def collapse_darkness_check(
    psi_n: StateVector,
    phi_m: StateVector,
    parties: Sequence[int],
    trials: int = DEFAULT_TRIALS,
    tol: float = DEFAULT_TOL,
    rng: Optional[np.random.Generator] = None,
    seed: Optional[int] = None,
) -> CollapseVerdict:
    """
    Collapse a dark N-party state onto a dark M-party state and test the remnant.

    A remnant of norm <= ``tol`` is reported as VACUOUS rather than as a
    failure: the statement being checked presumes a nonzero outcome.
    """
    rng, seed = make_rng(rng, seed)
    _require_dark(psi_n, "The N-party state", trials, tol, rng)
    _require_dark(phi_m, "The M-party state", trials, tol, rng)

    remnant = collapse(psi_n, phi_m, parties)
    norm = remnant.norm()
    if norm <= tol:
        logger.info("collapse_checked", outcome=CollapseOutcome.VACUOUS.value, remnant_norm=norm)
        return CollapseVerdict(remnant_norm=norm, outcome=CollapseOutcome.VACUOUS, remnant=remnant)

    verdict = is_dark_random(remnant.normalized(), trials=trials, tol=tol, rng=rng)
    verdict = verdict.model_copy(update={"seed": seed})
    outcome = CollapseOutcome.DARK if verdict.passed else CollapseOutcome.NOT_DARK
    logger.info("collapse_checked", outcome=outcome.value, remnant_norm=norm, seed=seed)
    return CollapseVerdict(remnant_norm=norm, outcome=outcome, verdict=verdict, remnant=remnant)
