"""
Darkness certificates for pure and mixed states

Two independent routes: algebraic (annihilation residuals under collective
ladders) and randomized (invariance under sampled U^{(x)N}). Pure states are
compared up to a global phase, delta = 1 - |<psi|U^{(x)N}|psi>|, unless
``strict_phase`` asks for the eigenvalue-1 criterion |1 - <psi|U^{(x)N}|psi>|.
Under strict phase p_all_state(d) passes for SU(d) samples but not for U(d),
since it picks up det(U).

The semi-dark verifier samples rotations with a uniform axis and a uniform
angle in [0, 2pi). That family is continuously connected to the identity,
which is all the singlet equivalence needs; it is not Haar on SU(2).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, Sequence

import numpy as np
import structlog

from darkstates.construction.mixed import mixture
from darkstates.core.errors import PreconditionError
from darkstates.core.types import DensityMatrix, OperatorFamily, StateVector, SymmetryGroup, Verdict
from darkstates.hilbert.states import apply_local_product, conjugate_density
from darkstates.linalg.kernel import DEFAULT_TOL, make_rng
from darkstates.operators.ladders import DENSE_APPLY_LIMIT
from darkstates.operators.rotations import Su2Measure, sample_unitary
from darkstates.solver.subspace import family_operators

logger = structlog.get_logger(__name__)

DEFAULT_TRIALS = 50
INPUT_NORM_ATOL = 1e-8


def _require_normalized(psi: StateVector) -> None:
    if not psi.is_normalized(INPUT_NORM_ATOL):
        raise PreconditionError(f"Expected a normalized state, got norm {psi.norm():.6g}")


def annihilation_residuals(
    psi: StateVector,
    family: OperatorFamily = OperatorFamily.SUD,
    dense_apply_limit: int = DENSE_APPLY_LIMIT,
) -> float:
    """Largest ||L psi|| over the collective ladders L of ``family``"""
    _require_normalized(psi)
    operators = family_operators(family, psi.d, psi.n, dense_apply_limit)
    return max(float(np.linalg.norm(op.matvec(psi.amplitudes))) for op in operators)


def pure_deviation(psi: StateVector, u: np.ndarray, strict_phase: bool = False) -> float:
    overlap = np.vdot(psi.amplitudes, apply_local_product(u, psi).amplitudes)
    if strict_phase:
        return float(abs(1.0 - overlap))
    return max(0.0, 1.0 - float(abs(overlap)))


def density_deviation(rho: DensityMatrix, u: np.ndarray) -> float:
    return float(np.linalg.norm(conjugate_density(u, rho).matrix - rho.matrix))


def _run_trials(
    deviation: Callable[[np.ndarray], float],
    d: int,
    group: SymmetryGroup,
    trials: int,
    tol: float,
    rng: Optional[np.random.Generator],
    seed: Optional[int],
    max_workers: int,
    criterion: str,
    su2_measure: Su2Measure = "uniform",
) -> Verdict:
    if trials < 1:
        raise PreconditionError(f"Need at least one trial, got {trials}")
    rng, seed = make_rng(rng, seed)
    group = SymmetryGroup(group)

    # draws stay sequential so a seed fixes every unitary regardless of max_workers
    unitaries = [sample_unitary(group, d, rng, su2_measure) for _ in range(trials)]
    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            deviations = list(pool.map(deviation, unitaries))
    else:
        deviations = [deviation(u) for u in unitaries]

    worst = int(np.argmax(deviations))
    verdict = Verdict(
        passed=deviations[worst] <= tol,
        max_deviation=deviations[worst],
        deviations=deviations,
        trials=trials,
        tol=tol,
        worst_trial=worst,
        seed=seed,
        group=group,
        criterion=criterion,
    )
    logger.info(
        "invariance_checked",
        group=group.value,
        criterion=criterion,
        passed=verdict.passed,
        max_deviation=verdict.max_deviation,
        worst_trial=worst,
        seed=seed,
    )
    logger.debug("invariance_trials", deviations=deviations)
    return verdict


def invariance_verdict(
    psi: StateVector,
    group: SymmetryGroup,
    trials: int = DEFAULT_TRIALS,
    tol: float = DEFAULT_TOL,
    rng: Optional[np.random.Generator] = None,
    seed: Optional[int] = None,
    strict_phase: bool = False,
    max_workers: int = 1,
) -> Verdict:
    """Randomized U^{(x)N} invariance of a pure state under ``group``"""
    _require_normalized(psi)
    return _run_trials(
        lambda u: pure_deviation(psi, u, strict_phase),
        psi.d,
        group,
        trials,
        tol,
        rng,
        seed,
        max_workers,
        criterion="strict_phase" if strict_phase else "phase_insensitive",
    )


def is_dark_random(
    psi: StateVector,
    trials: int = DEFAULT_TRIALS,
    tol: float = DEFAULT_TOL,
    rng: Optional[np.random.Generator] = None,
    seed: Optional[int] = None,
    strict_phase: bool = False,
    max_workers: int = 1,
) -> Verdict:
    """Invariance under Haar-random SU(d) applied to every site"""
    return invariance_verdict(psi, SymmetryGroup.SUD, trials, tol, rng, seed, strict_phase, max_workers)


def is_semidark_random(
    psi: StateVector,
    trials: int = DEFAULT_TRIALS,
    tol: float = DEFAULT_TOL,
    rng: Optional[np.random.Generator] = None,
    seed: Optional[int] = None,
    strict_phase: bool = False,
    max_workers: int = 1,
) -> Verdict:
    """Invariance under random spin-(d-1)/2 rotations applied to every site"""
    return invariance_verdict(psi, SymmetryGroup.SU2, trials, tol, rng, seed, strict_phase, max_workers)


def density_invariance(
    rho: DensityMatrix,
    group: SymmetryGroup = SymmetryGroup.SUD,
    trials: int = DEFAULT_TRIALS,
    tol: float = DEFAULT_TOL,
    rng: Optional[np.random.Generator] = None,
    seed: Optional[int] = None,
    max_workers: int = 1,
) -> Verdict:
    """Largest Frobenius deviation ||U rho U^dagger - rho|| over sampled collective unitaries"""
    return _run_trials(
        lambda u: density_deviation(rho, u),
        rho.d,
        group,
        trials,
        tol,
        rng,
        seed,
        max_workers,
        criterion="frobenius",
    )


def mixture_invariance(
    states: Sequence[StateVector],
    weights: Sequence[float],
    group: SymmetryGroup = SymmetryGroup.SUD,
    trials: int = DEFAULT_TRIALS,
    tol: float = DEFAULT_TOL,
    rng: Optional[np.random.Generator] = None,
    seed: Optional[int] = None,
) -> Verdict:
    return density_invariance(mixture(states, weights), group, trials, tol, rng, seed)
