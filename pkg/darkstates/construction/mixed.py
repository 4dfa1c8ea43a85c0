"""
Mixed dark states: the Werner family and convex mixtures
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from darkstates.core.errors import ConstructionError, ShapeMismatchError
from darkstates.core.types import DensityMatrix, StateVector
from darkstates.construction.states import pair_singlet
from darkstates.operators.rotations import flip_operator

WEIGHT_ATOL = 1e-10


def werner_beta_range(d: int) -> tuple[float, float]:
    """
    Closed interval of beta for which alpha*I + beta*V is a density matrix.

    V has eigenvalue +1 on the d(d+1)/2 symmetric states and -1 on the
    d(d-1)/2 antisymmetric ones, so positivity needs alpha + beta >= 0 and
    alpha - beta >= 0 with alpha = (1 - beta*d) / d^2.
    """
    if d < 2:
        raise ConstructionError(f"Werner states need d >= 2, got {d}")
    return -1.0 / (d * (d - 1)), 1.0 / (d * (d + 1))


def werner_state(d: int, beta: float) -> DensityMatrix:
    """rho = alpha*I + beta*V, with alpha fixed by tr(rho) = 1"""
    low, high = werner_beta_range(d)
    if not low - WEIGHT_ATOL <= beta <= high + WEIGHT_ATOL:
        raise ConstructionError(
            f"beta={beta} leaves the positive range [{low:.6g}, {high:.6g}] for d={d}"
        )
    alpha = (1.0 - beta * d) / d**2
    return DensityMatrix(d=d, n=2, matrix=alpha * np.eye(d * d) + beta * flip_operator(d))


def singlet_projector() -> DensityMatrix:
    """|Psi-><Psi-| for two qubits; equals werner_state(2, -1/2)"""
    return DensityMatrix.from_pure(pair_singlet())


def mixture(states: Sequence[StateVector], weights: Sequence[float]) -> DensityMatrix:
    """sum_i w_i |psi_i><psi_i| for normalized states and a probability vector w"""
    if not states or len(states) != len(weights):
        raise ConstructionError("A mixture needs one weight per state and at least one state")
    w = np.asarray(weights, dtype=float)
    if np.any(w < 0) or abs(w.sum() - 1.0) > WEIGHT_ATOL:
        raise ConstructionError(f"Mixture weights must be a probability vector, got {list(weights)}")
    d, n = states[0].d, states[0].n
    if any((psi.d, psi.n) != (d, n) for psi in states):
        raise ShapeMismatchError("All states of a mixture must share (d, N)")

    matrix = sum(
        weight * DensityMatrix.from_pure(psi).matrix for weight, psi in zip(w, states)
    )
    return DensityMatrix(d=d, n=n, matrix=matrix)
