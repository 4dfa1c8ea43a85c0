"""
Finite rotations, the flip operator and level permutations

SU(2) elements are exp(i (b_x J_x + b_y J_y + b_z J_z)) in the spin-(d-1)/2
representation. Two parameter measures are offered: ``uniform`` (uniform
axis, uniform angle in [0, 2pi)) generates a family continuously connected to
the identity, which is all an invariance test needs; ``haar`` draws a uniform
point of S^3 and so is exactly Haar on SU(2).
"""

from __future__ import annotations

from typing import Literal, Optional, Sequence

import numpy as np

from darkstates.core.types import SymmetryGroup
from darkstates.linalg.kernel import expm_i_hermitian, haar_special_unitary
from darkstates.operators.ladders import check_levels, spin_components

Su2Measure = Literal["uniform", "haar"]


def random_su2_parameters(rng: np.random.Generator, measure: Su2Measure = "uniform") -> np.ndarray:
    if measure == "haar":
        q = rng.standard_normal(4)
        q /= np.linalg.norm(q)
        angle = 2.0 * np.arccos(np.clip(q[0], -1.0, 1.0))
        axis = q[1:]
    elif measure == "uniform":
        angle = rng.uniform(0.0, 2.0 * np.pi)
        axis = rng.standard_normal(3)
    else:
        raise ValueError(f"Unknown SU(2) measure: {measure}")
    norm = np.linalg.norm(axis)
    if norm == 0.0:
        return np.zeros(3)
    return angle * axis / norm


def su2_rotation(
    d: int,
    beta: Optional[Sequence[float]] = None,
    rng: Optional[np.random.Generator] = None,
    measure: Su2Measure = "uniform",
) -> np.ndarray:
    """
    Spin-(d-1)/2 rotation exp(i beta . J).

    With ``beta`` omitted the parameters are drawn from ``rng``.
    """
    if beta is None:
        if rng is None:
            raise ValueError("su2_rotation needs either beta or rng")
        beta = random_su2_parameters(rng, measure)
    jx, jy, jz = spin_components(d)
    bx, by, bz = (float(b) for b in beta)
    return expm_i_hermitian(bx * jx + by * jy + bz * jz)


def sample_unitary(
    group: SymmetryGroup,
    d: int,
    rng: np.random.Generator,
    su2_measure: Su2Measure = "uniform",
) -> np.ndarray:
    """One local unitary from ``group`` acting on a d-level site"""
    group = SymmetryGroup(group)
    if group is SymmetryGroup.SUD:
        return haar_special_unitary(d, rng)
    if group is SymmetryGroup.SU2:
        return su2_rotation(d, rng=rng, measure=su2_measure)
    return np.eye(d, dtype=complex)


def flip_operator(d: int) -> np.ndarray:
    """V |phi>|psi> = |psi>|phi> on two d-level sites"""
    flip = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            flip[j * d + i, i * d + j] = 1.0
    return flip


def level_swap(d: int, h: int, j: int) -> np.ndarray:
    """Permutation unitary exchanging levels h and j (1-based); determinant -1"""
    check_levels(d, h, j)
    perm = np.arange(d)
    perm[[h - 1, j - 1]] = perm[[j - 1, h - 1]]
    return np.eye(d, dtype=complex)[perm]
