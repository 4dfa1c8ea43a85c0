"""
Dark and semi-dark subspaces as joint kernels of collective ladders

The defining ladders are stacked into one tall matrix and a single SVD null
space is taken. Before the solve the columns are restricted to a sector that
provably contains the whole kernel (see ``SectorPrefilter``), rows that
vanish on that sector are dropped, and the kernel is embedded back into the
full d^N space afterwards. Every solve is followed by residual checks under
operators that were not imposed; failing them raises SolverError.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np
import scipy.sparse as sp
import structlog

from darkstates.core.errors import PreconditionError, SolverError
from darkstates.core.types import (
    MAX_DIMENSION,
    DarkSubspace,
    Direction,
    OperatorFamily,
    SectorPrefilter,
    StateVector,
    SubspaceKind,
    check_size,
)
from darkstates.hilbert.basis import doubled_label_sums, label_sum_sector, weight_sector
from darkstates.linalg.kernel import DEFAULT_TOL, nullspace_spectrum
from darkstates.operators.ladders import (
    DENSE_APPLY_LIMIT,
    CollectiveOperator,
    adjacent_ladders,
    all_sud_ladders,
    collective,
    spin_j0,
    spin_ladder,
)

logger = structlog.get_logger(__name__)

RESIDUAL_FACTOR = 10.0


def family_operators(
    family: OperatorFamily, d: int, n: int, dense_apply_limit: int = DENSE_APPLY_LIMIT
) -> list[CollectiveOperator]:
    """Collective ladders whose joint kernel defines ``family``"""
    family = OperatorFamily(family)
    if family is OperatorFamily.SU2:
        locals_ = [spin_ladder(d, Direction.RAISE), spin_ladder(d, Direction.LOWER)]
    elif family is OperatorFamily.ADJACENT:
        locals_ = [ladder.local for ladder in adjacent_ladders(d)]
    else:
        locals_ = [ladder.local for ladder in all_sud_ladders(d)]
    return [collective(local, n, dense_apply_limit=dense_apply_limit) for local in locals_]


def sector_columns(n: int, d: int, kind: SubspaceKind, prefilter: SectorPrefilter) -> np.ndarray:
    """Flat indices the kernel is searched in"""
    prefilter = SectorPrefilter(prefilter)
    if prefilter is SectorPrefilter.NONE:
        return np.arange(d**n)
    if prefilter is SectorPrefilter.WEIGHT and SubspaceKind(kind) is SubspaceKind.DARK:
        if n % d:
            return np.zeros(0, dtype=int)
        return weight_sector(d, n, [n // d] * d)
    return label_sum_sector(d, n, 0)


def restricted_stack(operators: Sequence[CollectiveOperator], columns: np.ndarray) -> np.ndarray:
    """Stacked operators restricted to ``columns``, without all-zero rows"""
    blocks = [op.sparse.tocsc()[:, columns] for op in operators]
    stacked = sp.vstack(blocks, format="csr")
    nonzero_rows = np.flatnonzero(np.diff(stacked.indptr))
    return stacked[nonzero_rows].toarray()


def max_residual(operators: Sequence[CollectiveOperator], vectors: np.ndarray) -> float:
    """Largest column norm of op @ vectors over all operators"""
    if vectors.shape[1] == 0:
        return 0.0
    return max(
        float(np.max(np.linalg.norm(op.sparse @ vectors, axis=0))) for op in operators
    )


def _solve(
    n: int,
    d: int,
    kind: SubspaceKind,
    family: OperatorFamily,
    tol: float,
    prefilter: SectorPrefilter,
    size_cap: int,
    dense_apply_limit: int,
) -> tuple[np.ndarray, bool, float, list[CollectiveOperator]]:
    if n < 1:
        raise PreconditionError(f"Need at least one site, got N={n}")
    dim = check_size(d, n, size_cap)
    operators = family_operators(family, d, n, dense_apply_limit)
    columns = sector_columns(n, d, kind, prefilter)

    embedded = np.zeros((dim, 0), dtype=complex)
    tol_stable, scale = True, 0.0
    if columns.size:
        a = restricted_stack(operators, columns)
        kernel, s, tol_stable = nullspace_spectrum(a, tol)
        scale = float(s[0]) if s.size else 0.0
        embedded = np.zeros((dim, kernel.shape[1]), dtype=complex)
        embedded[columns] = kernel

    logger.debug(
        "kernel_solved",
        n=n,
        d=d,
        kind=SubspaceKind(kind).value,
        family=OperatorFamily(family).value,
        columns=int(columns.size),
        dim=int(embedded.shape[1]),
        tol_stable=tol_stable,
    )
    return embedded, tol_stable, scale, operators


def _check_residual(
    name: str, operators: Sequence[CollectiveOperator], vectors: np.ndarray, tol: float, scale: float
) -> float:
    residual = max_residual(operators, vectors)
    bound = RESIDUAL_FACTOR * tol * max(1.0, scale)
    if residual > bound:
        raise SolverError(f"{name} residual {residual:.3g} exceeds {bound:.3g}")
    return residual


def _as_subspace(
    vectors: np.ndarray,
    n: int,
    d: int,
    kind: SubspaceKind,
    family: OperatorFamily,
    tol: float,
    tol_stable: bool,
    prefilter: SectorPrefilter,
) -> DarkSubspace:
    basis = [StateVector(d=d, n=n, amplitudes=vectors[:, k]) for k in range(vectors.shape[1])]
    return DarkSubspace(
        d=d,
        n=n,
        kind=kind,
        family=family,
        basis=basis,
        tol=tol,
        tol_stable=tol_stable,
        prefilter=prefilter,
    )


def semidark_basis(
    n: int,
    d: int,
    tol: float = DEFAULT_TOL,
    prefilter: SectorPrefilter = SectorPrefilter.LABEL_SUM,
    size_cap: int = MAX_DIMENSION,
    dense_apply_limit: int = DENSE_APPLY_LIMIT,
) -> DarkSubspace:
    """
    Orthonormal basis of ker(J+) and ker(J-), the spin-(d-1)/2 singlets.

    J0 is not imposed; its residual on the result is checked instead.
    """
    if SectorPrefilter(prefilter) is SectorPrefilter.WEIGHT:
        # level occupations are not conserved by spin ladders
        prefilter = SectorPrefilter.LABEL_SUM
    vectors, tol_stable, scale, operators = _solve(
        n, d, SubspaceKind.SEMIDARK, OperatorFamily.SU2, tol, prefilter, size_cap, dense_apply_limit
    )
    _check_residual("J+/J-", operators, vectors, tol, scale)
    j0 = [collective(spin_j0(d), n, dense_apply_limit=dense_apply_limit)]
    _check_residual("J0", j0, vectors, tol, scale)

    logger.info("semidark_basis_solved", n=n, d=d, dim=vectors.shape[1], tol=tol, tol_stable=tol_stable)
    return _as_subspace(
        vectors, n, d, SubspaceKind.SEMIDARK, OperatorFamily.SU2, tol, tol_stable, SectorPrefilter(prefilter)
    )


def dark_basis(
    n: int,
    d: int,
    tol: float = DEFAULT_TOL,
    prefilter: SectorPrefilter = SectorPrefilter.LABEL_SUM,
    size_cap: int = MAX_DIMENSION,
    dense_apply_limit: int = DENSE_APPLY_LIMIT,
) -> DarkSubspace:
    """
    Orthonormal basis of the joint kernel of the adjacent ladders E_{j,j+1}, E_{j+1,j}.

    The adjacent ladders generate every other matrix unit by products, so the
    result is cross-checked against all 2d(d-1) collective ladders.
    """
    vectors, tol_stable, scale, _ = _solve(
        n, d, SubspaceKind.DARK, OperatorFamily.ADJACENT, tol, prefilter, size_cap, dense_apply_limit
    )
    _check_residual(
        "full SU(d) ladder", family_operators(OperatorFamily.SUD, d, n, dense_apply_limit), vectors, tol, scale
    )

    logger.info("dark_basis_solved", n=n, d=d, dim=vectors.shape[1], tol=tol, tol_stable=tol_stable)
    return _as_subspace(
        vectors, n, d, SubspaceKind.DARK, OperatorFamily.ADJACENT, tol, tol_stable, SectorPrefilter(prefilter)
    )


def full_ladder_basis(
    n: int,
    d: int,
    tol: float = DEFAULT_TOL,
    prefilter: SectorPrefilter = SectorPrefilter.LABEL_SUM,
    size_cap: int = MAX_DIMENSION,
    dense_apply_limit: int = DENSE_APPLY_LIMIT,
) -> DarkSubspace:
    """Joint kernel of all 2d(d-1) collective SU(d) ladders"""
    vectors, tol_stable, _, _ = _solve(
        n, d, SubspaceKind.DARK, OperatorFamily.SUD, tol, prefilter, size_cap, dense_apply_limit
    )
    return _as_subspace(
        vectors, n, d, SubspaceKind.DARK, OperatorFamily.SUD, tol, tol_stable, SectorPrefilter(prefilter)
    )


def su2_multiplet_census(
    n: int,
    d: int,
    tol: float = DEFAULT_TOL,
    size_cap: int = MAX_DIMENSION,
) -> list[tuple[Fraction, int]]:
    """
    Collective-spin decomposition as (j, multiplicity), largest j first.

    mult(j) is the number of J0 = j states annihilated by J+, i.e. the
    kernel dimension of J+ restricted to the label-sum sector j.
    """
    check_size(d, n, size_cap)
    raise_op = collective(spin_ladder(d, Direction.RAISE), n)
    doubled = doubled_label_sums(d, n)

    census = []
    for w2 in sorted({int(w) for w in doubled if w >= 0}, reverse=True):
        columns = np.flatnonzero(doubled == w2)
        kernel, _, _ = nullspace_spectrum(restricted_stack([raise_op], columns), tol)
        multiplicity = int(kernel.shape[1])
        if multiplicity:
            census.append((Fraction(w2, 2), multiplicity))

    logger.debug("su2_multiplet_census", n=n, d=d, multiplets=[(str(j), m) for j, m in census])
    return census
