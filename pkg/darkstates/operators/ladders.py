"""
Local and collective ladder operators

SU(2) acts on a d-level site through the spin-(d-1)/2 irreducible
representation; SU(d) ladders are the matrix units E_hj. Levels are 1-based,
level 1 carrying the label +(d-1)/2, so spin raising is superdiagonal.
"""

from __future__ import annotations

from functools import cached_property
from typing import Any, NamedTuple

import numpy as np
import scipy.sparse as sp
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from darkstates.core.errors import LabelError, ShapeMismatchError
from darkstates.core.types import Direction, check_size
from darkstates.hilbert.basis import level_labels

DENSE_APPLY_LIMIT = 4096


class LocalOperator(BaseModel):
    """A d x d single-site matrix"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    d: int = Field(ge=2)
    matrix: np.ndarray

    @field_validator("matrix", mode="before")
    @classmethod
    def _as_array(cls, value: Any) -> np.ndarray:
        array = np.array(value, dtype=complex)
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def _check_shape(self) -> "LocalOperator":
        if self.matrix.shape != (self.d, self.d):
            raise ShapeMismatchError(f"Local operator must be {self.d}x{self.d}, got {self.matrix.shape}")
        return self

    def adjoint(self) -> "LocalOperator":
        return LocalOperator(d=self.d, matrix=self.matrix.conj().T)


class Ladder(NamedTuple):
    h: int
    j: int
    direction: Direction
    local: LocalOperator


def spin_ladder(d: int, direction: Direction = Direction.RAISE) -> LocalOperator:
    """Spin-(d-1)/2 J+ or J-, with <m+1|J+|m> = sqrt(j(j+1) - m(m+1))"""
    spin = (d - 1) / 2
    m = np.array([float(label) for label in level_labels(d)])
    below = m[1:]
    raising = np.diag(np.sqrt(spin * (spin + 1) - below * (below + 1)), k=1)
    local = LocalOperator(d=d, matrix=raising)
    return local if Direction(direction) is Direction.RAISE else local.adjoint()


def spin_j0(d: int) -> LocalOperator:
    """Third generator J0 = [J+, J-] / 2, i.e. diag of the level labels"""
    jp = spin_ladder(d, Direction.RAISE).matrix
    jm = spin_ladder(d, Direction.LOWER).matrix
    return LocalOperator(d=d, matrix=0.5 * (jp @ jm - jm @ jp))


def spin_components(d: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Hermitian (J_x, J_y, J_z)"""
    jp = spin_ladder(d, Direction.RAISE).matrix
    jm = spin_ladder(d, Direction.LOWER).matrix
    return (jp + jm) / 2, (jp - jm) / 2j, spin_j0(d).matrix


def check_levels(d: int, h: int, j: int) -> None:
    if not (1 <= h <= d and 1 <= j <= d):
        raise LabelError(f"Levels ({h}, {j}) must lie in 1..{d}")
    if h == j:
        raise LabelError(f"A ladder needs two distinct levels, got h = j = {h}")


def sud_ladder(d: int, h: int, j: int, direction: Direction = Direction.RAISE) -> LocalOperator:
    """Matrix unit E_hj (level j -> level h); the lowering member is its adjoint E_jh"""
    check_levels(d, h, j)
    unit = np.zeros((d, d), dtype=complex)
    unit[h - 1, j - 1] = 1.0
    local = LocalOperator(d=d, matrix=unit)
    return local if Direction(direction) is Direction.RAISE else local.adjoint()


def all_sud_ladders(d: int) -> list[Ladder]:
    """All 2d(d-1) SU(d) ladders: raising and lowering for every ordered level pair"""
    return [
        Ladder(h, j, direction, sud_ladder(d, h, j, direction))
        for direction in (Direction.RAISE, Direction.LOWER)
        for h in range(1, d + 1)
        for j in range(1, d + 1)
        if h != j
    ]


def adjacent_ladders(d: int) -> list[Ladder]:
    """E_{j,j+1} and E_{j+1,j} for j = 1..d-1"""
    return [
        Ladder(j, j + 1, direction, sud_ladder(d, j, j + 1, direction))
        for j in range(1, d)
        for direction in (Direction.RAISE, Direction.LOWER)
    ]


class CollectiveOperator:
    """
    Sum over sites of one local operator: sum_k 1 x .. x A_(k) x .. x 1.

    Only the local matrix is stored. The d^N action is materialized as a
    sparse matrix on first use when d^N <= ``dense_apply_limit``; above that
    ``matvec`` contracts site by site instead.
    """

    def __init__(self, local: LocalOperator, n: int, dense_apply_limit: int = DENSE_APPLY_LIMIT):
        if n < 1:
            raise ShapeMismatchError(f"A collective operator needs N >= 1, got {n}")
        check_size(local.d, n)
        self.local = local
        self.n = n
        self.dense_apply_limit = dense_apply_limit

    @property
    def d(self) -> int:
        return self.local.d

    @property
    def dim(self) -> int:
        return self.d**self.n

    @cached_property
    def sparse(self) -> sp.csr_matrix:
        a = sp.csr_matrix(self.local.matrix)
        total = sp.csr_matrix((self.dim, self.dim), dtype=complex)
        for site in range(self.n):
            left = sp.identity(self.d**site, dtype=complex, format="csr")
            right = sp.identity(self.d ** (self.n - site - 1), dtype=complex, format="csr")
            total = total + sp.kron(sp.kron(left, a, format="csr"), right, format="csr")
        return total.tocsr()

    def dense(self) -> np.ndarray:
        return self.sparse.toarray()

    def matvec(self, vec: np.ndarray) -> np.ndarray:
        vec = np.asarray(vec, dtype=complex)
        if vec.shape != (self.dim,):
            raise ShapeMismatchError(f"Vector of shape {vec.shape} does not match dimension {self.dim}")
        if self.dim <= self.dense_apply_limit:
            return self.sparse @ vec

        out = np.zeros(self.dim, dtype=complex)
        for site in range(self.n):
            block = vec.reshape(self.d**site, self.d, self.d ** (self.n - site - 1))
            out += np.einsum("ij,ajb->aib", self.local.matrix, block).reshape(-1)
        return out

    def __repr__(self) -> str:
        return f"CollectiveOperator(d={self.d}, n={self.n})"


def collective(local: LocalOperator, n: int, dense_apply_limit: int = DENSE_APPLY_LIMIT) -> CollectiveOperator:
    return CollectiveOperator(local, n, dense_apply_limit=dense_apply_limit)
