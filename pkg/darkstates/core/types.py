"""
Core data types for darkstates

Pydantic models for product-basis labels, pure and mixed states, solved
subspaces and the reports produced by the solver and the verifiers.
Numpy payloads are copied on construction and stored read-only, so every
state is an immutable value.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Any, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator, model_validator

from darkstates.core.errors import (
    InvalidDensityError,
    LabelError,
    PreconditionError,
    ShapeMismatchError,
    SizeCapError,
)

MAX_DIMENSION = 2**20
NORM_ATOL = 1e-10
PSD_ATOL = 1e-9


class Direction(str, Enum):
    """Ladder direction"""

    RAISE = "raise"
    LOWER = "lower"


class OperatorFamily(str, Enum):
    """Collective ladder families whose joint kernel defines a subspace"""

    SU2 = "su2"  # spin-(d-1)/2 J+ and J-
    SUD = "sud"  # all 2d(d-1) matrix-unit ladders
    ADJACENT = "adjacent"  # E_{j,j+1} and E_{j+1,j} only


class SymmetryGroup(str, Enum):
    """Groups sampled by the randomized verifiers and the noise channel"""

    SU2 = "su2"
    SUD = "sud"
    IDENTITY = "identity"


class SubspaceKind(str, Enum):
    DARK = "dark"
    SEMIDARK = "semidark"


class SectorPrefilter(str, Enum):
    """Column restriction applied before the null-space solve"""

    NONE = "none"
    LABEL_SUM = "label_sum"
    WEIGHT = "weight"


class CollapseOutcome(str, Enum):
    DARK = "dark"
    NOT_DARK = "not_dark"
    VACUOUS = "vacuous"


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def check_size(d: int, n: int, cap: int = MAX_DIMENSION) -> int:
    """Return d**n, raising SizeCapError when it exceeds ``cap``"""
    dim = d**n
    if dim > cap:
        raise SizeCapError(f"d^N = {d}^{n} = {dim} exceeds the size cap of {cap}")
    return dim


# ============================================================================
# States
# ============================================================================


class BasisState(BaseModel):
    """One product-basis ket |a^(1), ..., a^(N)> with exact rational labels"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    d: int = Field(ge=2, description="Levels per site")
    labels: tuple[Fraction, ...] = Field(description="Label a^(j) of every site, site 1 first")

    @field_validator("labels", mode="before")
    @classmethod
    def _coerce_labels(cls, value: Any) -> tuple[Fraction, ...]:
        try:
            return tuple(Fraction(label) for label in value)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise LabelError(f"Labels must be rationals: {value!r}") from exc

    @model_validator(mode="after")
    def _check_lattice(self) -> "BasisState":
        if not self.labels:
            raise LabelError("A basis state needs at least one site")
        top = Fraction(self.d - 1, 2)
        for label in self.labels:
            digit = top - label
            if digit.denominator != 1 or not 0 <= digit < self.d:
                raise LabelError(f"Label {label} is not a level of a d={self.d} site")
        return self

    @property
    def n(self) -> int:
        return len(self.labels)


class StateVector(BaseModel):
    """Dense amplitude vector over the d^N product basis (canonical order)"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    d: int = Field(ge=2)
    n: int = Field(ge=1)
    amplitudes: np.ndarray

    @field_validator("amplitudes", mode="before")
    @classmethod
    def _as_array(cls, value: Any) -> np.ndarray:
        return _readonly(np.array(value, dtype=complex).reshape(-1))

    @model_validator(mode="after")
    def _check_shape(self) -> "StateVector":
        dim = check_size(self.d, self.n)
        if self.amplitudes.shape != (dim,):
            raise ShapeMismatchError(
                f"Expected {dim} amplitudes for d={self.d}, N={self.n}, "
                f"got {self.amplitudes.shape[0]}"
            )
        return self

    @property
    def dim(self) -> int:
        return self.d**self.n

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, atol: float = NORM_ATOL) -> bool:
        return abs(self.norm() - 1.0) <= atol

    def normalized(self) -> "StateVector":
        norm = self.norm()
        if norm == 0.0:
            raise PreconditionError("The zero vector cannot be normalized")
        return self.with_amplitudes(self.amplitudes / norm)

    def with_amplitudes(self, amplitudes: np.ndarray, n: Optional[int] = None) -> "StateVector":
        return StateVector(d=self.d, n=self.n if n is None else n, amplitudes=amplitudes)

    def as_tensor(self) -> np.ndarray:
        """Amplitudes reshaped to one axis per site"""
        return self.amplitudes.reshape((self.d,) * self.n)


class DensityMatrix(BaseModel):
    """Hermitian, trace-one, positive semidefinite d^N x d^N matrix"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    d: int = Field(ge=2)
    n: int = Field(ge=1)
    matrix: np.ndarray

    @field_validator("matrix", mode="before")
    @classmethod
    def _as_array(cls, value: Any) -> np.ndarray:
        return _readonly(np.array(value, dtype=complex))

    @model_validator(mode="after")
    def _check_matrix(self) -> "DensityMatrix":
        dim = check_size(self.d, self.n)
        if self.matrix.shape != (dim, dim):
            raise ShapeMismatchError(
                f"Expected a {dim}x{dim} matrix for d={self.d}, N={self.n}, "
                f"got {self.matrix.shape}"
            )
        if np.max(np.abs(self.matrix - self.matrix.conj().T)) > NORM_ATOL:
            raise InvalidDensityError("Density matrix is not Hermitian")
        if abs(np.trace(self.matrix) - 1.0) > NORM_ATOL:
            raise InvalidDensityError(f"Density matrix trace is {np.trace(self.matrix):.3g}, not 1")
        lowest = float(np.linalg.eigvalsh(self.matrix)[0])
        if lowest < -PSD_ATOL:
            raise InvalidDensityError(f"Density matrix has negative eigenvalue {lowest:.3g}")
        return self

    @classmethod
    def from_pure(cls, psi: StateVector) -> "DensityMatrix":
        if not psi.is_normalized():
            raise PreconditionError("Pure-state projector needs a normalized state")
        return cls(d=psi.d, n=psi.n, matrix=np.outer(psi.amplitudes, psi.amplitudes.conj()))

    @classmethod
    def maximally_mixed(cls, d: int, n: int) -> "DensityMatrix":
        dim = check_size(d, n)
        return cls(d=d, n=n, matrix=np.eye(dim) / dim)

    @property
    def dim(self) -> int:
        return self.d**self.n

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.matrix)[0])

    def is_positive(self, atol: float = PSD_ATOL) -> bool:
        return self.min_eigenvalue() >= -atol

    def rank(self, tol: float = 1e-9) -> int:
        return int(np.count_nonzero(np.linalg.eigvalsh(self.matrix) > tol))


# ============================================================================
# Subspaces and reports
# ============================================================================


class DarkSubspace(BaseModel):
    """Orthonormal basis of a joint collective-ladder kernel"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    d: int
    n: int
    kind: SubspaceKind
    family: OperatorFamily
    basis: list[StateVector] = Field(default_factory=list)
    tol: float
    tol_stable: bool = True
    prefilter: SectorPrefilter = SectorPrefilter.LABEL_SUM

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> np.ndarray:
        """Basis vectors as the columns of a d^N x dim matrix"""
        if not self.basis:
            return np.zeros((self.d**self.n, 0), dtype=complex)
        return np.column_stack([v.amplitudes for v in self.basis])

    def projection_residual(self, psi: StateVector) -> float:
        """Norm of the component of psi orthogonal to the subspace"""
        q = self.matrix()
        vec = psi.amplitudes
        return float(np.linalg.norm(vec - q @ (q.conj().T @ vec)))


class Verdict(BaseModel):
    """Outcome of a randomized invariance test"""

    passed: bool
    max_deviation: float
    deviations: list[float] = Field(default_factory=list)
    trials: int
    tol: float
    worst_trial: Optional[int] = None
    seed: Optional[int] = None
    group: SymmetryGroup = SymmetryGroup.SUD
    criterion: str = "phase_insensitive"


class CollapseVerdict(BaseModel):
    """Outcome of collapsing a dark state onto a smaller dark state"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    remnant_norm: float
    outcome: CollapseOutcome
    verdict: Optional[Verdict] = None
    remnant: Optional[StateVector] = Field(default=None, exclude=True)


class ConjectureReport(BaseModel):
    d: int
    m: int
    n: int
    numeric_dim: int
    oracle_dim: int
    conjecture_holds: bool
    matches_oracle: bool
    tol_stable: bool
    constructed_products: int = 0
    constructed_rank: int = 0
    constructed_residual: float = 0.0
    oracle_note: str = "standard Young tableaux of a d x m rectangle (independent cross-check)"

    @computed_field  # type: ignore[prop-decorator]
    @property
    def constructed_holds(self) -> bool:
        """The block products alone already span m dark directions"""
        return self.constructed_rank >= self.m


class DimensionRow(BaseModel):
    n: int
    d: int
    semidark_dim: int
    semidark_oracle: int
    dark_dim: int
    oracle_dim: int

    @computed_field  # type: ignore[prop-decorator]
    @property
    def mismatch(self) -> bool:
        return self.dark_dim != self.oracle_dim or self.semidark_dim != self.semidark_oracle


class QuditFeasibility(BaseModel):
    """Whether N = d^2 qudits carry at least d dark states (a decoherence-free qudit)"""

    d: int
    n: int
    dark_dim: int
    oracle_dim: int
    feasible: bool
    tol_stable: bool = True
