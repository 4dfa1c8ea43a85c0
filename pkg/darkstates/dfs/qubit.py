"""
Decoherence-free qubit

A logical qubit a|0_L> + b|1_L> is stored in the span of the two orthogonal
four-qubit dark states. Collective noise is modelled as an ensemble of shots,
each applying one random U^{(x)4}; the channel output is the shot average of
the rotated projectors. The same shots are applied to a bare physical qubit
a|+1/2> + b|-1/2> as the comparison baseline.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np
import structlog
from pydantic import BaseModel, ConfigDict, Field, model_validator

from darkstates.construction.states import four_qubit_dark_pair
from darkstates.core.errors import PreconditionError, ShapeMismatchError
from darkstates.core.types import (
    DensityMatrix,
    OperatorFamily,
    QuditFeasibility,
    StateVector,
    SymmetryGroup,
)
from darkstates.hilbert.states import apply_local_product, inner
from darkstates.linalg.kernel import make_rng
from darkstates.operators.rotations import Su2Measure, sample_unitary
from darkstates.solver.subspace import family_operators

logger = structlog.get_logger(__name__)

ENCODING_ATOL = 1e-10
BASELINE_NOTE = (
    "bare qubit under the same collective unitary shots; the comparison baseline is a "
    "modelling choice, not a physical noise model"
)

_S = 1.0 / np.sqrt(2.0)
CARDINAL_INPUTS: dict[str, tuple[complex, complex]] = {
    "0": (1.0, 0.0),
    "1": (0.0, 1.0),
    "+": (_S, _S),
    "-": (_S, -_S),
    "+i": (_S, 1j * _S),
    "-i": (_S, -1j * _S),
}


class LogicalEncoding(BaseModel):
    """Orthonormal pair of dark states carrying |0_L> and |1_L>"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    basis0: StateVector
    basis1: StateVector

    @model_validator(mode="after")
    def _check_pair(self) -> "LogicalEncoding":
        if (self.basis0.d, self.basis0.n) != (self.basis1.d, self.basis1.n):
            raise ShapeMismatchError("Logical basis states must share (d, N)")
        if abs(inner(self.basis0, self.basis1)) > ENCODING_ATOL:
            raise PreconditionError("Logical basis states are not orthogonal")
        for psi in (self.basis0, self.basis1):
            if not psi.is_normalized(ENCODING_ATOL):
                raise PreconditionError("Logical basis states must be normalized")
            for op in family_operators(OperatorFamily.SU2, psi.d, psi.n):
                if np.linalg.norm(op.matvec(psi.amplitudes)) > ENCODING_ATOL:
                    raise PreconditionError("Logical basis state is not annihilated by J+/J-")
        return self

    @classmethod
    def four_qubit(cls) -> "LogicalEncoding":
        basis0, basis1 = four_qubit_dark_pair()
        return cls(basis0=basis0, basis1=basis1)

    def block(self, rho: DensityMatrix) -> np.ndarray:
        """2x2 matrix <i_L|rho|j_L>"""
        q = np.column_stack([self.basis0.amplitudes, self.basis1.amplitudes])
        return q.conj().T @ rho.matrix @ q


class ChannelSpec(BaseModel):
    """Collective-noise ensemble: one random U^{(x)N} per shot"""

    model_config = ConfigDict(frozen=True)

    group: SymmetryGroup = SymmetryGroup.SUD
    samples: int = Field(default=10_000, ge=1)
    su2_measure: Su2Measure = "haar"


class InputFidelity(BaseModel):
    label: str
    a: tuple[float, float] = Field(description="(re, im) of the |0> amplitude")
    b: tuple[float, float] = Field(description="(re, im) of the |1> amplitude")
    encoded_fidelity: float
    bare_fidelity: float
    max_shot_deviation: float
    decode_error: float


class DfsReport(BaseModel):
    group: SymmetryGroup
    samples: int
    seed: Optional[int] = None
    encoded_min_fidelity: float
    encoded_mean_fidelity: float
    bare_min_fidelity: float
    bare_mean_fidelity: float
    inputs: list[InputFidelity] = Field(default_factory=list)
    baseline: str = BASELINE_NOTE
    qudit: Optional[QuditFeasibility] = None


def _logical_pair(a: complex, b: complex) -> np.ndarray:
    pair = np.array([a, b], dtype=complex)
    norm = np.linalg.norm(pair)
    if norm == 0.0:
        raise PreconditionError("Cannot encode the zero vector")
    return pair / norm


def encode(a: complex, b: complex, encoding: Optional[LogicalEncoding] = None) -> StateVector:
    """a|0_L> + b|1_L>, rescaled to unit norm"""
    encoding = encoding or LogicalEncoding.four_qubit()
    a, b = _logical_pair(a, b)
    return encoding.basis0.with_amplitudes(a * encoding.basis0.amplitudes + b * encoding.basis1.amplitudes)


def bare_qubit(a: complex, b: complex) -> StateVector:
    return StateVector(d=2, n=1, amplitudes=_logical_pair(a, b))


def decode(rho: DensityMatrix, encoding: Optional[LogicalEncoding] = None) -> tuple[complex, complex]:
    """
    Leading eigenvector of the logical 2x2 block of rho.

    The global phase is fixed so that the larger amplitude is real and positive.
    """
    encoding = encoding or LogicalEncoding.four_qubit()
    if (rho.d, rho.n) != (encoding.basis0.d, encoding.basis0.n):
        raise ShapeMismatchError(f"Density matrix on (d={rho.d}, N={rho.n}) does not match the encoding")
    block = encoding.block(rho)
    _, vecs = np.linalg.eigh((block + block.conj().T) / 2)
    lead = vecs[:, -1]
    pivot = lead[np.argmax(np.abs(lead))]
    lead = lead * (abs(pivot) / pivot)
    return complex(lead[0]), complex(lead[1])


def _shots(psi: StateVector, spec: ChannelSpec, rng: np.random.Generator) -> np.ndarray:
    """Rotated copies U_s^{(x)N} psi as rows, one per shot"""
    return np.stack(
        [
            apply_local_product(sample_unitary(spec.group, psi.d, rng, spec.su2_measure), psi).amplitudes
            for _ in range(spec.samples)
        ]
    )


def _deviations(psi: StateVector, rotated: np.ndarray) -> np.ndarray:
    return np.clip(1.0 - np.abs(rotated @ psi.amplitudes.conj()), 0.0, None)


def _average_projector(psi: StateVector, rotated: np.ndarray) -> DensityMatrix:
    matrix = rotated.T @ rotated.conj() / rotated.shape[0]
    return DensityMatrix(d=psi.d, n=psi.n, matrix=(matrix + matrix.conj().T) / 2)


def collective_channel(
    psi: StateVector, spec: ChannelSpec, rng: Optional[np.random.Generator] = None, seed: Optional[int] = None
) -> DensityMatrix:
    """(1/K) sum_s U_s^{(x)N} |psi><psi| U_s^{(x)N}^dagger over K = spec.samples shots"""
    rng, _ = make_rng(rng, seed)
    return _average_projector(psi, _shots(psi, spec, rng))


def shot_deviations(
    psi: StateVector, spec: ChannelSpec, rng: Optional[np.random.Generator] = None, seed: Optional[int] = None
) -> np.ndarray:
    """Per-shot 1 - |<psi|U_s^{(x)N}|psi>|"""
    rng, _ = make_rng(rng, seed)
    return _deviations(psi, _shots(psi, spec, rng))


def fidelity(rho: DensityMatrix, psi: StateVector) -> float:
    """<psi|rho|psi>, clipped to [0, 1]"""
    if (rho.d, rho.n) != (psi.d, psi.n):
        raise ShapeMismatchError(f"Density matrix on (d={rho.d}, N={rho.n}) vs state on (d={psi.d}, N={psi.n})")
    value = np.vdot(psi.amplitudes, rho.matrix @ psi.amplitudes).real
    return float(np.clip(value, 0.0, 1.0))


def dfs_experiment(
    inputs: Optional[Sequence[tuple[complex, complex]]] = None,
    spec: Optional[ChannelSpec] = None,
    rng: Optional[np.random.Generator] = None,
    seed: Optional[int] = None,
    encoding: Optional[LogicalEncoding] = None,
    labels: Optional[Sequence[str]] = None,
) -> DfsReport:
    """
    Encoded versus bare fidelity for each logical input.

    Defaults to the six cardinal Bloch states. For every input one shot seed
    is drawn from the master generator and both channels are driven by it,
    so the encoded and the bare state see the same unitaries.
    """
    spec = spec or ChannelSpec()
    encoding = encoding or LogicalEncoding.four_qubit()
    if inputs is None:
        labels = list(CARDINAL_INPUTS)
        inputs = list(CARDINAL_INPUTS.values())
    if not inputs:
        raise PreconditionError("dfs_experiment needs at least one logical input")
    labels = list(labels) if labels is not None else [str(k) for k in range(len(inputs))]
    if len(labels) != len(inputs):
        raise PreconditionError("One label per logical input is required")
    rng, seed = make_rng(rng, seed)

    results = []
    for label, (a, b) in zip(labels, inputs):
        pair = _logical_pair(a, b)
        shot_seed = int(rng.integers(2**63))
        encoded = encode(*pair, encoding=encoding)
        bare = bare_qubit(*pair)

        rotated = _shots(encoded, spec, np.random.default_rng(shot_seed))
        encoded_rho = _average_projector(encoded, rotated)
        bare_rho = collective_channel(bare, spec, rng=np.random.default_rng(shot_seed))

        a_out, b_out = decode(encoded_rho, encoding)
        overlap = abs(np.vdot(pair, np.array([a_out, b_out])))
        results.append(
            InputFidelity(
                label=label,
                a=(float(pair[0].real), float(pair[0].imag)),
                b=(float(pair[1].real), float(pair[1].imag)),
                encoded_fidelity=fidelity(encoded_rho, encoded),
                bare_fidelity=fidelity(bare_rho, bare),
                max_shot_deviation=float(np.max(_deviations(encoded, rotated))),
                decode_error=float(np.sqrt(max(0.0, 2.0 - 2.0 * overlap))),
            )
        )

    encoded_f = [r.encoded_fidelity for r in results]
    bare_f = [r.bare_fidelity for r in results]
    report = DfsReport(
        group=spec.group,
        samples=spec.samples,
        seed=seed,
        encoded_min_fidelity=min(encoded_f),
        encoded_mean_fidelity=float(np.mean(encoded_f)),
        bare_min_fidelity=min(bare_f),
        bare_mean_fidelity=float(np.mean(bare_f)),
        inputs=results,
    )
    logger.info(
        "dfs_experiment_done",
        group=spec.group.value,
        samples=spec.samples,
        seed=seed,
        encoded_min_fidelity=report.encoded_min_fidelity,
        bare_mean_fidelity=report.bare_mean_fidelity,
    )
    return report
