"""
Basic tests for core types and models
"""

from fractions import Fraction

import numpy as np
import pytest

from darkstates.core.errors import (
    InvalidDensityError,
    LabelError,
    PreconditionError,
    ShapeMismatchError,
    SizeCapError,
)
from darkstates.core.types import (
    BasisState,
    CollapseOutcome,
    CollapseVerdict,
    DarkSubspace,
    DensityMatrix,
    DimensionRow,
    OperatorFamily,
    StateVector,
    SubspaceKind,
    Verdict,
    check_size,
)


class TestBasisState:
    """Tests for BasisState model"""

    def test_labels_are_exact_rationals(self):
        b = BasisState(d=2, labels=("1/2", -0.5))

        assert b.labels == (Fraction(1, 2), Fraction(-1, 2))
        assert b.n == 2

    def test_integer_labels_for_odd_d(self):
        b = BasisState(d=3, labels=(1, 0, -1))
        assert b.labels == (1, 0, -1)

    def test_half_integer_rejected_for_odd_d(self):
        with pytest.raises(LabelError, match="not a level"):
            BasisState(d=3, labels=("1/2",))

    def test_out_of_range_label(self):
        with pytest.raises(LabelError):
            BasisState(d=2, labels=("3/2", "1/2"))

    def test_empty_labels(self):
        with pytest.raises(LabelError, match="at least one site"):
            BasisState(d=2, labels=())

    def test_unparseable_label(self):
        with pytest.raises(LabelError, match="rationals"):
            BasisState(d=2, labels=("half",))


class TestStateVector:
    """Tests for StateVector model"""

    def test_amplitudes_are_read_only_copies(self):
        source = np.array([1.0, 0.0, 0.0, 0.0])
        psi = StateVector(d=2, n=2, amplitudes=source)
        source[0] = 5.0

        assert psi.amplitudes[0] == 1.0
        with pytest.raises(ValueError):
            psi.amplitudes[0] = 2.0

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatchError, match="Expected 8 amplitudes"):
            StateVector(d=2, n=3, amplitudes=np.zeros(4))

    def test_norm_and_normalized(self):
        psi = StateVector(d=2, n=1, amplitudes=[3.0, 4.0])

        assert psi.norm() == pytest.approx(5.0)
        assert not psi.is_normalized()
        assert psi.normalized().is_normalized()
        assert np.allclose(psi.normalized().amplitudes, [0.6, 0.8])

    def test_zero_vector_cannot_be_normalized(self):
        psi = StateVector(d=2, n=1, amplitudes=[0.0, 0.0])
        with pytest.raises(PreconditionError):
            psi.normalized()

    def test_as_tensor(self):
        psi = StateVector(d=3, n=2, amplitudes=np.arange(9))
        tensor = psi.as_tensor()

        assert tensor.shape == (3, 3)
        assert tensor[1, 2] == 5


class TestDensityMatrix:
    """Tests for DensityMatrix model"""

    def test_from_pure(self):
        psi = StateVector(d=2, n=1, amplitudes=[1.0, 0.0])
        rho = DensityMatrix.from_pure(psi)

        assert rho.rank() == 1
        assert rho.is_positive()

    def test_from_pure_requires_normalized_state(self):
        psi = StateVector(d=2, n=1, amplitudes=[1.0, 1.0])
        with pytest.raises(PreconditionError):
            DensityMatrix.from_pure(psi)

    def test_maximally_mixed(self):
        rho = DensityMatrix.maximally_mixed(2, 2)

        assert np.allclose(rho.matrix, np.eye(4) / 4)
        assert rho.min_eigenvalue() == pytest.approx(0.25)

    def test_rejects_non_hermitian(self):
        matrix = np.array([[0.5, 1.0], [0.0, 0.5]])
        with pytest.raises(InvalidDensityError, match="Hermitian"):
            DensityMatrix(d=2, n=1, matrix=matrix)

    def test_rejects_wrong_trace(self):
        with pytest.raises(InvalidDensityError, match="trace"):
            DensityMatrix(d=2, n=1, matrix=np.eye(2))

    def test_rejects_negative_eigenvalue(self):
        with pytest.raises(InvalidDensityError, match="negative eigenvalue"):
            DensityMatrix(d=2, n=1, matrix=np.diag([1.5, -0.5]))

    def test_rejects_werner_form_outside_positive_range(self):
        # alpha I + beta V at d=2, beta=0.6 has eigenvalue alpha - beta = -0.65
        alpha, beta = (1 - 2 * 0.6) / 4, 0.6
        swap = np.eye(4)[[0, 2, 1, 3]]
        with pytest.raises(InvalidDensityError, match="negative eigenvalue"):
            DensityMatrix(d=2, n=2, matrix=alpha * np.eye(4) + beta * swap)

    def test_rounding_level_negativity_is_accepted(self):
        rho = DensityMatrix(d=2, n=1, matrix=np.diag([1.0 + 1e-11, -1e-11]))
        assert rho.is_positive()


class TestSizeCap:
    def test_within_cap(self):
        assert check_size(2, 20) == 2**20

    def test_above_cap(self):
        with pytest.raises(SizeCapError, match="exceeds the size cap"):
            check_size(2, 21)

    def test_custom_cap(self):
        with pytest.raises(SizeCapError):
            check_size(3, 3, cap=26)

    def test_state_vector_respects_cap(self):
        with pytest.raises(SizeCapError):
            StateVector(d=2, n=21, amplitudes=np.zeros(1))


class TestReports:
    """Tests for subspace and report models"""

    def test_empty_subspace_matrix(self):
        subspace = DarkSubspace(
            d=3, n=2, kind=SubspaceKind.DARK, family=OperatorFamily.ADJACENT, tol=1e-9
        )

        assert subspace.dim == 0
        assert subspace.matrix().shape == (9, 0)

    def test_projection_residual(self):
        e0 = StateVector(d=2, n=1, amplitudes=[1.0, 0.0])
        e1 = StateVector(d=2, n=1, amplitudes=[0.0, 1.0])
        subspace = DarkSubspace(
            d=2, n=1, kind=SubspaceKind.DARK, family=OperatorFamily.SUD, basis=[e0], tol=1e-9
        )

        assert subspace.projection_residual(e0) == pytest.approx(0.0)
        assert subspace.projection_residual(e1) == pytest.approx(1.0)

    def test_dimension_row_mismatch_is_serialized(self):
        row = DimensionRow(n=4, d=2, semidark_dim=2, semidark_oracle=2, dark_dim=2, oracle_dim=3)
        dumped = row.model_dump()

        assert row.mismatch is True
        assert dumped["mismatch"] is True

    def test_verdict_json(self):
        verdict = Verdict(passed=True, max_deviation=0.0, trials=3, tol=1e-9, deviations=[0, 0, 0])
        dumped = verdict.model_dump(mode="json")

        assert dumped["group"] == "sud"
        assert dumped["criterion"] == "phase_insensitive"

    def test_collapse_verdict_excludes_remnant(self):
        remnant = StateVector(d=2, n=1, amplitudes=[0.0, 0.0])
        verdict = CollapseVerdict(remnant_norm=0.0, outcome=CollapseOutcome.VACUOUS, remnant=remnant)

        assert "remnant" not in verdict.model_dump()
        assert verdict.model_dump(mode="json")["outcome"] == "vacuous"
