"""
Tests for the algebraic and randomized darkness certificates
"""

import numpy as np
import pytest
from structlog.testing import capture_logs

from darkstates.construction import (
    mixture,
    pairing_singlet_product,
    singlet_projector,
    werner_beta_range,
    werner_state,
)
from darkstates.core.errors import PreconditionError, ShapeMismatchError
from darkstates.core.types import CollapseOutcome, DensityMatrix, OperatorFamily, SymmetryGroup
from darkstates.hilbert import basis_state, inner, tensor
from darkstates.linalg import haar_unitary
from darkstates.verify import (
    annihilation_residuals,
    collapse_darkness_check,
    density_invariance,
    invariance_verdict,
    is_dark_random,
    is_semidark_random,
    mixture_invariance,
    superposition_closure_check,
)
from darkstates.verify.invariance import pure_deviation


# ============================================================================
# Annihilation residuals
# ============================================================================


class TestAnnihilationResiduals:
    def test_dark_states_vanish(self, singlet, psi_three, dark_pair):
        for psi in (singlet, psi_three, *dark_pair):
            assert annihilation_residuals(psi) < 1e-12

    def test_semidark_example(self, qutrit_example):
        assert annihilation_residuals(qutrit_example, OperatorFamily.SU2) < 1e-12
        assert annihilation_residuals(qutrit_example, OperatorFamily.SUD) == pytest.approx(
            2 / np.sqrt(3), abs=1e-9
        )

    def test_requires_normalized_input(self):
        psi = basis_state(2, ["1/2", "-1/2"])
        with pytest.raises(PreconditionError, match="normalized"):
            annihilation_residuals(psi.with_amplitudes(2 * psi.amplitudes))


# ============================================================================
# Randomized pure-state invariance
# ============================================================================


class TestPureInvariance:
    def test_dark_states_pass(self, rng, singlet, psi_three, dark_pair):
        for psi in (singlet, psi_three, *dark_pair):
            verdict = is_dark_random(psi, trials=20, rng=rng)

            assert verdict.passed
            assert verdict.max_deviation < 1e-9
            assert len(verdict.deviations) == 20

    def test_semidark_example_is_only_semidark(self, qutrit_example):
        assert is_semidark_random(qutrit_example, trials=20, seed=3).passed

        verdict = is_dark_random(qutrit_example, trials=20, seed=3)
        assert not verdict.passed
        assert verdict.deviations[verdict.worst_trial] == verdict.max_deviation

    def test_random_state_fails(self, random_state):
        psi = random_state(2, 4)

        assert not is_dark_random(psi, trials=10, seed=1).passed
        assert not is_semidark_random(psi, trials=10, seed=1).passed

    def test_strict_phase_for_special_unitaries(self, psi_three):
        verdict = is_dark_random(psi_three, trials=20, seed=5, strict_phase=True)

        assert verdict.passed
        assert verdict.criterion == "strict_phase"

    def test_strict_phase_sees_the_determinant(self, rng, psi_three):
        u = haar_unitary(3, rng)

        assert pure_deviation(psi_three, u) < 1e-12
        assert pure_deviation(psi_three, u, strict_phase=True) == pytest.approx(
            abs(1 - np.linalg.det(u)), abs=1e-12
        )

    def test_identity_group_passes_everything(self, random_state):
        verdict = invariance_verdict(random_state(3, 2), SymmetryGroup.IDENTITY, trials=3, seed=0)

        assert verdict.passed
        assert verdict.group is SymmetryGroup.IDENTITY

    def test_seed_fixes_the_deviations(self, random_state):
        psi = random_state(2, 3)
        first = is_dark_random(psi, trials=8, seed=42)
        second = is_dark_random(psi, trials=8, seed=42)

        assert first.seed == 42
        assert first.deviations == second.deviations

    def test_thread_pool_matches_sequential(self, random_state):
        psi = random_state(3, 2)
        sequential = is_dark_random(psi, trials=12, seed=9)
        pooled = is_dark_random(psi, trials=12, seed=9, max_workers=4)

        assert pooled.deviations == pytest.approx(sequential.deviations)

    def test_fresh_seed_is_reported(self, singlet):
        assert isinstance(is_dark_random(singlet, trials=2).seed, int)

    def test_explicit_generator_reports_no_seed(self, rng, singlet):
        assert is_dark_random(singlet, trials=2, rng=rng).seed is None

    def test_requires_normalized_input(self, singlet):
        with pytest.raises(PreconditionError):
            is_dark_random(singlet.with_amplitudes(3 * singlet.amplitudes))

    def test_needs_a_trial(self, singlet):
        with pytest.raises(PreconditionError, match="trial"):
            is_dark_random(singlet, trials=0)

    def test_verdict_is_logged(self, singlet):
        with capture_logs() as logs:
            is_dark_random(singlet, trials=3, seed=1)

        entry = next(e for e in logs if e["event"] == "invariance_checked")
        assert entry["passed"] is True
        assert entry["seed"] == 1


# ============================================================================
# Mixed states
# ============================================================================


class TestDensityInvariance:
    def test_werner_family_is_invariant(self):
        for d in (2, 3):
            low, high = werner_beta_range(d)
            for beta in (low, 0.0, high):
                verdict = density_invariance(werner_state(d, beta), trials=10, seed=2)

                assert verdict.passed
                assert verdict.criterion == "frobenius"

    def test_singlet_projector(self, rng):
        assert density_invariance(singlet_projector(), trials=10, rng=rng).passed

    def test_product_projector_fails(self):
        rho = DensityMatrix.from_pure(basis_state(2, ["1/2", "1/2"]))
        assert not density_invariance(rho, trials=10, seed=2).passed

    def test_mixture_of_dark_states(self, dark_pair):
        assert mixture_invariance(list(dark_pair), [0.25, 0.75], trials=10, seed=4).passed

    def test_mixture_with_a_bright_state(self, singlet):
        bright = basis_state(2, ["1/2", "1/2"])
        assert not mixture_invariance([singlet, bright], [0.5, 0.5], trials=10, seed=4).passed

    def test_semidark_density(self, qutrit_example):
        rho = mixture([qutrit_example], [1.0])

        assert density_invariance(rho, SymmetryGroup.SU2, trials=10, seed=6).passed
        assert not density_invariance(rho, SymmetryGroup.SUD, trials=10, seed=6).passed


# ============================================================================
# Closure checks
# ============================================================================


class TestSuperpositionClosure:
    def test_complex_combination_of_the_dark_pair(self, dark_pair):
        verdict = superposition_closure_check(*dark_pair, coefficients=(0.6, 0.8j), trials=10, seed=11)

        assert verdict.passed
        assert verdict.seed == 11

    def test_vanishing_superposition(self, singlet):
        with pytest.raises(PreconditionError, match="vanishes"):
            superposition_closure_check(singlet, singlet, coefficients=(1.0, -1.0), trials=5, seed=1)

    def test_inputs_must_be_dark(self, singlet):
        bright = basis_state(2, ["1/2", "1/2"])
        with pytest.raises(PreconditionError, match="not dark"):
            superposition_closure_check(singlet, bright, trials=5, seed=1)

    def test_inputs_share_a_space(self, singlet, psi_three):
        with pytest.raises(ShapeMismatchError):
            superposition_closure_check(singlet, psi_three, trials=5, seed=1)

    def test_two_coefficients(self, dark_pair):
        with pytest.raises(PreconditionError, match="two coefficients"):
            superposition_closure_check(*dark_pair, coefficients=(1.0,), trials=5, seed=1)


class TestCollapseDarkness:
    def test_crossed_singlet_collapse(self, singlet):
        result = collapse_darkness_check(tensor(singlet, singlet), singlet, [1, 3], trials=10, seed=8)

        assert result.outcome is CollapseOutcome.DARK
        assert result.remnant_norm == pytest.approx(0.5)
        assert result.verdict.passed
        assert result.verdict.seed == 8
        assert np.allclose(result.remnant.amplitudes, 0.5 * singlet.amplitudes)

    def test_dark_pair_onto_singlet(self, dark_pair, singlet):
        for psi in dark_pair:
            result = collapse_darkness_check(psi, singlet, [2, 4], trials=10, seed=3)
            assert result.outcome in (CollapseOutcome.DARK, CollapseOutcome.VACUOUS)
            assert result.outcome is not CollapseOutcome.NOT_DARK

    def test_vacuous_remnant(self, singlet):
        s = pairing_singlet_product([(1, 2), (3, 4)])
        t = pairing_singlet_product([(1, 3), (2, 4)])
        t_perp = t.with_amplitudes(t.amplitudes - inner(s, t) * s.amplitudes).normalized()

        result = collapse_darkness_check(t_perp, singlet, [1, 2], trials=10, seed=8)

        assert result.outcome is CollapseOutcome.VACUOUS
        assert result.remnant_norm < 1e-9
        assert result.verdict is None

    def test_inputs_must_be_dark(self, singlet):
        bright = basis_state(2, ["1/2", "1/2", "-1/2", "-1/2"])
        with pytest.raises(PreconditionError, match="not dark"):
            collapse_darkness_check(bright, singlet, [1, 2], trials=5, seed=1)

    def test_remnant_is_left_out_of_the_dump(self, singlet):
        result = collapse_darkness_check(tensor(singlet, singlet), singlet, [1, 2], trials=5, seed=1)
        dumped = result.model_dump(mode="json")

        assert "remnant" not in dumped
        assert dumped["outcome"] == "dark"
