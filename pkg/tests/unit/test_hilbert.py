"""
Tests for product-basis indexing, state operations and the JSON wire format
"""

import json
from fractions import Fraction

import numpy as np
import pytest

from darkstates.core.errors import (
    LabelError,
    PreconditionError,
    SerializationError,
    ShapeMismatchError,
)
from darkstates.core.types import BasisState, DensityMatrix, StateVector
from darkstates.hilbert import (
    apply,
    apply_local_product,
    basis_state,
    collapse,
    conjugate_density,
    density_from_json,
    density_to_json,
    index_of,
    inner,
    label_of,
    label_sum_sector,
    level_labels,
    level_of,
    permute_sites,
    state_from_json,
    state_from_terms,
    state_to_json,
    swap_sites,
    tensor,
    total_label_sum,
    weight_sector,
)
from darkstates.linalg import haar_special_unitary, kron_power
from darkstates.operators import collective, spin_ladder

H = Fraction(1, 2)


# ============================================================================
# Indexing
# ============================================================================


class TestIndexing:
    def test_level_labels_descend(self):
        assert level_labels(2) == (H, -H)
        assert level_labels(3) == (1, 0, -1)
        assert level_labels(4) == (Fraction(3, 2), H, -H, Fraction(-3, 2))

    def test_level_labels_need_two_levels(self):
        with pytest.raises(LabelError):
            level_labels(1)

    def test_level_of(self):
        assert level_of(2, "1/2") == 1
        assert level_of(2, "-1/2") == 2
        assert level_of(3, -1) == 3

    def test_level_of_rejects_off_lattice(self):
        with pytest.raises(LabelError):
            level_of(3, "1/2")

    def test_site_one_is_most_significant(self):
        assert index_of(BasisState(d=2, labels=(H, -H))) == 1
        assert index_of(BasisState(d=2, labels=(-H, H))) == 2
        assert index_of(BasisState(d=3, labels=(0, -1))) == 5

    def test_label_of_examples(self):
        assert label_of(3, 2, 5).labels == (0, -1)
        assert label_of(2, 3, 0).labels == (H, H, H)
        assert label_of(2, 3, 7).labels == (-H, -H, -H)

    def test_round_trip_over_whole_space(self):
        for d, n in [(2, 4), (3, 3), (4, 2)]:
            for index in range(d**n):
                assert index_of(label_of(d, n, index)) == index

    def test_label_of_out_of_range(self):
        with pytest.raises(LabelError, match="outside"):
            label_of(2, 2, 4)

    def test_total_label_sum(self):
        assert total_label_sum(BasisState(d=3, labels=(1, 1, -1))) == 1
        assert total_label_sum(BasisState(d=2, labels=(H, -H))) == 0


class TestSectors:
    def test_zero_label_sum_for_two_qubits(self):
        assert list(label_sum_sector(2, 2)) == [1, 2]

    def test_half_integer_sum(self):
        assert list(label_sum_sector(2, 1, "1/2")) == [0]
        assert label_sum_sector(2, 2, "1/2").size == 0

    def test_sector_size_is_central_binomial(self):
        assert label_sum_sector(2, 6).size == 20

    def test_weight_sector(self):
        assert list(weight_sector(2, 2, [1, 1])) == [1, 2]
        assert weight_sector(3, 3, [1, 1, 1]).size == 6
        assert weight_sector(3, 3, [3, 0, 0]).size == 1

    def test_weight_sector_with_inconsistent_counts(self):
        assert weight_sector(3, 3, [1, 1]).size == 0
        assert weight_sector(3, 3, [2, 2, 0]).size == 0

    def test_weight_sector_refines_label_sum(self):
        label_sum = set(label_sum_sector(3, 3).tolist())
        weight = set(weight_sector(3, 3, [1, 1, 1]).tolist())
        assert weight < label_sum


# ============================================================================
# State operations
# ============================================================================


class TestStateAssembly:
    def test_basis_state(self):
        psi = basis_state(2, ["-1/2", "1/2"])

        assert psi.n == 2
        assert np.array_equal(psi.amplitudes, [0, 0, 1, 0])

    def test_terms_accumulate(self):
        psi = state_from_terms(2, 1, [((H,), 1.0), ((H,), 2.0), ((-H,), 4.0)], normalize=False)
        assert np.allclose(psi.amplitudes, [3.0, 4.0])

    def test_normalized_by_default(self):
        psi = state_from_terms(2, 1, [((H,), 3.0), ((-H,), 4.0)])
        assert psi.is_normalized()

    def test_cancelling_terms(self):
        with pytest.raises(PreconditionError, match="cancelling"):
            state_from_terms(2, 1, [((H,), 1.0), ((H,), -1.0)])

    def test_term_on_wrong_space(self):
        with pytest.raises(ShapeMismatchError):
            state_from_terms(2, 2, [((H,), 1.0)])

    def test_bad_label(self):
        with pytest.raises(LabelError):
            state_from_terms(2, 1, [(("3/2",), 1.0)])


class TestInnerAndTensor:
    def test_inner_is_conjugate_linear_in_first_argument(self, random_state):
        a, b = random_state(2, 3), random_state(2, 3)
        c = 0.3 - 1.7j
        scaled = a.with_amplitudes(c * a.amplitudes)

        assert inner(scaled, b) == pytest.approx(np.conj(c) * inner(a, b))
        assert inner(a, b) == pytest.approx(np.conj(inner(b, a)))

    def test_inner_requires_same_space(self, random_state):
        with pytest.raises(ShapeMismatchError):
            inner(random_state(2, 2), random_state(2, 3))

    def test_tensor_of_basis_states(self):
        psi = tensor(basis_state(3, [1]), basis_state(3, [0, -1]))
        assert np.array_equal(psi.amplitudes, basis_state(3, [1, 0, -1]).amplitudes)

    def test_tensor_requires_same_d(self):
        with pytest.raises(ShapeMismatchError):
            tensor(basis_state(2, [H]), basis_state(3, [0]))


class TestApply:
    def test_collective_raising_kills_singlet(self, singlet):
        out = apply(collective(spin_ladder(2), 2), singlet)

        assert out.norm() == pytest.approx(0.0, abs=1e-14)

    def test_dense_matrix(self, random_state):
        psi = random_state(2, 2)
        assert np.allclose(apply(2 * np.eye(4), psi).amplitudes, 2 * psi.amplitudes)

    def test_output_is_not_normalized(self):
        psi = basis_state(2, [-H, -H])
        out = apply(collective(spin_ladder(2), 2), psi)

        assert out.norm() == pytest.approx(np.sqrt(2))

    def test_dimension_mismatch(self, random_state):
        with pytest.raises(ShapeMismatchError):
            apply(collective(spin_ladder(2), 3), random_state(2, 2))
        with pytest.raises(ShapeMismatchError):
            apply(np.eye(3), random_state(2, 2))

    def test_local_product_matches_kron_power(self, rng, random_state):
        psi = random_state(3, 3)
        u = haar_special_unitary(3, rng)

        expected = kron_power(u, 3) @ psi.amplitudes
        assert np.allclose(apply_local_product(u, psi).amplitudes, expected, atol=1e-12)

    def test_local_product_shape(self, random_state):
        with pytest.raises(ShapeMismatchError):
            apply_local_product(np.eye(2), random_state(3, 2))


class TestPermutations:
    def test_permute_sites(self):
        psi = basis_state(2, [H, -H, -H])
        out = permute_sites(psi, [2, 1, 3])

        assert np.array_equal(out.amplitudes, basis_state(2, [-H, H, -H]).amplitudes)

    def test_swap_matches_transposition(self, random_state):
        psi = random_state(2, 4)
        assert np.allclose(swap_sites(psi, 2, 4).amplitudes, permute_sites(psi, [1, 4, 3, 2]).amplitudes)

    def test_swap_is_an_involution(self, random_state):
        psi = random_state(3, 3)
        assert np.allclose(swap_sites(swap_sites(psi, 1, 3), 1, 3).amplitudes, psi.amplitudes)

    def test_singlet_is_antisymmetric(self, singlet):
        assert np.allclose(swap_sites(singlet, 1, 2).amplitudes, -singlet.amplitudes)

    def test_invalid_permutation(self, random_state):
        with pytest.raises(PreconditionError):
            permute_sites(random_state(2, 3), [1, 1, 2])

    def test_invalid_swap_sites(self, random_state):
        with pytest.raises(PreconditionError, match="outside"):
            swap_sites(random_state(2, 3), 1, 4)


class TestCollapse:
    def test_singlet_product_onto_crossed_singlet(self, singlet):
        remnant = collapse(tensor(singlet, singlet), singlet, [1, 3])

        assert remnant.n == 2
        assert remnant.norm() == pytest.approx(0.5)
        assert np.allclose(remnant.amplitudes, 0.5 * singlet.amplitudes)

    def test_collapse_onto_own_factor(self, singlet, random_state):
        chi = random_state(2, 1)
        remnant = collapse(tensor(singlet, chi), singlet, [1, 2])

        assert np.allclose(remnant.amplitudes, chi.amplitudes)

    def test_remaining_sites_keep_their_order(self):
        psi = basis_state(2, [H, -H, -H])
        remnant = collapse(psi, basis_state(2, [-H]), [2])

        assert np.array_equal(remnant.amplitudes, basis_state(2, [H, -H]).amplitudes)

    def test_adjoint_of_tensoring(self, random_state):
        psi, phi, chi = random_state(2, 4), random_state(2, 2), random_state(2, 2)

        lhs = inner(chi, collapse(psi, phi, [1, 2]))
        rhs = inner(tensor(phi, chi), psi)
        assert lhs == pytest.approx(rhs)

    def test_linear_in_psi(self, random_state):
        a, b, phi = random_state(3, 3), random_state(3, 3), random_state(3, 1)
        combined = a.with_amplitudes(2 * a.amplitudes - 1j * b.amplitudes)

        expected = 2 * collapse(a, phi, [2]).amplitudes - 1j * collapse(b, phi, [2]).amplitudes
        assert np.allclose(collapse(combined, phi, [2]).amplitudes, expected)

    def test_remnant_can_vanish(self):
        remnant = collapse(basis_state(2, [H, H]), basis_state(2, [-H]), [1])
        assert remnant.norm() == 0.0

    def test_requires_m_below_n(self, singlet):
        with pytest.raises(PreconditionError, match="M < N"):
            collapse(singlet, singlet, [1, 2])

    def test_party_count(self, random_state):
        with pytest.raises(PreconditionError, match="Expected 2 parties"):
            collapse(random_state(2, 4), random_state(2, 2), [1])

    def test_duplicate_parties(self, random_state):
        with pytest.raises(PreconditionError, match="Duplicate"):
            collapse(random_state(2, 4), random_state(2, 2), [3, 3])

    def test_local_dimension_mismatch(self, random_state):
        with pytest.raises(ShapeMismatchError):
            collapse(random_state(2, 4), random_state(3, 1), [1])


class TestConjugateDensity:
    def test_singlet_projector_is_invariant(self, rng, singlet):
        rho = DensityMatrix.from_pure(singlet)
        out = conjugate_density(haar_special_unitary(2, rng), rho)

        assert np.allclose(out.matrix, rho.matrix, atol=1e-12)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            conjugate_density(np.eye(3), DensityMatrix.maximally_mixed(2, 2))


# ============================================================================
# JSON wire format
# ============================================================================


class TestSerialization:
    def test_singlet_terms(self, singlet):
        payload = state_to_json(singlet)

        assert payload["d"] == 2
        assert payload["n"] == 2
        assert [term["labels"] for term in payload["terms"]] == [["1/2", "-1/2"], ["-1/2", "1/2"]]
        assert payload["terms"][0]["re"] == pytest.approx(1 / np.sqrt(2))
        assert payload["terms"][1]["re"] == pytest.approx(-1 / np.sqrt(2))

    def test_integer_labels_for_qutrits(self, qutrit_example):
        labels = [term["labels"] for term in state_to_json(qutrit_example)["terms"]]
        assert labels == [["1", "-1"], ["0", "0"], ["-1", "1"]]

    def test_round_trip_through_text(self, random_state):
        psi = random_state(3, 2)
        text = json.dumps(state_to_json(psi))

        assert np.allclose(state_from_json(text).amplitudes, psi.amplitudes)

    def test_unnormalized_input_is_kept_by_default(self):
        payload = {"d": 2, "n": 1, "terms": [{"labels": ["1/2"], "re": 2.0}]}

        assert state_from_json(payload).norm() == pytest.approx(2.0)
        assert state_from_json(payload, normalize=True).norm() == pytest.approx(1.0)

    def test_imaginary_parts(self):
        payload = {"d": 2, "n": 1, "terms": [{"labels": ["-1/2"], "re": 0.0, "im": 1.0}]}
        assert state_from_json(payload).amplitudes[1] == 1j

    def test_malformed_json(self):
        with pytest.raises(SerializationError, match="Malformed JSON"):
            state_from_json("{not json")

    def test_missing_dimensions(self):
        with pytest.raises(SerializationError, match="'d' and 'n'"):
            state_from_json({"terms": []})

    def test_bad_labels(self):
        payload = {"d": 2, "n": 1, "terms": [{"labels": ["3/2"], "re": 1.0}]}
        with pytest.raises(SerializationError):
            state_from_json(payload)

    def test_not_an_object(self):
        with pytest.raises(SerializationError, match="object"):
            state_from_json("[1, 2]")

    def test_density_rejected_as_state(self):
        payload = density_to_json(DensityMatrix.maximally_mixed(2, 1))
        with pytest.raises(SerializationError, match="density"):
            state_from_json(payload)

    def test_density_round_trip(self, singlet):
        rho = DensityMatrix.from_pure(singlet)
        restored = density_from_json(json.dumps(density_to_json(rho)))

        assert isinstance(restored, DensityMatrix)
        assert np.allclose(restored.matrix, rho.matrix)

    def test_density_must_be_valid(self):
        payload = {"d": 2, "n": 1, "kind": "density", "re": [[1.0, 0.0], [0.0, 1.0]], "im": [[0, 0], [0, 0]]}
        with pytest.raises(SerializationError, match="trace"):
            density_from_json(payload)

    def test_state_json_matches_state_vector_type(self, singlet):
        assert isinstance(state_from_json(state_to_json(singlet)), StateVector)
