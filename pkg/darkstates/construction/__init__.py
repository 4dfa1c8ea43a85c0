"""Explicit dark, semi-dark and Werner states"""

from darkstates.construction.mixed import mixture, singlet_projector, werner_beta_range, werner_state
from darkstates.construction.states import (
    bit_flip_images,
    block_partitions,
    block_product,
    four_qubit_dark_pair,
    p_all_state,
    pair_singlet,
    pairing_singlet_product,
    partial_singlet,
    permutation_sign,
    psi3,
    psi4,
    psi4_from_partial_singlets,
    psi4_proportionality,
    psi4_seed,
    qutrit_semidark_example,
    require_balanced,
)

__all__ = [
    "mixture",
    "singlet_projector",
    "werner_beta_range",
    "werner_state",
    "bit_flip_images",
    "block_partitions",
    "block_product",
    "four_qubit_dark_pair",
    "p_all_state",
    "pair_singlet",
    "pairing_singlet_product",
    "partial_singlet",
    "permutation_sign",
    "psi3",
    "psi4",
    "psi4_from_partial_singlets",
    "psi4_proportionality",
    "psi4_seed",
    "qutrit_semidark_example",
    "require_balanced",
]
