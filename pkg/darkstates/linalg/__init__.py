"""Dense complex linear-algebra kernel"""

from darkstates.linalg.kernel import (
    DEFAULT_TOL,
    expm_i_hermitian,
    haar_special_unitary,
    haar_unitary,
    is_unitary,
    kron,
    kron_power,
    make_rng,
    nullspace,
    nullspace_spectrum,
)

__all__ = [
    "DEFAULT_TOL",
    "expm_i_hermitian",
    "haar_special_unitary",
    "haar_unitary",
    "is_unitary",
    "kron",
    "kron_power",
    "make_rng",
    "nullspace",
    "nullspace_spectrum",
]
