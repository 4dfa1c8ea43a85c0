"""
Dense complex linear-algebra kernel

Kronecker products, SVD null spaces, Hermitian exponentials and Haar-random
unitaries. Every random draw goes through an explicitly passed
``numpy.random.Generator``; nothing here touches global RNG state.
"""

from __future__ import annotations

from functools import reduce
from typing import Optional

import numpy as np
import scipy.linalg as sla
import scipy.sparse as sp
import structlog

from darkstates.core.errors import NotHermitianError

logger = structlog.get_logger(__name__)

DEFAULT_TOL = 1e-9
UNITARY_TOL = 1e-10


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; entry ((i1,i2),(j1,j2)) is a[i1,j1] * b[i2,j2]"""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def kron_power(u: np.ndarray, n: int) -> np.ndarray:
    """u tensored with itself n times"""
    if n < 1:
        raise ValueError(f"kron_power needs n >= 1, got {n}")
    u = np.asarray(u, dtype=complex)
    return reduce(np.kron, [u] * n)


def nullspace_spectrum(
    a: np.ndarray, tol: float = DEFAULT_TOL
) -> tuple[np.ndarray, np.ndarray, bool]:
    """
    Orthonormal kernel basis together with the singular values.

    Singular values at or below ``tol * s_max`` count as zero. The third
    return value reports whether the kernel dimension is unchanged when the
    threshold is scaled by 10 and by 1/10.

    Returns:
        (basis, singular_values, tol_stable) where ``basis`` holds the kernel
        vectors as columns (shape ``(cols, k)``).
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if sp.issparse(a):
        a = a.toarray()
    a = np.asarray(a, dtype=complex)
    rows, cols = a.shape

    if rows == 0 or cols == 0 or not np.any(a):
        return np.eye(cols, dtype=complex), np.zeros(0), True

    # Tall inputs only need the thin factorization; wide ones need all of V.
    try:
        _, s, vh = sla.svd(a, full_matrices=rows < cols, lapack_driver="gesdd")
    except np.linalg.LinAlgError:
        _, s, vh = sla.svd(a, full_matrices=rows < cols, lapack_driver="gesvd")

    s_max = s[0]
    rank = int(np.count_nonzero(s > tol * s_max))
    tol_stable = all(
        int(np.count_nonzero(s > scaled * s_max)) == rank for scaled in (tol * 10, tol / 10)
    )
    if not tol_stable:
        logger.warning("nullspace_rank_unstable", rank=rank, tol=tol, shape=[rows, cols])
    return vh[rank:].conj().T, s, tol_stable


def nullspace(a: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis (as columns) of the right null space of ``a``"""
    basis, _, _ = nullspace_spectrum(a, tol)
    return basis


def expm_i_hermitian(h: np.ndarray, atol: float = UNITARY_TOL) -> np.ndarray:
    """exp(i h) for Hermitian h, via the spectral decomposition"""
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise NotHermitianError(f"Generator must be square, got shape {h.shape}")
    if h.size and np.max(np.abs(h - h.conj().T)) > atol:
        raise NotHermitianError("Generator is not Hermitian")
    w, v = sla.eigh((h + h.conj().T) / 2)
    return (v * np.exp(1j * w)) @ v.conj().T


def is_unitary(u: np.ndarray, atol: float = UNITARY_TOL) -> bool:
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return bool(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) <= atol)


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """
    Haar-random element of U(n).

    QR of a complex Ginibre matrix, with the columns of Q rephased by the
    phases of diag(R); without the rephasing the output is not Haar.
    """
    if n < 1:
        raise ValueError(f"haar_unitary needs n >= 1, got {n}")
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = sla.qr(z)
    diag = np.diag(r)
    return q * (diag / np.abs(diag))


def haar_special_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random element of SU(n): a Haar unitary divided by an n-th root of its determinant"""
    u = haar_unitary(n, rng)
    phase = np.angle(np.linalg.det(u))
    return u * np.exp(-1j * phase / n)


def make_rng(
    rng: Optional[np.random.Generator] = None, seed: Optional[int] = None
) -> tuple[np.random.Generator, Optional[int]]:
    """
    Resolve the generator for a randomized routine.

    An explicit generator wins; otherwise one is seeded from ``seed``, or from
    fresh OS entropy whose value is returned so it can be reported.
    """
    if rng is not None:
        return rng, seed
    if seed is None:
        seed = int(np.random.SeedSequence().entropy % (2**63))
    return np.random.default_rng(seed), seed
