"""
State assembly and state-level operations

Everything returns new immutable StateVector/DensityMatrix values. Outputs of
``apply`` and ``collapse`` are left unnormalized so callers can read raw
residual norms.
"""

from __future__ import annotations

from typing import Any, Iterable, Sequence, Union

import numpy as np
import scipy.sparse as sp

from darkstates.core.errors import PreconditionError, ShapeMismatchError
from darkstates.core.types import BasisState, DensityMatrix, StateVector, check_size
from darkstates.hilbert.basis import Label, index_of
from darkstates.linalg.kernel import kron_power

Term = tuple[Union[BasisState, Sequence[Label]], complex]


def _require_same_space(a: StateVector, b: StateVector) -> None:
    if (a.d, a.n) != (b.d, b.n):
        raise ShapeMismatchError(f"States live on (d={a.d}, N={a.n}) and (d={b.d}, N={b.n})")


def _check_sites(n: int, sites: Sequence[int]) -> list[int]:
    if len(set(sites)) != len(sites):
        raise PreconditionError(f"Duplicate site indices in {list(sites)}")
    for site in sites:
        if not 1 <= site <= n:
            raise PreconditionError(f"Site {site} is outside 1..{n}")
    return [site - 1 for site in sites]


def basis_state(d: int, labels: Sequence[Label]) -> StateVector:
    b = labels if isinstance(labels, BasisState) else BasisState(d=d, labels=tuple(labels))
    amplitudes = np.zeros(check_size(d, b.n), dtype=complex)
    amplitudes[index_of(b)] = 1.0
    return StateVector(d=d, n=b.n, amplitudes=amplitudes)


def state_from_terms(d: int, n: int, terms: Iterable[Term], normalize: bool = True) -> StateVector:
    """
    Assemble a state from (basis state, coefficient) terms.

    Repeated basis states accumulate. With ``normalize`` the result is scaled
    to unit norm, which fails for an empty or cancelling term list.
    """
    amplitudes = np.zeros(check_size(d, n), dtype=complex)
    for labels, coefficient in terms:
        b = labels if isinstance(labels, BasisState) else BasisState(d=d, labels=tuple(labels))
        if b.d != d or b.n != n:
            raise ShapeMismatchError(f"Term {b.labels} does not live on (d={d}, N={n})")
        amplitudes[index_of(b)] += coefficient

    state = StateVector(d=d, n=n, amplitudes=amplitudes)
    if normalize:
        if state.norm() == 0.0:
            raise PreconditionError("Cannot normalize an empty or cancelling term list")
        state = state.normalized()
    return state


def inner(a: StateVector, b: StateVector) -> complex:
    """<a|b>, conjugate-linear in the first argument"""
    _require_same_space(a, b)
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def tensor(a: StateVector, b: StateVector) -> StateVector:
    if a.d != b.d:
        raise ShapeMismatchError(f"Cannot tensor d={a.d} with d={b.d}")
    return StateVector(d=a.d, n=a.n + b.n, amplitudes=np.kron(a.amplitudes, b.amplitudes))


def apply(op: Any, psi: StateVector) -> StateVector:
    """
    Exact matrix-vector product, no normalization.

    ``op`` is a dense or sparse matrix, or anything exposing ``dim`` and
    ``matvec`` (such as a CollectiveOperator).
    """
    if hasattr(op, "matvec"):
        if op.dim != psi.dim:
            raise ShapeMismatchError(f"Operator acts on dimension {op.dim}, state has {psi.dim}")
        return psi.with_amplitudes(op.matvec(psi.amplitudes))

    if not sp.issparse(op):
        op = np.asarray(op, dtype=complex)
    if op.shape != (psi.dim, psi.dim):
        raise ShapeMismatchError(f"Operator shape {op.shape} does not match dimension {psi.dim}")
    return psi.with_amplitudes(op @ psi.amplitudes)


def apply_local_product(u: np.ndarray, psi: StateVector) -> StateVector:
    """U applied to every site, i.e. U^{(x)N} psi, without building the d^N matrix"""
    u = np.asarray(u, dtype=complex)
    if u.shape != (psi.d, psi.d):
        raise ShapeMismatchError(f"Local unitary shape {u.shape} does not match d={psi.d}")
    vec = psi.amplitudes
    for site in range(psi.n):
        block = vec.reshape(psi.d**site, psi.d, psi.d ** (psi.n - site - 1))
        vec = np.einsum("ij,ajb->aib", u, block)
    return psi.with_amplitudes(vec.reshape(-1))


def permute_sites(psi: StateVector, order: Sequence[int]) -> StateVector:
    """Reorder sites: output site i carries input site ``order[i-1]`` (1-based)"""
    if sorted(order) != list(range(1, psi.n + 1)):
        raise PreconditionError(f"{list(order)} is not a permutation of 1..{psi.n}")
    axes = [site - 1 for site in order]
    return psi.with_amplitudes(psi.as_tensor().transpose(axes).reshape(-1))


def swap_sites(psi: StateVector, j: int, k: int) -> StateVector:
    j0, k0 = _check_sites(psi.n, [j, k])
    return psi.with_amplitudes(np.swapaxes(psi.as_tensor(), j0, k0).reshape(-1))


def collapse(psi_n: StateVector, phi_m: StateVector, parties: Sequence[int]) -> StateVector:
    """
    Partial inner product <phi_M| (on ``parties``) applied to psi_N.

    Party ``parties[k]`` of psi_N is contracted with site k+1 of phi_M. The
    N-M remaining sites keep their original relative order. The result is
    unnormalized and may be the zero vector.
    """
    if phi_m.d != psi_n.d:
        raise ShapeMismatchError(f"Cannot collapse d={psi_n.d} onto d={phi_m.d}")
    m, n = phi_m.n, psi_n.n
    if not 1 <= m < n:
        raise PreconditionError(f"Collapse needs 1 <= M < N, got M={m}, N={n}")
    if len(parties) != m:
        raise PreconditionError(f"Expected {m} parties, got {len(parties)}")
    axes = _check_sites(n, parties)

    moved = np.moveaxis(psi_n.as_tensor(), axes, list(range(m)))
    remnant = phi_m.amplitudes.conj() @ moved.reshape(psi_n.d**m, psi_n.d ** (n - m))
    return StateVector(d=psi_n.d, n=n - m, amplitudes=remnant)


def conjugate_density(u: np.ndarray, rho: DensityMatrix) -> DensityMatrix:
    """U^{(x)N} rho U^{(x)N}^dagger"""
    u = np.asarray(u, dtype=complex)
    if u.shape != (rho.d, rho.d):
        raise ShapeMismatchError(f"Local unitary shape {u.shape} does not match d={rho.d}")
    full = kron_power(u, rho.n)
    out = full @ rho.matrix @ full.conj().T
    return DensityMatrix(d=rho.d, n=rho.n, matrix=(out + out.conj().T) / 2)
