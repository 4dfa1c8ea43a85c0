"""
Explicit dark and semi-dark states

Constructors for the pair singlet, the fully antisymmetrized d-party state,
the partial singlet operator S^(j,k), the four-qubit dark pair, products of
antisymmetrized d-site blocks over a partition of the sites (pair singlets
over a matching when d = 2), and the two-qutrit semi-dark example. Every
state advertised as dark or semi-dark is screened at build time: all of its
components must have labels summing to zero.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import factorial
from typing import Iterable, Iterator, Sequence

import networkx as nx
import numpy as np
import structlog

from darkstates.core.errors import ConstructionError
from darkstates.core.types import StateVector, check_size
from darkstates.hilbert.basis import label_of, level_labels, total_label_sum
from darkstates.hilbert.states import (
    apply_local_product,
    inner,
    permute_sites,
    state_from_terms,
    swap_sites,
    tensor,
)
from darkstates.operators.rotations import level_swap

logger = structlog.get_logger(__name__)

HALF = Fraction(1, 2)
PROPORTIONALITY_ATOL = 1e-10

# Printed qubit kets use 0 -> +1/2 and 1 -> -1/2.
_QUBIT = {"0": HALF, "1": -HALF}


def require_balanced(psi: StateVector, atol: float = 1e-12) -> StateVector:
    """Reject states with weight on components whose labels do not sum to zero"""
    for index in np.flatnonzero(np.abs(psi.amplitudes) > atol):
        b = label_of(psi.d, psi.n, int(index))
        if total_label_sum(b) != 0:
            raise ConstructionError(
                f"Component {tuple(str(a) for a in b.labels)} has nonzero label sum"
            )
    return psi


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence of distinct integers"""
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def _qubit_terms(kets: Iterable[tuple[str, complex]]) -> list[tuple[tuple[Fraction, ...], complex]]:
    return [(tuple(_QUBIT[bit] for bit in ket), coefficient) for ket, coefficient in kets]


def pair_singlet() -> StateVector:
    """(|+1/2,-1/2> - |-1/2,+1/2>) / sqrt(2)"""
    psi = state_from_terms(2, 2, [((HALF, -HALF), 1.0), ((-HALF, HALF), -1.0)])
    return require_balanced(psi)


def p_all_state(d: int) -> StateVector:
    """
    Signed sum over all d! orderings of the d distinct labels, over sqrt(d!).

    The reference ordering is the descending one, |(d-1)/2, ..., -(d-1)/2>,
    which carries sign +1.
    """
    check_size(d, d)
    labels = level_labels(d)
    terms = [
        (tuple(labels[k] for k in perm), float(permutation_sign(perm)))
        for perm in permutations(range(d))
    ]
    psi = state_from_terms(d, d, terms, normalize=False)
    return require_balanced(psi.with_amplitudes(psi.amplitudes / np.sqrt(factorial(d))))


def psi3() -> StateVector:
    return p_all_state(3)


def psi4() -> StateVector:
    return p_all_state(4)


def partial_singlet(psi: StateVector, j: int, k: int) -> StateVector:
    """S^(j,k): every term minus the same term with the labels of sites j and k exchanged"""
    if j == k:
        raise ConstructionError(f"The partial singlet needs two distinct sites, got {j} twice")
    swapped = swap_sites(psi, j, k)
    return psi.with_amplitudes(psi.amplitudes - swapped.amplitudes)


def psi4_seed() -> StateVector:
    """The three unnormalized seed kets fed to S^(1,2) S^(3,4) S^(1,4)"""
    a, b, c, e = level_labels(4)
    return state_from_terms(4, 4, [((a, b, c, e), 1.0), ((c, a, b, e), 1.0), ((b, c, a, e), 1.0)], normalize=False)


def psi4_from_partial_singlets() -> StateVector:
    """S^(1,2) S^(3,4) S^(1,4) applied to the seed (unnormalized)"""
    state = psi4_seed()
    for j, k in ((1, 4), (3, 4), (1, 2)):
        state = partial_singlet(state, j, k)
    return state


def psi4_proportionality() -> complex:
    """
    The constant c with psi4_from_partial_singlets() = c * psi4().

    Raises ConstructionError when the two forms are not proportional.
    """
    target = psi4()
    built = psi4_from_partial_singlets()
    c = inner(target, built)
    residual = np.linalg.norm(built.amplitudes - c * target.amplitudes)
    if residual > PROPORTIONALITY_ATOL * max(1.0, abs(c)):
        raise ConstructionError(f"Partial-singlet form is not proportional (residual {residual:.3g})")
    logger.debug("psi4_proportionality", constant=str(c), residual=float(residual))
    return c


def four_qubit_dark_pair() -> tuple[StateVector, StateVector]:
    """
    The two orthogonal four-qubit dark states, normalized:

        |0011> + |1100> + |0110> + |1001> - 2|0101> - 2|1010>   (norm sqrt 12)
        |0011> + |1100> - |0110> - |1001>                       (norm 2)
    """
    first = state_from_terms(
        2,
        4,
        _qubit_terms(
            [("0011", 1), ("1100", 1), ("0110", 1), ("1001", 1), ("0101", -2), ("1010", -2)]
        ),
    )
    second = state_from_terms(
        2, 4, _qubit_terms([("0011", 1), ("1100", 1), ("0110", -1), ("1001", -1)])
    )
    return require_balanced(first), require_balanced(second)


def _route_blocks(unit: StateVector, blocks: Sequence[tuple[int, ...]]) -> StateVector:
    """unit^{(x)k}, with block b of the product moved onto the sites blocks[b]"""
    state = unit
    for _ in blocks[1:]:
        state = tensor(state, unit)
    sites = [site for block in blocks for site in block]
    # position p of the product holds site sites[p]; route each site home
    order = [sites.index(site) + 1 for site in range(1, len(sites) + 1)]
    return require_balanced(permute_sites(state, order))


def pairing_singlet_product(pairing: Sequence[tuple[int, int]]) -> StateVector:
    """
    Tensor product of qubit pair singlets, one per matched pair of sites.

    ``pairing`` is a perfect matching of the sites 1..N given as (a, b)
    tuples; the singlet on (a, b) carries +1/2 on site a in its positive term.
    """
    pairs = [tuple(pair) for pair in pairing]
    graph = nx.complete_graph(range(1, 2 * len(pairs) + 1))
    try:
        matched = bool(pairs) and nx.is_perfect_matching(graph, set(pairs))
    except (nx.NetworkXError, TypeError, ValueError):
        matched = False
    if not matched:
        raise ConstructionError(f"{pairs} is not a perfect matching of the sites 1..{len(graph)}")
    return _route_blocks(pair_singlet(), pairs)


def block_product(d: int, blocks: Sequence[Sequence[int]]) -> StateVector:
    """
    Tensor product of p_all_state(d), one copy per block of d sites.

    ``blocks`` partitions the sites 1..m*d. Inside a block the sites take the
    levels of the antisymmetrized state in the order listed, so reordering a
    block flips the sign with the parity of the reordering. For d = 2 this is
    pairing_singlet_product.
    """
    groups = [tuple(block) for block in blocks]
    n = d * len(groups)
    graph = nx.complete_graph(range(1, n + 1))
    if (
        not groups
        or any(len(block) != d for block in groups)
        or not nx.community.is_partition(graph, groups)
    ):
        raise ConstructionError(f"{groups} is not a partition of the sites 1..{n} into blocks of {d}")
    check_size(d, n)
    return _route_blocks(p_all_state(d), groups)


def block_partitions(n: int, d: int) -> Iterator[list[tuple[int, ...]]]:
    """
    Every partition of the sites 1..n into blocks of d, each exactly once.

    Blocks are listed by their smallest site, and sites ascend inside a block.
    Nothing is yielded when d does not divide n.
    """
    if d < 1 or n % d:
        return

    def extend(remaining: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
        if not remaining:
            yield []
            return
        first, rest = remaining[0], remaining[1:]
        for partners in combinations(rest, d - 1):
            block = (first, *partners)
            left = tuple(site for site in rest if site not in partners)
            for tail in extend(left):
                yield [block, *tail]

    yield from extend(tuple(range(1, n + 1)))


def qutrit_semidark_example() -> StateVector:
    """(|1,-1> + |-1,1> - |0,0>) / sqrt(3): a spin-1 singlet that is not SU(3) invariant"""
    psi = state_from_terms(3, 2, [((1, -1), 1.0), ((-1, 1), 1.0), ((0, 0), -1.0)])
    return require_balanced(psi)


def bit_flip_images(psi: StateVector) -> dict[tuple[int, int], StateVector]:
    """W^{(x)N} psi for the level swap W of every level pair (h < j)"""
    return {
        (h, j): apply_local_product(level_swap(psi.d, h, j), psi)
        for h in range(1, psi.d + 1)
        for j in range(h + 1, psi.d + 1)
    }
