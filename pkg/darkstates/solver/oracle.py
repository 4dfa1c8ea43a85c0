"""
Combinatorial dimension oracles

Both counts are independent of the null-space solver and exist only to
cross-check it. The dark count is the number of standard Young tableaux of a
d x (N/d) rectangle (the multiplicity of the SU(d) singlet in the N-fold
tensor power). The semi-dark count is the number of total-spin-zero
multiplets, obtained by highest-weight counting over label-sum sectors.
"""

from __future__ import annotations

from functools import reduce
from itertools import chain
from math import factorial
from operator import mul

from darkstates.core.errors import PreconditionError


def _check(n: int, d: int) -> None:
    if n < 1 or d < 2:
        raise PreconditionError(f"Oracles need N >= 1 and d >= 2, got N={n}, d={d}")


def hook_length_count(partition: tuple[int, ...]) -> int:
    """Number of standard Young tableaux of ``partition`` (rows in descending order)"""
    if not partition:
        return 1
    diagram = [
        [row - j + sum(1 for lower in partition[i + 1 :] if lower > j) for j in range(row)]
        for i, row in enumerate(partition)
    ]
    return factorial(sum(partition)) // reduce(mul, chain.from_iterable(diagram), 1)


def dark_dimension_oracle(n: int, d: int) -> int:
    """Dimension of the N-party d-level dark subspace; zero unless d divides N"""
    _check(n, d)
    if n % d:
        return 0
    return hook_length_count((n // d,) * d)


def label_sum_counts(n: int, d: int) -> list[int]:
    """
    Coefficients of (1 + x + ... + x^(d-1))^N.

    Entry k counts basis states whose labels sum to k - N(d-1)/2.
    """
    _check(n, d)
    counts = [1]
    for _ in range(n):
        widened = [0] * (len(counts) + d - 1)
        for k, c in enumerate(counts):
            for shift in range(d):
                widened[k + shift] += c
        counts = widened
    return counts


def semidark_dimension_oracle(n: int, d: int) -> int:
    """c(0) - c(1), with c(w) the number of basis states of label sum w"""
    _check(n, d)
    doubled_top = n * (d - 1)
    if doubled_top % 2:
        return 0
    counts = label_sum_counts(n, d)
    centre = doubled_top // 2
    above = counts[centre + 1] if centre + 1 < len(counts) else 0
    return counts[centre] - above
