"""
Product-basis bookkeeping

Canonical order: site 1 is the most significant base-d digit, and within a
site labels descend from +(d-1)/2 to -(d-1)/2, so the digit of label a is
(d-1)/2 - a. Every other module maps labels to indices through here.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Sequence, Union

import numpy as np

from darkstates.core.errors import LabelError
from darkstates.core.types import BasisState, check_size

Label = Union[Fraction, int, str]


def level_labels(d: int) -> tuple[Fraction, ...]:
    """Labels of a d-level site in canonical (descending) order"""
    if d < 2:
        raise LabelError(f"A site needs at least two levels, got d={d}")
    top = Fraction(d - 1, 2)
    return tuple(top - k for k in range(d))


def digit_of(d: int, label: Label) -> int:
    digit = Fraction(d - 1, 2) - Fraction(label)
    if digit.denominator != 1 or not 0 <= digit < d:
        raise LabelError(f"Label {label} is not a level of a d={d} site")
    return int(digit)


def level_of(d: int, label: Label) -> int:
    """1-based level index of a label; level 1 carries +(d-1)/2"""
    return digit_of(d, label) + 1


def index_of(b: BasisState) -> int:
    index = 0
    for label in b.labels:
        index = index * b.d + digit_of(b.d, label)
    return index


def label_of(d: int, n: int, index: int) -> BasisState:
    """Inverse of index_of"""
    dim = check_size(d, n)
    if not 0 <= index < dim:
        raise LabelError(f"Index {index} is outside 0..{dim - 1}")
    top = Fraction(d - 1, 2)
    labels = []
    for _ in range(n):
        index, digit = divmod(index, d)
        labels.append(top - digit)
    return BasisState(d=d, labels=tuple(reversed(labels)))


def total_label_sum(b: BasisState) -> Fraction:
    return sum(b.labels, Fraction(0))


def doubled_label_sums(d: int, n: int) -> np.ndarray:
    """2 * sum_j a^(j) for every flat index, as exact integers"""
    check_size(d, n)
    twice = (d - 1) - 2 * np.arange(d)
    return reduce(lambda acc, _: np.add.outer(acc, twice).ravel(), range(n - 1), twice)


def label_sum_sector(d: int, n: int, value: Label = 0) -> np.ndarray:
    """Flat indices of the basis states whose labels add up to ``value``"""
    target = 2 * Fraction(value)
    if target.denominator != 1:
        return np.zeros(0, dtype=int)
    return np.flatnonzero(doubled_label_sums(d, n) == int(target))


def level_occupations(d: int, n: int) -> np.ndarray:
    """Array of shape (d, d^n): how many sites sit on each level, per flat index"""
    check_size(d, n)
    digits = np.indices((d,) * n).reshape(n, -1)
    return np.stack([(digits == level).sum(axis=0) for level in range(d)])


def weight_sector(d: int, n: int, counts: Sequence[int]) -> np.ndarray:
    """Flat indices whose level occupations equal ``counts`` (level 1 first)"""
    if len(counts) != d or sum(counts) != n:
        return np.zeros(0, dtype=int)
    occupations = level_occupations(d, n)
    return np.flatnonzero(np.all(occupations == np.asarray(counts)[:, None], axis=0))
