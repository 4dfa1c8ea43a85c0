"""
Shared fixtures
"""

import numpy as np
import pytest

from darkstates.construction import four_qubit_dark_pair, pair_singlet, psi3, qutrit_semidark_example
from darkstates.core.types import StateVector
from darkstates.utils.logging_config import setup_logging


@pytest.fixture(autouse=True)
def reset_logging():
    """Every test starts from INFO-level structured logging on stderr"""
    setup_logging("INFO", "structured")


@pytest.fixture
def rng():
    """Seeded generator so every randomized test is reproducible"""
    return np.random.default_rng(20240617)


@pytest.fixture
def singlet():
    return pair_singlet()


@pytest.fixture
def dark_pair():
    return four_qubit_dark_pair()


@pytest.fixture
def qutrit_example():
    return qutrit_semidark_example()


@pytest.fixture
def psi_three():
    return psi3()


@pytest.fixture
def random_state(rng):
    """Factory for random normalized StateVectors on (d, N)"""

    def make(d, n):
        vec = rng.standard_normal(d**n) + 1j * rng.standard_normal(d**n)
        return StateVector(d=d, n=n, amplitudes=vec / np.linalg.norm(vec))

    return make
