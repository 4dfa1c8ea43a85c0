"""Core types, configuration and errors"""

from darkstates.core.config import Config
from darkstates.core.errors import DarkStatesError
from darkstates.core.types import BasisState, DensityMatrix, StateVector

__all__ = ["Config", "DarkStatesError", "BasisState", "DensityMatrix", "StateVector"]
