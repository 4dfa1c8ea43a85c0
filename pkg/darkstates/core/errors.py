"""
Exception hierarchy for darkstates

Library code raises these; the CLI maps every DarkStatesError to exit code 2.
Numerical verdicts never raise, they report passed=False instead.
"""


class DarkStatesError(Exception):
    """Base class for all darkstates errors"""


class LabelError(DarkStatesError):
    """A level label or level index is off the lattice or out of range"""


class ShapeMismatchError(DarkStatesError):
    """Operands disagree on local dimension, party count or matrix shape"""


class SizeCapError(DarkStatesError):
    """The product space d^N exceeds the configured size cap"""


class NotHermitianError(DarkStatesError):
    """A generator passed to the Hermitian exponential is not Hermitian"""


class ConstructionError(DarkStatesError):
    """A constructor received parameters outside its valid range"""


class PreconditionError(DarkStatesError):
    """An operation was called with inputs violating its precondition"""


class SolverError(DarkStatesError):
    """A solved subspace failed its post-solve consistency checks"""


class SerializationError(DarkStatesError):
    """State or density JSON could not be parsed"""


class InvalidDensityError(DarkStatesError):
    """A matrix is not Hermitian, not trace one or not positive semidefinite"""
