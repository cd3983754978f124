"""Exceptions shared across the library."""


class InputError(ValueError):
    """Caller handed us something outside an operation's contract."""


class DimensionError(InputError):
    """Matrix/vector shapes do not conform."""


class SingularMatrixError(ArithmeticError):
    """A matrix (or triangular system) that must be invertible is not."""


class VerificationError(RuntimeError):
    """A cross-check between two independent computations disagreed."""


class InternalCheckError(RuntimeError):
    """An invariant that must hold by construction failed; this is a bug."""
