class PreconditionError(ValueError):
    """An input violates a documented precondition (CLI exit code 2)."""


class DimensionMismatch(PreconditionError):
    pass


class ZeroRadius(PreconditionError):
    """The operator has zero numerical radius."""


class NotExtremeError(PreconditionError):
    pass


class SizeCapExceeded(PreconditionError):
    """Operator-space vertex enumeration requested above the dimension cap."""


class UnboundedInput(PreconditionError):
    pass


class DegenerateSeminorm(PreconditionError):
    """The numerical radius vanishes on a nonzero operator."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CertificationFailure(RuntimeError):
    """An exact certificate did not close (CLI exit code 3).

    A failure here points at an implementation bug, never at the mathematics.
    """

    def __init__(self, message, difference=()):
        super().__init__(message)
        self.difference = tuple(difference)
