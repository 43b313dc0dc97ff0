"""Exception types raised across the package."""


class PunctualError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInputError(PunctualError, ValueError):
    pass


class AdmissibilityError(PunctualError, ValueError):
    """A sequence is not the Hilbert function of a zero-dimensional ideal in k[[x,y]]."""


class AssignmentError(PunctualError, ValueError):
    """A parameter assignment does not cover the parameters of a matrix."""


class FieldError(PunctualError, ValueError):
    """Incompatible base fields, or a value that cannot live in the requested field."""


class StratumRangeError(PunctualError, ValueError):
    pass


class DegreeBoundError(PunctualError, RuntimeError):
    """Raised when a standard-basis computation exceeds its degree guard."""


class DimensionError(PunctualError, ValueError):
    """The leading-term ideal does not have a finite staircase."""
