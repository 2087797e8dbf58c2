"""Exception hierarchy shared by all modules."""


class ContrakitError(Exception):
    """Base class for every error raised by contrakit."""


class FieldError(ContrakitError, ValueError):
    """Invalid coefficient field (characteristic 2, zero modulus, ...)."""


class NotInvertibleError(ContrakitError, ZeroDivisionError):
    """A scalar has no inverse.

    ``factor`` carries a zero divisor when the scalar lives in a split
    quadratic extension, otherwise it is ``None``.
    """

    def __init__(self, msg, factor=None):
        super().__init__(msg)
        self.factor = factor


class RingMismatchError(ContrakitError, ValueError):
    """Operands live in different polynomial rings."""


class ValidationError(ContrakitError, ValueError):
    """Input data (involution, Hopf data, Lie data, job file) is invalid."""


class ResourceLimitError(ContrakitError, RuntimeError):
    """A Groebner computation exceeded the configured caps."""


class ExpressionError(ContrakitError, ValueError):
    """An element could not be re-expressed in a given set of generators."""
