"""Exception types shared across the package."""


class OddzetaError(Exception):
    """Base class for all library-specific errors."""


class DomainError(OddzetaError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class GradingError(OddzetaError, ValueError):
    """A pi-grading constraint was violated.

    Raised when an operation would introduce a negative pi-exponent into a
    polynomial that is required to stay polynomial in pi.
    """


class NonFiniteSample(OddzetaError, ArithmeticError):
    """An integrand returned inf or nan, which indicates a bug in the integrand."""


class LemmaViolation(OddzetaError, ArithmeticError):
    """An exact sine-moment integral failed to collapse to -1/pi.

    This cannot happen for a correct polynomial pipeline; it signals corrupted
    Bernoulli data or a broken series expansion upstream.
    """


class ArityError(OddzetaError, ValueError):
    """An argument list does not have the declared length."""
