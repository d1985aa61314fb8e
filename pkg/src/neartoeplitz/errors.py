"""Exception types shared across the package.

All errors raised on purpose derive from :class:`NearToeplitzError` so
callers can distinguish library errors from built-in ones.
"""


class NearToeplitzError(ValueError):
    """Base class for all errors raised by this package."""


class OrderTooSmall(NearToeplitzError):
    """Matrix order is below the minimum the construction requires."""


class OrderTooLarge(NearToeplitzError):
    """Matrix order exceeds a desk-scale guard (dense rank checks)."""


class DimensionMismatch(NearToeplitzError):
    """Operand shapes are incompatible."""


class ZeroBandProduct(NearToeplitzError):
    """The band product a*c vanishes where a nonzero product is required."""


class ZeroVector(NearToeplitzError):
    """A nonzero vector is required."""


class MatrixFormatError(NearToeplitzError):
    """A matrix document does not follow the JSON interchange schema."""
