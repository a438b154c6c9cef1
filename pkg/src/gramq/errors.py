"""Exception types raised across the package."""


class GramqError(Exception):
    """Base class for all errors raised by gramq."""


class NotHermitian(GramqError, ValueError):
    """Matrix is not Hermitian within the configured tolerance."""


class NoConvergence(GramqError, RuntimeError):
    """An iterative eigensolver failed to converge."""


class SupportViolation(GramqError, ValueError):
    """supp(rho) is not contained in supp(sigma) where a negative power requires it."""


class InvalidParameter(GramqError, ValueError):
    """Parameter outside the domain of the operation (e.g. z <= 0 or alpha = 1)."""


class DimensionMismatch(GramqError, ValueError):
    """Operands live in different dimensions."""


class NotUnitary(GramqError, ValueError):
    """Matrix fails the unitarity check."""


class LengthMismatch(GramqError, ValueError):
    """Ordered ensembles of different length where equal length is required."""


class UnknownName(GramqError, ValueError):
    """Name does not refer to a known canonical ensemble or quantifier."""


class ParameterOutOfRange(GramqError, ValueError):
    """Numeric parameter outside its allowed range."""


class ParseError(GramqError, ValueError):
    """Ensemble file could not be parsed; message carries line/field diagnostics."""


class InvariantViolation(GramqError, ValueError):
    """Parsed data violates an ensemble invariant (norms, probability sum)."""


class DimensionTooLarge(GramqError, ValueError):
    """Brute-force oracle asked to enumerate a simplex of too high dimension."""
