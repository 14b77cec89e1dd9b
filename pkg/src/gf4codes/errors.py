"""Exception types shared across the package."""

from __future__ import annotations


class GF4CodesError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(GF4CodesError, ValueError):
    """Raised when structured text input cannot be parsed."""


class MatrixFormatError(FormatError):
    """Raised when matrix text cannot be parsed or has inconsistent shape."""


class PreconditionError(GF4CodesError, ValueError):
    """Raised when an operation's mathematical precondition fails.

    Examples: doubling a pair that is not hermitian self-orthogonal,
    requesting quantum parameters from a code that is not self-orthogonal,
    supplying an auxiliary vector of even weight.
    """


class BudgetExceededError(GF4CodesError, RuntimeError):
    """Raised when an exact enumeration would exceed the configured budget."""


class ConsistencyError(GF4CodesError, ArithmeticError):
    """Raised when an exact computation produces an impossible result.

    A MacWilliams transform that divides with a remainder or yields a
    negative coefficient signals a wrong input enumerator or dimension, not
    a recoverable condition.
    """


class CatalogKeyError(GF4CodesError, LookupError):
    """Raised when a catalog lookup names no known entry."""
