"""Exception hierarchy for fixpoint-bounds.

Certification failures are never raised; they are recorded as check results.
These exceptions cover bad input, misuse of an operation and broken
arithmetic preconditions.
"""

from __future__ import annotations


class FixpointError(Exception):
    """Base class for all errors raised by this package."""


class DatasetError(FixpointError, ValueError):
    """A dataset document is unreadable, malformed or violates its schema."""


class ZeroDenominatorError(FixpointError, ZeroDivisionError):
    """A rational function was given the zero polynomial as denominator."""


class PoleError(FixpointError, ValueError):
    """Evaluation was requested at zero or at a root of the denominator."""


class PreconditionError(FixpointError, ValueError):
    """An operation was invoked outside the regime it is defined for."""


class NonConstantGenusError(FixpointError, ValueError):
    """A derived invariant needs a chi-vector that failed to reduce to integers."""


class ProofError(FixpointError, AssertionError):
    """The theorem reproducer met a case it could not refute."""
