"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class DmflipError(Exception):
    """Base class for every error raised by dmflip."""


class StructuralError(DmflipError, ValueError):
    """Mismatched field kinds, unknown labels, non-square matrices and the like."""


class ParseError(StructuralError):
    """Malformed text input."""


class FieldDivisionError(DmflipError, ZeroDivisionError):
    pass


class PivotUndefinedError(DmflipError, ArithmeticError):
    """Raised when a principal pivot is requested on a singular block."""

    def __init__(self, labels=()):
        self.labels = tuple(labels)
        super().__init__(f"principal submatrix on {{{','.join(self.labels)}}} is singular")


class UnsupportedRepresentationError(DmflipError):
    """Field/automorphism pair without the principal unimodularity guarantee."""


class InvariantViolation(DmflipError, AssertionError):
    """A mathematically impossible state was reached; indicates a bug."""


class BudgetExceeded(DmflipError):
    pass
