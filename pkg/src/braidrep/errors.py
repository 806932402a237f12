"""Exception hierarchy for the braidrep package.

Every failure mode that callers are expected to handle gets its own class;
all of them derive from :class:`BraidRepError` so a bare ``except
BraidRepError`` catches anything raised deliberately by this library.
"""

from __future__ import annotations


class BraidRepError(Exception):
    """Base class for all errors raised by braidrep."""


class InvalidConductor(BraidRepError):
    """A cyclotomic conductor must be a positive integer."""


class ConductorMismatch(BraidRepError):
    """Two field elements live in different cyclotomic fields; lift first."""


class DivisionByZero(BraidRepError, ZeroDivisionError):
    """Division by the zero element of the field."""


class NotInSubfield(BraidRepError):
    """The element does not lie in the requested cyclotomic field."""


class PrecisionExhausted(BraidRepError):
    """Numeric root isolation ran out of precision before reconstruction."""


class SpectrumNotInField(BraidRepError):
    """A characteristic polynomial does not split over the working field."""


class Singular(BraidRepError):
    """Matrix inversion was requested for a matrix with determinant zero."""


class NotInvertible(BraidRepError):
    """A representation generator must be invertible."""


class BraidRelationViolated(BraidRepError):
    """The pair (A, B) does not satisfy ABA = BAB; carries the defect."""

    def __init__(self, message: str, defect=None):
        super().__init__(message)
        self.defect = defect


class UnknownFamily(BraidRepError):
    """No family with the given identifier is in the catalog."""


class ConstraintViolated(BraidRepError):
    """Family parameters violate the family's constraint set."""

    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class ZeroEigenvalue(BraidRepError):
    """Eigenvalue parameters of a representation must be nonzero."""


class UnmatchedIndecomposable(BraidRepError):
    """A strictly indecomposable input matched no catalogued family."""


class NotInFamily(BraidRepError):
    """The representation does not have the shape the operation requires."""


class UnknownCase(BraidRepError):
    """No elimination case with the given identifier exists."""


class StepBudgetExceeded(BraidRepError):
    """A Groebner basis computation exceeded its reduction-step budget."""


class DegenerateParameters(BraidRepError):
    """R-matrix parameters must be distinct and nonzero."""


class NotYangBaxter(BraidRepError):
    """The matrix does not satisfy the Yang-Baxter equation."""


class ParseError(BraidRepError):
    """Malformed input document."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column
