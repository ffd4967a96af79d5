"""Exception hierarchy shared by every citeswing module."""

from __future__ import annotations

__all__ = [
    "CiteSwingError",
    "DuplicateItemId",
    "DomainError",
    "UndefinedH",
    "UndefinedTheta",
    "BranchError",
    "InsufficientData",
    "NonPositiveValue",
    "DuplicateTime",
    "ModelViolation",
    "NonMonotonicTime",
    "ParseError",
    "SchemaError",
    "DuplicateCell",
    "EmptyInput",
]


class CiteSwingError(ValueError):
    """Base class for all library errors."""


class DuplicateItemId(CiteSwingError):
    pass


class DomainError(CiteSwingError):
    """Argument lies outside the domain of a formula."""


class UndefinedH(CiteSwingError):
    """h = 0, so the swing quantities have no meaning."""


class UndefinedTheta(CiteSwingError):
    """e_sq = 0, so theta = h/e divides by zero."""


class BranchError(CiteSwingError):
    """The approximate CSF branch was requested outside theta < 1."""


class InsufficientData(CiteSwingError):
    pass


class NonPositiveValue(CiteSwingError):
    pass


class DuplicateTime(CiteSwingError):
    pass


class ModelViolation(CiteSwingError):
    """A fitted exponent is not strictly positive."""


class NonMonotonicTime(CiteSwingError):
    pass


class ParseError(CiteSwingError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SchemaError(ParseError):
    pass


class DuplicateCell(ParseError):
    pass


class EmptyInput(CiteSwingError):
    pass
