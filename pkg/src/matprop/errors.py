"""Exception types and source positions shared across the package."""

from __future__ import annotations

from typing import NamedTuple


class SourceSpan(NamedTuple):
    """Byte offsets [start, end) of a region inside an input string."""

    start: int
    end: int


class MatpropError(Exception):
    """Base class for all errors raised by this package."""


class RigMismatchError(MatpropError):
    """Operands or containers belong to different rigs."""


class DomainError(MatpropError):
    """A value or rig lies outside the domain of the requested operation."""


class ParseError(MatpropError):
    """Malformed literal, term, or file; carries a source span."""

    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{message} at {span.start}..{span.end}")
        self.message = message
        self.span = span


class ShapeError(MatpropError):
    """Matrix shapes do not fit the requested operation."""


class ArityError(MatpropError):
    """A term is ill-composed; carries the path of the offending subterm."""

    def __init__(self, message: str, path: tuple[int, ...] = (), span: SourceSpan | None = None):
        at = "root" if not path else ".".join(str(i) for i in path)
        super().__init__(f"{message} (subterm {at})")
        self.message = message
        self.path = path
        self.span = span


class NotComparableError(MatpropError):
    """Two terms cannot be compared for equality because their arities differ."""


class NoMatchError(MatpropError):
    """A rewrite rule does not match the addressed subterm."""


class PathError(MatpropError):
    """A subterm address does not exist in the term."""


class ConfigError(MatpropError):
    """Unknown rig name, rule flag, or other bad configuration."""
