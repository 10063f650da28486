"""Exceptions raised by qhopf.

Every domain error is a ``ValueError`` so callers that only care about bad
input can keep catching that.
"""

from typing import Optional


class ConventionError(ValueError):
    """A calibration or convention check failed (ideal data, generators, ...)."""


class DegreeError(ValueError):
    """An element does not carry the U(1) degree its role requires."""


class FiltrationError(ValueError):
    """A computation needs a larger filtration bound."""


class PoleError(ValueError):
    """A rational function was evaluated at one of its poles."""


class GramSingularError(ValueError):
    """A Gram matrix could not be inverted."""


class QHopfParseError(ValueError):
    """Malformed serialized input.

    Args:
        message: what went wrong.
        line: 1-based line of the offending input, if known.
        column: 1-based column of the offending input, if known.
    """

    def __init__(
        self, message: str, line: Optional[int] = None, column: Optional[int] = None
    ):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
