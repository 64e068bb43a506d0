"""Exception types shared across the package."""

from __future__ import annotations


class SwaptrickError(Exception):
    """Base class for all errors raised by swaptrick."""


class InvalidParameter(SwaptrickError, ValueError):
    """An argument is outside the documented domain of an operation."""


class ResourceLimit(SwaptrickError):
    """A size cap or node budget was exceeded."""


class NotBipartiteError(SwaptrickError):
    """A graph that was required to be bipartite contains an odd cycle.

    The offending cycle is kept on ``odd_cycle`` as a list of vertices
    (a single vertex stands for a loop).
    """

    def __init__(self, message: str, odd_cycle: list):
        super().__init__(message)
        self.odd_cycle = list(odd_cycle)


class InternalConsistencyError(SwaptrickError):
    """A self-check failed; the result cannot be trusted."""


class GraphFormatError(SwaptrickError, ValueError):
    """Malformed graph text. ``line`` is 1-based, or None for whole-file problems."""

    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
