"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class SpecgraphError(Exception):
    """Base class for every error raised by specgraph."""


class InputError(SpecgraphError):
    """Malformed user input: bad names, indices, documents or contexts."""


class ParseError(InputError):
    """An ideal expression could not be parsed."""

    def __init__(self, message: str, position: int, expected: str | None = None):
        self.position = position
        self.expected = expected
        detail = f"{message} at position {position}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class DomainError(SpecgraphError):
    """The operation is mathematically undefined for the given input."""


class CapacityError(SpecgraphError):
    """A size bound (variable count or oracle cost guard) was exceeded."""


class InvariantError(SpecgraphError):
    """An internal consistency check failed, e.g. a certificate did not re-validate."""
