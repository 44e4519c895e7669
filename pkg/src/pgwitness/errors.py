"""Shared exception types.

The CLI maps these onto process exit codes: parse/input problems exit
with 2, resource caps with 3, and internal invariant violations with 4.
"""

from __future__ import annotations


class PgwitnessError(Exception):
    """Base class for all package-specific errors."""


class GameParseError(PgwitnessError):
    """Malformed game file; carries the 1-based line number if known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceCapError(PgwitnessError):
    """A configured size cap (statespace, product, prefix length) was hit."""


class InternalInvariantError(PgwitnessError):
    """A condition the implementation guarantees was found violated."""
