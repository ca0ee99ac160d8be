"""Exceptions shared across the package."""

from __future__ import annotations


class GroupParseError(ValueError):
    """Syntax or arity error in a group expression; carries a byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class FieldParseError(ValueError):
    """Unrecognized base-field descriptor string."""


class GradingError(ValueError):
    """Grading-mode mismatch, or a degree outside the authoritative window."""


class UnsupportedError(Exception):
    """The requested value is outside the range this catalog can certify.

    Raised instead of guessing whenever a table or presentation is not an
    established exact result; the message names the blocking limitation.
    """
