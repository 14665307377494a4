"""Exception hierarchy shared by the library and the CLI exit-code mapping."""

from __future__ import annotations


class BraidError(ValueError):
    """Base class for all library errors."""


class WordParseError(BraidError):
    """Malformed braid-word text or sequence file."""


class PreconditionError(BraidError):
    """An operation was called on inputs outside its domain (non-pure word, bad m, n < 0)."""


class NotPureError(PreconditionError):
    pass


class NotCommutingError(BraidError):
    """Two braids were required to commute but do not."""


class MoveError(BraidError):
    """A rewriting move does not apply at the requested position."""


class SequenceError(BraidError):
    """A transformation sequence failed validation or has the wrong endpoints."""


class InvariantViolation(AssertionError):
    """An identity that must hold unconditionally was found to fail.

    Raised instead of ``assert`` so the check survives ``python -O``.
    """
