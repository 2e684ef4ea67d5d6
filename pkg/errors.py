# errors.py

"""Exception hierarchy shared by the encoder, the dynamic sequence, the oracle and the builder."""

from typing import Optional


class PbwtError(Exception):
    """Base class for every error raised by this package"""


class AlphabetError(PbwtError, ValueError):
    """A symbol is not part of the declared alphabet, or the alphabet itself is malformed"""

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (position {position})"
        super().__init__(message)
        self.position = position


class PositionError(PbwtError, IndexError):
    """A position, rank or occurrence count lies outside the valid range"""


class InputError(PbwtError, ValueError):
    """Caller supplied a text or symbol the builder cannot accept"""


class PreconditionError(PbwtError, ValueError):
    """Oracle input does not end with a unique sentinel"""
