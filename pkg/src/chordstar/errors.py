"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ChordstarError(Exception):
    """Base class for all library errors."""


class InputError(ChordstarError, ValueError):
    """Malformed or out-of-range input."""


class Graph6Error(InputError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedError(ChordstarError):
    """Input is legal but beyond the sizes this library handles."""


class DomainError(ChordstarError, ValueError):
    """Parameter outside the interval where a statement is claimed."""


class PreconditionError(ChordstarError, ValueError):
    """Operation called on a graph outside its stated class."""


class BudgetExceeded(ChordstarError):
    """A search ran past its node budget."""


class ConstructionError(ChordstarError):
    """No verified construction was found."""
