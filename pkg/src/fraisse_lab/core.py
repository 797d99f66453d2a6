"""Shared result type and exceptions."""

from enum import IntEnum


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1

    @classmethod
    def of(cls, a, b) -> "Ordering":
        """Compare two natively ordered values."""
        if a < b:
            return cls.LT
        if a > b:
            return cls.GT
        return cls.EQ

    def flip(self) -> "Ordering":
        return Ordering(-self.value)


class FraisseLabError(Exception):
    """Base class for every error raised by this package."""

    code = "Error"


class InvalidElement(FraisseLabError, ValueError):
    code = "InvalidElement"


class InvalidTerm(FraisseLabError, ValueError):
    code = "InvalidTerm"


class NotMonotone(FraisseLabError, ValueError):
    code = "NotMonotone"


class OutOfRange(FraisseLabError, IndexError):
    code = "OutOfRange"


class NotStabilized(FraisseLabError, ValueError):
    code = "NotStabilized"


class WindowExhausted(FraisseLabError, RuntimeError):
    """The finite window is too small to complete a construction.

    Never evidence against the infinitary statement being modelled.
    """

    code = "WindowExhausted"


class ParseError(FraisseLabError, ValueError):
    code = "ParseError"

    def __init__(self, text: str, pos: int, expected: str):
        self.text = text
        self.pos = pos
        self.expected = expected
        super().__init__(f"at position {pos} in {text!r}: expected {expected}")
