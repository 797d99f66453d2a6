"""Executable ordinal notation systems, finite-window good-pair searches and
an embeddability calculus for simple countable linear orders."""

from .core import (
    FraisseLabError,
    InvalidElement,
    InvalidTerm,
    NotMonotone,
    NotStabilized,
    Ordering,
    OutOfRange,
    ParseError,
    WindowExhausted,
)

__version__ = "0.1.0"
