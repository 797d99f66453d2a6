"""Presented linear orders used as exponent and index sets.

Elements are canonical codes: naturals for ``Fin``, ``Omega`` and
``OmegaStar``, and pairs of codes for ``LexPair``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Hashable, Iterator, Optional, Union

from .core import InvalidElement, Ordering

MAX_NESTING = 4

Element = Hashable


@dataclass(frozen=True)
class Fin:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"Fin size must be a natural, got {self.n!r}")


@dataclass(frozen=True)
class Omega:
    pass


@dataclass(frozen=True)
class OmegaStar:
    pass


@dataclass(frozen=True)
class LexPair:
    left: "BaseOrder"
    right: "BaseOrder"

    def __post_init__(self):
        if nesting(self) > MAX_NESTING:
            raise ValueError(f"lexicographic nesting deeper than {MAX_NESTING}")


BaseOrder = Union[Fin, Omega, OmegaStar, LexPair]


def nesting(X: BaseOrder) -> int:
    if isinstance(X, LexPair):
        return 1 + max(nesting(X.left), nesting(X.right))
    return 0


def is_element(X: BaseOrder, a) -> bool:
    if isinstance(X, LexPair):
        return (
            isinstance(a, tuple)
            and len(a) == 2
            and is_element(X.left, a[0])
            and is_element(X.right, a[1])
        )
    if not isinstance(a, int) or isinstance(a, bool) or a < 0:
        return False
    if isinstance(X, Fin):
        return a < X.n
    return True


def check_element(X: BaseOrder, a) -> None:
    if not is_element(X, a):
        raise InvalidElement(f"{a!r} is not an element of {X}")


def _compare(X: BaseOrder, a, b) -> Ordering:
    if isinstance(X, LexPair):
        first = _compare(X.left, a[0], b[0])
        if first is not Ordering.EQ:
            return first
        return _compare(X.right, a[1], b[1])
    if isinstance(X, OmegaStar):
        return Ordering.of(b, a)
    return Ordering.of(a, b)


def base_compare(X: BaseOrder, a, b) -> Ordering:
    check_element(X, a)
    check_element(X, b)
    return _compare(X, a, b)


def is_finite(X: BaseOrder) -> bool:
    if isinstance(X, Fin):
        return True
    if isinstance(X, LexPair):
        if is_empty(X):
            return True
        return is_finite(X.left) and is_finite(X.right)
    return False


def is_empty(X: BaseOrder) -> bool:
    if isinstance(X, Fin):
        return X.n == 0
    if isinstance(X, LexPair):
        return is_empty(X.left) or is_empty(X.right)
    return False


def least_code(X: BaseOrder):
    """Some fixed element of a nonempty order (code-wise smallest)."""
    if isinstance(X, LexPair):
        return (least_code(X.left), least_code(X.right))
    if isinstance(X, Fin) and X.n == 0:
        raise InvalidElement("Fin(0) has no elements")
    return 0


def elements(X: BaseOrder, bound: int = 8) -> list:
    """Elements whose atomic coordinates are all below ``bound``, sorted in X.

    For finite X with small factors this is the whole carrier.
    """
    if isinstance(X, Fin):
        codes = list(range(X.n))
    elif isinstance(X, (Omega, OmegaStar)):
        codes = list(range(bound))
    else:
        codes = list(product(elements(X.left, bound), elements(X.right, bound)))
    return sort_elements(X, codes)


def sort_elements(X: BaseOrder, codes) -> list:
    from functools import cmp_to_key

    return sorted(codes, key=cmp_to_key(lambda a, b: int(_compare(X, a, b))))


@dataclass(frozen=True)
class DescentScheme:
    """A map from steps to elements whose outputs strictly descend."""

    order: object
    step: Callable[[int], object]
    compare: Callable[[object, object], Ordering]

    def __call__(self, i: int):
        return self.step(i)

    def take(self, n: int) -> list:
        return [self.step(i) for i in range(n)]

    def verify(self, budget: int = 100) -> bool:
        prev = self.step(0)
        for i in range(1, budget):
            cur = self.step(i)
            if self.compare(cur, prev) is not Ordering.LT:
                return False
            prev = cur
        return True


def _descent_step(X: BaseOrder) -> Optional[Callable[[int], object]]:
    if isinstance(X, OmegaStar):
        return lambda i: i
    if isinstance(X, LexPair) and not is_empty(X):
        left = _descent_step(X.left)
        if left is not None:
            anchor = least_code(X.right)
            return lambda i: (left(i), anchor)
        right = _descent_step(X.right)
        if right is not None:
            anchor = least_code(X.left)
            return lambda i: (anchor, right(i))
    return None


def base_descent(X: BaseOrder) -> Optional[DescentScheme]:
    """Witness of ill-foundedness, or None when X is well-founded."""
    step = _descent_step(X)
    if step is None:
        return None
    return DescentScheme(X, step, lambda a, b: base_compare(X, a, b))


def translations(X: BaseOrder, shifts=(1, 2)) -> Iterator[Callable]:
    """Total, strictly monotone self-maps of X built from coordinate shifts.

    Fin admits only the identity; Omega and OmegaStar admit ``i -> i + k``.
    """
    if isinstance(X, Fin):
        yield lambda a: a
    elif isinstance(X, (Omega, OmegaStar)):
        yield lambda a: a
        for k in shifts:
            yield lambda a, k=k: a + k
    else:
        for hl in translations(X.left, shifts):
            for hr in translations(X.right, shifts):
                yield lambda a, hl=hl, hr=hr: (hl(a[0]), hr(a[1]))
