"""The term system omega(X): weakly decreasing finite exponent sequences.

A term ``(x0, ..., x_{n-1})`` stands for ``w^x0 + ... + w^x_{n-1}``.  Terms
are compared lexicographically by exponent, a proper prefix lying below its
extensions; the empty term is the least element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Mapping, Union

from .core import InvalidTerm, NotMonotone, Ordering
from .orders import BaseOrder, DescentScheme, Fin, Omega, _compare, base_compare, is_element


@dataclass(frozen=True)
class OmegaTerm:
    exponents: tuple = ()

    def __len__(self):
        return len(self.exponents)


def omega_validate(X: BaseOrder, t: OmegaTerm) -> bool:
    xs = t.exponents
    if not all(is_element(X, x) for x in xs):
        return False
    return all(_compare(X, xs[i + 1], xs[i]) is not Ordering.GT for i in range(len(xs) - 1))


@lru_cache(maxsize=1 << 16)
def _valid_cached(X, t) -> bool:
    return omega_validate(X, t)


def _require(X, t):
    if not _valid_cached(X, t):
        raise InvalidTerm(f"{t} is not a term of omega({X})")


def omega_compare(X: BaseOrder, s: OmegaTerm, t: OmegaTerm) -> Ordering:
    _require(X, s)
    _require(X, t)
    if isinstance(X, (Fin, Omega)):
        # natural order on codes: Python's tuple order is exactly this
        return Ordering.of(s.exponents, t.exponents)
    for a, b in zip(s.exponents, t.exponents):
        c = _compare(X, a, b)
        if c is not Ordering.EQ:
            return c
    return Ordering.of(len(s), len(t))


Embedding = Union[Mapping, Callable]


def _apply(h: Embedding, x):
    return h[x] if isinstance(h, Mapping) else h(x)


def omega_lift(h: Embedding, t: OmegaTerm, source: BaseOrder, target: BaseOrder) -> OmegaTerm:
    """Exponentwise image of ``t`` under an order embedding ``source -> target``.

    Monotonicity is checked on the exponents of ``t`` only.
    """
    _require(source, t)
    xs = sorted(set(t.exponents), key=repr)
    image = {x: _apply(h, x) for x in xs}
    for y in image.values():
        if not is_element(target, y):
            raise NotMonotone(f"{y!r} is not an element of {target}")
    for a in xs:
        for b in xs:
            if base_compare(source, a, b) is Ordering.LT and base_compare(
                target, image[a], image[b]
            ) is not Ordering.LT:
                raise NotMonotone(f"h does not preserve {a!r} < {b!r}")
    return OmegaTerm(tuple(image[x] for x in t.exponents))


def omega_enumerate(X: Fin, count: int) -> list:
    """The first ``count`` terms of omega(Fin(n)) in ascending order.

    omega(Fin(n)) has order type w^n, so for n >= 1 the initial segment of any
    finite length consists of the terms (0,)*k; for n = 0 only the empty term
    exists.
    """
    if not isinstance(X, Fin):
        raise ValueError("enumeration needs a finite base order")
    if X.n == 0:
        return [OmegaTerm()][:count]
    return [OmegaTerm((0,) * k) for k in range(count)]


def omega_terms(X: Fin, max_len: int) -> list:
    """Every valid term of omega(Fin(n)) with at most ``max_len`` exponents."""
    out = []
    for k in range(max_len + 1):
        for combo in combinations_with_replacement(range(X.n - 1, -1, -1), k):
            out.append(OmegaTerm(combo))
    return out


def omega_descend_lift(X: BaseOrder, d: DescentScheme) -> DescentScheme:
    """Turn a descent in X into a descent of single-exponent terms."""
    return DescentScheme(
        ("omega", X),
        lambda i: OmegaTerm((d(i),)),
        lambda s, t: omega_compare(X, s, t),
    )
