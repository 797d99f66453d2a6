"""Relativized Bachmann-Howard notation over a base order X.

Terms are built from ``Zero``, ``BigOmega``, ``Eps(x)`` for ``x`` in X (large
epsilon numbers above Omega, increasing in ``x``), ``Pow(t)`` (w^t), sums of
additively principal terms and the collapse ``Collapse(t)`` which always lands
below Omega.

Normal form:

* ``SumOf`` has at least two parts, each additively principal (``BigOmega``,
  ``Eps``, ``Pow`` or ``Collapse``), weakly decreasing, with no nested sums.
* ``Pow(b)`` requires that ``b`` is not itself one of ``BigOmega``, ``Eps``
  or ``Collapse``.  Those denote epsilon numbers, so w^b would equal b.
  ``Pow(Zero)`` is the term for 1.

With these rules, two valid terms compare EQ exactly when they are
structurally identical.

Collapses are ordered by the coefficient clause

    Collapse(a) < Collapse(b)  iff  (a < b and k(a) < Collapse(b))
                                     or Collapse(a) <= some member of k(b)

where ``k`` collects the maximal collapse subterms (see ``theta_coefficients``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping, Optional, Union

from .core import InvalidTerm, NotMonotone, Ordering
from .orders import (
    BaseOrder,
    _compare as _base_cmp,
    base_compare,
    base_descent,
    elements,
    is_element,
    translations,
)


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class BigOmega:
    pass


@dataclass(frozen=True)
class Eps:
    x: object


@dataclass(frozen=True)
class Pow:
    body: "ThetaTerm"


@dataclass(frozen=True)
class SumOf:
    parts: tuple


@dataclass(frozen=True)
class Collapse:
    body: "ThetaTerm"


ThetaTerm = Union[Zero, BigOmega, Eps, Pow, SumOf, Collapse]

ONE = Pow(Zero())

_FIXED = (BigOmega, Eps, Collapse)
_PRINCIPAL = (BigOmega, Eps, Pow, Collapse)


def size(t: ThetaTerm) -> int:
    """Node count of the syntax tree."""
    if isinstance(t, (Pow, Collapse)):
        return 1 + size(t.body)
    if isinstance(t, SumOf):
        return 1 + sum(size(p) for p in t.parts)
    return 1


def _parts(t: ThetaTerm) -> tuple:
    if isinstance(t, Zero):
        return ()
    if isinstance(t, SumOf):
        return t.parts
    return (t,)


# -- validation ------------------------------------------------------------


def theta_validate(X: BaseOrder, t: ThetaTerm) -> bool:
    try:
        return _valid(X, t)
    except (TypeError, RecursionError):
        return False


def _valid(X, t) -> bool:
    if isinstance(t, (Zero, BigOmega)):
        return True
    if isinstance(t, Eps):
        return is_element(X, t.x)
    if isinstance(t, Pow):
        return not isinstance(t.body, _FIXED) and _valid(X, t.body)
    if isinstance(t, Collapse):
        return _valid(X, t.body)
    if isinstance(t, SumOf):
        ps = t.parts
        if not isinstance(ps, tuple) or len(ps) < 2:
            return False
        if not all(isinstance(p, _PRINCIPAL) and _valid(X, p) for p in ps):
            return False
        return all(_cmp(X, ps[i], ps[i + 1]) is not Ordering.LT for i in range(len(ps) - 1))
    return False


def _require(X, t):
    if not theta_validate(X, t):
        raise InvalidTerm(f"{t} is not a normal-form term over {X}")


# -- coefficients ------------------------------------------------------------


def theta_coefficients(t: ThetaTerm) -> frozenset:
    """The set of maximal collapse subterms of ``t`` (all below Omega)."""
    if isinstance(t, Collapse):
        return frozenset([t])
    if isinstance(t, Pow):
        return theta_coefficients(t.body)
    if isinstance(t, SumOf):
        out = frozenset()
        for p in t.parts:
            out |= theta_coefficients(p)
        return out
    return frozenset()


# -- comparison --------------------------------------------------------------


def theta_compare(X: BaseOrder, s: ThetaTerm, t: ThetaTerm) -> Ordering:
    _require(X, s)
    _require(X, t)
    return _cmp(X, s, t)


def theta_lt(X: BaseOrder, s: ThetaTerm, t: ThetaTerm) -> bool:
    return theta_compare(X, s, t) is Ordering.LT


@lru_cache(maxsize=1 << 18)
def _cmp(X, s, t) -> Ordering:
    if s == t:
        return Ordering.EQ
    if isinstance(s, _PRINCIPAL) and isinstance(t, _PRINCIPAL):
        return _cmp_principal(X, s, t)
    ps, pt = _parts(s), _parts(t)
    for a, b in zip(ps, pt):
        c = _cmp_principal(X, a, b)
        if c is not Ordering.EQ:
            return c
    return Ordering.of(len(ps), len(pt))


_RANK = {Collapse: 0, BigOmega: 1, Eps: 2}


def _cmp_principal(X, s, t) -> Ordering:
    if s == t:
        return Ordering.EQ
    if isinstance(s, Pow) and isinstance(t, Pow):
        return _cmp(X, s.body, t.body)
    if isinstance(s, Pow):
        # t is an epsilon number: w^b < t iff b < t.  b == t is excluded by
        # the normal form; break the tie upwards anyway.
        c = _cmp(X, s.body, t)
        return Ordering.GT if c is Ordering.EQ else c
    if isinstance(t, Pow):
        return _cmp_principal(X, t, s).flip()
    rs, rt = _RANK[type(s)], _RANK[type(t)]
    if rs != rt:
        return Ordering.of(rs, rt)
    if isinstance(s, Eps):
        return _base_cmp(X, s.x, t.x)
    if isinstance(s, Collapse):
        return Ordering.LT if _collapse_lt(X, s, t) else Ordering.GT
    return Ordering.EQ


def _collapse_lt(X, s: Collapse, t: Collapse) -> bool:
    a, b = s.body, t.body
    if _cmp(X, a, b) is Ordering.LT and all(
        _cmp(X, c, t) is Ordering.LT for c in theta_coefficients(a)
    ):
        return True
    return any(_cmp(X, s, c) is not Ordering.GT for c in theta_coefficients(b))


# -- functoriality -----------------------------------------------------------

Embedding = Union[Mapping, Callable]


def _apply(h, x):
    return h[x] if isinstance(h, Mapping) else h(x)


def eps_indices(t: ThetaTerm) -> set:
    if isinstance(t, Eps):
        return {t.x}
    if isinstance(t, (Pow, Collapse)):
        return eps_indices(t.body)
    if isinstance(t, SumOf):
        out = set()
        for p in t.parts:
            out |= eps_indices(p)
        return out
    return set()


def _substitute(t, image):
    if isinstance(t, Eps):
        return Eps(image[t.x])
    if isinstance(t, Pow):
        return Pow(_substitute(t.body, image))
    if isinstance(t, Collapse):
        return Collapse(_substitute(t.body, image))
    if isinstance(t, SumOf):
        return SumOf(tuple(_substitute(p, image) for p in t.parts))
    return t


def theta_lift(
    h: Embedding, t: ThetaTerm, source: BaseOrder, target: Optional[BaseOrder] = None
) -> ThetaTerm:
    """Replace every ``Eps(x)`` in ``t`` by ``Eps(h(x))``."""
    target = source if target is None else target
    _require(source, t)
    xs = list(eps_indices(t))
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
    return _substitute(t, image)


# -- enumeration and sampling --------------------------------------------------


def theta_terms(X: BaseOrder, max_size: int, bound: int = 2) -> list:
    """All valid terms with at most ``max_size`` nodes.

    Eps indices range over ``elements(X, bound)``.
    """
    return [t for n in range(1, max_size + 1) for t in _terms_of_size(X, n, bound)]


def _terms_of_size(X, n, bound):
    return _terms_cached(X, n, bound)


@lru_cache(maxsize=None)
def _terms_cached(X, n, bound) -> tuple:
    if n == 1:
        return (Zero(), BigOmega()) + tuple(Eps(x) for x in elements(X, bound))
    out = []
    for b in _terms_cached(X, n - 1, bound):
        if not isinstance(b, _FIXED):
            out.append(Pow(b))
        out.append(Collapse(b))
    # sums: parts sizes add up to n - 1, at least two parts
    for parts in _principal_sequences(X, n - 1, bound, None):
        if len(parts) >= 2:
            out.append(SumOf(parts))
    return tuple(out)


def _principal_sequences(X, budget, bound, ceiling):
    """Weakly decreasing tuples of principal terms of total size ``budget``,
    each part at most ``ceiling``."""
    if budget == 0:
        yield ()
        return
    for k in range(1, budget + 1):
        for p in _terms_cached(X, k, bound):
            if not isinstance(p, _PRINCIPAL):
                continue
            if ceiling is not None and _cmp(X, p, ceiling) is Ordering.GT:
                continue
            for rest in _principal_sequences(X, budget - k, bound, p):
                yield (p,) + rest


def random_term(rng: random.Random, X: BaseOrder, max_size: int, bound: int = 3) -> ThetaTerm:
    """A random valid term with at most ``max_size`` nodes."""
    els = elements(X, bound)
    while True:
        t = _random_raw(rng, X, els, max_size)
        if t is not None and size(t) <= max_size and theta_validate(X, t):
            return t


def _random_raw(rng, X, els, budget):
    if budget <= 1:
        return rng.choice([Zero(), BigOmega()] + [Eps(x) for x in els])
    kind = rng.choice(["atom", "pow", "collapse", "collapse", "sum"])
    if kind == "atom":
        return _random_raw(rng, X, els, 1)
    if kind in ("pow", "collapse"):
        body = _random_raw(rng, X, els, budget - 1)
        if body is None:
            return None
        if kind == "pow":
            return None if isinstance(body, _FIXED) else Pow(body)
        return Collapse(body)
    if budget < 3:
        return None
    parts = []
    left = budget - 1
    while left >= 1 and len(parts) < 3:
        k = rng.randint(1, left)
        p = _random_raw(rng, X, els, k)
        if p is None:
            return None
        parts.extend(_parts(p) if not isinstance(p, SumOf) else p.parts)
        left -= size(p)
    if len(parts) < 2:
        return None
    from functools import cmp_to_key

    parts.sort(key=cmp_to_key(lambda a, b: int(_cmp(X, b, a))))
    return SumOf(tuple(parts))


# -- descent probe ------------------------------------------------------------


def theta_descend_search(
    X: BaseOrder, budget: int, frontier_size: int = 3, bound: int = 3
) -> Optional[list]:
    """Try to exhibit a strictly descending chain of length ``budget``.

    With a descending sequence in X, returns the Eps terms along it.
    Otherwise searches small terms ``t`` and shift maps ``h`` of X for a step
    ``lift(h, t) < t``; iterating such a step never terminates, so a hit is a
    genuine ill-foundedness certificate.  Returns None when nothing is found,
    which is evidence for well-foundedness, never a proof.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    d = base_descent(X)
    if d is not None:
        chain = [Eps(d(i)) for i in range(budget)]
    else:
        chain = _frontier_chain(X, budget, frontier_size, bound)
    if chain is None:
        return None
    if not all(_cmp(X, chain[i + 1], chain[i]) is Ordering.LT for i in range(len(chain) - 1)):
        raise AssertionError("descent probe produced a non-descending chain")
    return chain


def _frontier_chain(X, budget, frontier_size, bound):
    frontier = theta_terms(X, frontier_size, bound)
    for h in translations(X):
        for t in frontier:
            if not eps_indices(t):
                continue
            nxt = theta_lift(h, t, X)
            if _cmp(X, nxt, t) is Ordering.LT:
                chain = [t]
                while len(chain) < budget:
                    chain.append(theta_lift(h, chain[-1], X))
                return chain
    return None
