"""Countable linear orders given as finite sums of 1, w, w* and eta.

Embedding ``t`` into ``s`` (atoms ``a_1..a_m`` and ``b_1..b_n``)
------------------------------------------------------------------
Without loss of generality every infinite source atom lands inside a single
target atom:

* w: an embedding of w into finitely many consecutive target atoms sends a
  tail of w into one atom B, which must contain a copy of w (B is w or eta).
  Moving the finite head into B as well keeps the map order preserving,
  since n + w = w.
* w*: dual argument with w* + n = w*.
* eta: a convex piece of eta with two points contains a copy of eta, so the
  scattered atoms 1, w, w* receive at most one point each and the rest lies
  in eta atoms.  Sending all of eta into the first eta atom it meets only
  shrinks the other chunks.

Ones may be spread over several target atoms point by point.  An embedding is
therefore a monotone assignment of source atoms (and single ones) to target
atoms such that every chunk embeds into its atom:

======  =====================================================
target  admissible chunk
======  =====================================================
1 (xk)  at most k ones
w       ones, optionally followed by one final w (type <= w)
w*      optionally one leading w*, then ones (type <= w*)
eta     anything
======  =====================================================

The admissible chunks of an atom form a chain under the prefix order, and
having consumed more of the source never hurts, so the decision recursion
only needs to try the empty chunk and the longest admissible chunk.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence

OMEGA = "w"
OMEGA_STAR = "w*"
ETA = "q"

_LIMIT_ATOMS = (OMEGA, OMEGA_STAR, ETA)


@dataclass(frozen=True)
class OrderTerm:
    """Canonical sum of atoms; an ``int`` entry is a maximal run of ones."""

    atoms: tuple

    def __post_init__(self):
        if not self.atoms:
            raise ValueError("the empty order is not an OrderTerm")
        for i, a in enumerate(self.atoms):
            if isinstance(a, int) and not isinstance(a, bool):
                if a < 1:
                    raise ValueError(f"run length must be positive, got {a}")
                if i and isinstance(self.atoms[i - 1], int):
                    raise ValueError("adjacent runs of ones must be merged")
            elif a not in _LIMIT_ATOMS:
                raise ValueError(f"unknown atom {a!r}")

    def __add__(self, other: "OrderTerm") -> "OrderTerm":
        return order_term(*self.atoms, *other.atoms)

    def __len__(self):
        return len(self.atoms)


def order_term(*atoms) -> OrderTerm:
    """Build a canonical term, merging consecutive ones; ``1`` is a single one."""
    out = []
    for a in atoms:
        if isinstance(a, int):
            if a == 0:
                continue
            if out and isinstance(out[-1], int):
                out[-1] += a
                continue
        out.append(a)
    return OrderTerm(tuple(out))


def fin(k: int) -> OrderTerm:
    return OrderTerm((k,))


W = OrderTerm((OMEGA,))
WSTAR = OrderTerm((OMEGA_STAR,))
Q = OrderTerm((ETA,))


# -- embeddability -------------------------------------------------------------


def _longest_chunk(src: tuple, i: int, used: int, b) -> tuple:
    """Position after the longest prefix of src[i:] (minus ``used`` ones of a
    leading run) that embeds into the single target atom ``b``."""
    a = src[i]
    if b == ETA:
        return len(src), 0
    if isinstance(b, int):
        if not isinstance(a, int):
            return i, used
        used += min(b, a - used)
        return (i + 1, 0) if used == a else (i, used)
    if b == OMEGA:
        if isinstance(a, int):
            i, a = i + 1, (src[i + 1] if i + 1 < len(src) else None)
        if a == OMEGA:
            i += 1
        return i, 0
    # b == OMEGA_STAR
    if a == OMEGA_STAR:
        i += 1
        a = src[i] if i < len(src) else None
    if isinstance(a, int):
        i += 1
    return i, 0


def embeds(t: OrderTerm, s: OrderTerm) -> bool:
    """Decide whether the order denoted by ``t`` embeds into that of ``s``."""
    return _embeds(t.atoms, s.atoms)


@lru_cache(maxsize=1 << 16)
def _embeds(src: tuple, tgt: tuple) -> bool:
    @lru_cache(maxsize=None)
    def go(i: int, used: int, j: int) -> bool:
        if i == len(src):
            return True
        if j == len(tgt):
            return False
        if go(i, used, j + 1):
            return True
        ni, nused = _longest_chunk(src, i, used, tgt[j])
        return (ni, nused) != (i, used) and go(ni, nused, j + 1)

    return go(0, 0, 0)


# -- finite suborder patterns --------------------------------------------------

NONEMPTY, ASC, DESC, DENSE = 1, 2, 4, 8


def _atom_layouts(a, c: int) -> list:
    """Maximal gap descriptors for ``c`` points placed inside atom ``a``.

    Returns a list of alternatives, each a list of ``c + 1`` bitmasks
    (before the first point, between points, after the last).  For ``c = 0``
    the single entry describes the whole atom.
    """
    if a == ETA:
        return [[NONEMPTY | ASC | DESC | DENSE] * (c + 1)]
    if a == OMEGA:
        if c == 0:
            return [[NONEMPTY | ASC]]
        return [[NONEMPTY] * c + [NONEMPTY | ASC]]
    if a == OMEGA_STAR:
        if c == 0:
            return [[NONEMPTY | DESC]]
        return [[NONEMPTY | DESC] + [NONEMPTY] * c]
    if c > a:
        return []
    spare = a - c
    if c == 0:
        return [[NONEMPTY]]
    if spare >= c + 1:
        return [[NONEMPTY] * (c + 1)]
    layouts = []
    for bits in product((0, NONEMPTY), repeat=c + 1):
        if sum(1 for x in bits if x) == spare:
            layouts.append(list(bits))
    return layouts


def _compositions(k: int, m: int):
    if m == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in _compositions(k - first, m - 1):
            yield (first,) + rest


@lru_cache(maxsize=4096)
def suborder_patterns(atoms: tuple, k: int) -> frozenset:
    """Maximal gap patterns of ``k``-point suborders of the term ``atoms``.

    A pattern lists, for the ``k + 1`` gaps around the chosen points, which
    embedding-monotone properties the gap has: nonempty, contains w,
    contains w*, contains eta.
    """
    out = set()
    for counts in _compositions(k, len(atoms)):
        per_atom = [_atom_layouts(a, c) for a, c in zip(atoms, counts)]
        if any(not alts for alts in per_atom):
            continue
        for choice in product(*per_atom):
            gaps = []
            current = 0
            for c, layout in zip(counts, choice):
                if c == 0:
                    current |= layout[0]
                    continue
                gaps.append(current | layout[0])
                gaps.extend(layout[1:-1])
                current = layout[-1]
            gaps.append(current)
            out.add(tuple(gaps))
    return frozenset(out)


def finite_suborder_check(t: OrderTerm, s: OrderTerm, k: int) -> bool:
    """Necessary condition for ``embeds(t, s)``: every ``k``-point pattern of
    ``t`` is dominated by one of ``s``.  False refutes embeddability."""
    if not 0 <= k <= 6:
        raise ValueError("pattern size must be between 0 and 6")
    pats_s = suborder_patterns(s.atoms, k)
    for p in suborder_patterns(t.atoms, k):
        if not any(all(g & ~h == 0 for g, h in zip(p, q)) for q in pats_s):
            return False
    return True


# -- Fraisse pairs --------------------------------------------------------------


def fraisse_pair(L: Sequence[OrderTerm]) -> Optional[tuple]:
    """Lexicographically least ``(i, j)`` with ``i < j`` and L[i] embedding into L[j]."""
    for i in range(len(L)):
        for j in range(i + 1, len(L)):
            if embeds(L[i], L[j]):
                return (i, j)
    return None


def term_pool(max_atoms: int) -> list:
    """All distinct canonical terms with at most ``max_atoms`` atoms over
    {1, w, w*, eta} (a run of ones counting one atom per one)."""
    seen = {}
    for n in range(1, max_atoms + 1):
        for combo in product((1, OMEGA, OMEGA_STAR, ETA), repeat=n):
            t = order_term(*combo)
            seen.setdefault(t, None)
    return list(seen)
