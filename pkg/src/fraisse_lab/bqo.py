"""Finite-window model of eventually constant arrays and their limits.

A finite set is a strictly increasing tuple of naturals.  A window-``M``
array stands for an eventually constant ``f`` on finite subsets of N; infinite
sets are represented by their trace inside ``range(M)``.

Two representations are supported:

* uniform of depth ``d``: ``f(s) = f(s[:d])`` whenever ``len(s) >= d``, so
  ``fbar(X) = f(X[:d])`` exactly.  Values on shorter sets are optional.
* general of table depth ``D`` and guard ``g``: ``f(s) = f(s[:D])`` beyond the
  table.  ``fbar(X) = f(X[:D])`` is accepted only when the chain
  ``X[:D-g], ..., X[:D]`` is constant, which certifies that ``f`` has settled
  along ``X``.

In the uniform model, ``fbar`` is constant on every cofinite subset of X
exactly when ``f`` is constant on the ``d``-subsets of X: any ``d``-subset is
the first ``d`` elements of some cofinite subset of X.
"""

from __future__ import annotations

import hashlib
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .core import NotStabilized, OutOfRange, WindowExhausted

FinSet = tuple


def finset(xs: Iterable[int]) -> FinSet:
    out = tuple(sorted(set(xs)))
    if any(not isinstance(x, int) or x < 0 for x in out):
        raise ValueError(f"finite sets hold naturals, got {out}")
    return out


def finset_initial_segment(s: FinSet, t: FinSet) -> bool:
    """True iff ``s`` is a proper initial segment of ``t``."""
    return len(s) < len(t) and tuple(t[: len(s)]) == tuple(s)


def finset_above(Y: FinSet, s: FinSet) -> FinSet:
    """Elements of ``Y`` above every element of ``s``."""
    if not s:
        return tuple(Y)
    top = max(s)
    return tuple(y for y in Y if y > top)


def finset_drop(Y: FinSet, i: int) -> FinSet:
    """``Y`` without its ``i`` smallest elements."""
    if not 0 <= i <= len(Y):
        raise OutOfRange(f"cannot drop {i} elements from a set of size {len(Y)}")
    return tuple(Y[i:])


@dataclass(frozen=True)
class QuasiOrder:
    size: int
    leq: tuple

    def __post_init__(self):
        n = self.size
        if len(self.leq) != n or any(len(row) != n for row in self.leq):
            raise ValueError("leq must be a size x size table")
        for a in range(n):
            if not self.leq[a][a]:
                raise ValueError(f"not reflexive at {a}")
        for a in range(n):
            for b in range(n):
                if self.leq[a][b]:
                    for c in range(n):
                        if self.leq[b][c] and not self.leq[a][c]:
                            raise ValueError(f"not transitive at {a} <= {b} <= {c}")

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a][b])

    @classmethod
    def antichain(cls, n: int) -> "QuasiOrder":
        return cls(n, tuple(tuple(a == b for b in range(n)) for a in range(n)))

    @classmethod
    def chain(cls, n: int) -> "QuasiOrder":
        return cls(n, tuple(tuple(a <= b for b in range(n)) for a in range(n)))


Values = Union[Mapping, Callable[[tuple], Optional[int]]]


@dataclass(frozen=True)
class StabilizingArray:
    window: int
    depth: int
    guard: int
    colors: int
    values: Values = field(compare=False)
    uniform: Optional[int] = None

    def __post_init__(self):
        if self.window < 0 or self.depth < 0 or self.colors < 1:
            raise ValueError("window, depth and colors must be natural (colors positive)")
        if self.uniform is None:
            if not 1 <= self.guard <= self.depth:
                raise ValueError("guard must lie in 1..depth")
        elif not 0 <= self.uniform <= self.depth:
            raise ValueError("uniform depth must not exceed the table depth")

    # raw table ---------------------------------------------------------------

    def f(self, s: Sequence[int]) -> Optional[int]:
        """Table value on a finite set, None where the table is silent."""
        s = tuple(s)
        cut = self.uniform if self.uniform is not None else self.depth
        if len(s) > cut:
            s = s[:cut]
        if callable(self.values):
            return self.values(s)
        return self.values.get(s)

    @property
    def eval_depth(self) -> int:
        """Least size of a set on which ``fbar`` can be evaluated."""
        return self.depth if self.uniform is None else self.uniform

    @property
    def stable_depth(self) -> int:
        """Depth from which ``f`` is constant along every chain."""
        return self.depth - self.guard if self.uniform is None else self.uniform

    def fbar(self, X: Sequence[int]) -> int:
        return fbar(self, X)

    def recolor(self, fn: Callable[[int], int], colors: int) -> "StabilizingArray":
        """The array ``fn . f`` (undefined entries stay undefined)."""
        base = self.f

        def values(s):
            v = base(s)
            return None if v is None else fn(v)

        return StabilizingArray(self.window, self.depth, self.guard, colors, values, self.uniform)

    def certify(self) -> "StabilizingArray":
        """Check totality and the guard certificate on every set of the window.

        Raises NotStabilized on the first failing set.  Cost grows like
        ``C(window, depth)``; searches rely on the per-set check in ``fbar``.
        """
        M = range(self.window)
        need = self.eval_depth
        for s in combinations(M, need):
            v = self.f(s)
            if v is None or not 0 <= v < self.colors:
                raise NotStabilized(f"no admissible value on {s}")
            if self.uniform is None:
                fbar(self, s)
        if self.uniform is None:
            for n in range(need):
                for s in combinations(M, n):
                    v = self.f(s)
                    if v is None or not 0 <= v < self.colors:
                        raise NotStabilized(f"no admissible value on {s}")
        return self


def _check_set(A: StabilizingArray, X: Sequence[int]) -> tuple:
    X = tuple(X)
    if any(b <= a for a, b in zip(X, X[1:])):
        raise ValueError(f"{X} is not strictly increasing")
    if X and (X[0] < 0 or X[-1] >= A.window):
        raise OutOfRange(f"{X} leaves the window range({A.window})")
    return X


def fbar(A: StabilizingArray, X: Sequence[int]) -> int:
    """The limit value of ``f`` along ``X``."""
    X = _check_set(A, X)
    need = A.eval_depth
    if len(X) < need:
        raise OutOfRange(f"{X} has fewer than {need} elements")
    if A.uniform is not None:
        v = A.f(X[: A.uniform])
    else:
        chain = [A.f(X[:n]) for n in range(A.depth - A.guard, A.depth + 1)]
        if any(v != chain[-1] for v in chain):
            raise NotStabilized(f"f has not settled along {X[:A.depth]}: {chain}")
        v = chain[-1]
    if v is None:
        raise NotStabilized(f"no value recorded for {X[:need]}")
    return v


# -- searches -------------------------------------------------------------------


def _first_hit(branches: Sequence, fn: Callable, jobs: int = 1):
    """First non-None ``fn(b)`` in branch order.  With ``jobs > 1`` branches
    run concurrently; the answer is identical."""
    if jobs <= 1 or len(branches) <= 1:
        for b in branches:
            r = fn(b)
            if r is not None:
                return r
        return None
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        for r in pool.map(fn, branches):
            if r is not None:
                return r
    return None


def good_pair_search(A: StabilizingArray, Q: QuasiOrder, jobs: int = 1) -> Optional[FinSet]:
    """Least ``(k+1)``-subset ``X`` of the window with ``fbar(X) <=_Q fbar(X^-)``.

    ``k`` is the evaluation depth; ``X`` determines both limits, and its
    canonical infinite extension is ``X`` followed by the rest of the window.
    """
    n = A.eval_depth + 1

    def branch(first):
        for rest in combinations(range(first + 1, A.window), n - 1):
            X = (first,) + rest
            if Q.le(fbar(A, X), fbar(A, X[1:])):
                return X
        return None

    return _first_hit(range(A.window), branch, jobs)


def _homogeneous(color: Callable, window: int, k: int, target: int, jobs: int = 1):
    """Lexicographically least ``target``-subset of ``range(window)`` on whose
    ``k``-subsets ``color`` is constant, with that color."""
    if target < k or target > window:
        return None
    if k == 0:
        return tuple(range(target)), color(())

    def add(prefix, e, col):
        """Try ``prefix + (e,)``; on success keep extending upwards."""
        if len(prefix) + 1 >= k:
            for rest in combinations(prefix, k - 1):
                v = color(rest + (e,))
                if col is None:
                    col = v
                elif v != col:
                    return None
        prefix = prefix + (e,)
        if len(prefix) == target:
            return prefix, col
        for nxt in range(e + 1, window - (target - len(prefix)) + 1):
            r = add(prefix, nxt, col)
            if r is not None:
                return r
        return None

    return _first_hit(range(window - target + 1), lambda e: add((), e, None), jobs)


def _limit_coloring(A: StabilizingArray):
    """Depth ``k`` and coloring of ``k``-sets by the limit of ``f`` above them.

    ``k`` is the stable depth: past it ``f`` no longer changes along any
    chain (exactly for uniform arrays, by the guard certificate otherwise),
    so ``f(u)`` is ``fbar`` of every set starting with ``u``.
    """
    k = A.stable_depth
    memo = {}

    def color(u):
        if u not in memo:
            memo[u] = A.f(u)
        return memo[u]

    return k, color


def cofinite_homogeneous_search(
    A: StabilizingArray, target: int, jobs: int = 1
) -> Optional[tuple]:
    """Least ``X`` of size ``target`` with ``fbar`` constant on cofinite
    subsets of ``X``, i.e. ``f`` constant on ``[X]^k``; returns ``(X, color)``."""
    k, color = _limit_coloring(A)
    return _homogeneous(color, A.window, k, target, jobs)


def verify_homogeneous(A: StabilizingArray, X: Sequence[int], d: Optional[int] = None) -> bool:
    """True iff ``f`` is constant on the ``d``-subsets of ``X`` (default: the
    stable depth)."""
    d = A.stable_depth if d is None else d
    return len({A.f(u) for u in combinations(tuple(X), d)}) <= 1


def extend_homogeneous(A: StabilizingArray, X: Sequence[int], color: int) -> FinSet:
    """Greedily add window elements (ascending) that keep ``X`` homogeneous."""
    k, col = _limit_coloring(A)
    if k == 0:
        return tuple(range(A.window))
    Z = list(X)
    for e in range(A.window):
        if e in Z:
            continue
        if all(col(tuple(sorted(rest + (e,)))) == color for rest in combinations(Z, k - 1)):
            Z = sorted(Z + [e])
    return tuple(Z)


def find_stable_root(A: StabilizingArray, Z: Sequence[int]) -> FinSet:
    """Least ``s`` in ``[Z]^{<w}`` (by size, then lexicographically) with
    ``f(t) = f(s)`` for every ``t`` in ``[Z]^{<=D}`` properly extending ``s``.

    Only ``s`` leaving at least ``eval_depth + 1`` elements of ``Z`` above it
    are considered, so that ``fbar`` can be taken on ``Z/s`` and ``(Z/s)^-``.
    """
    Z = _check_set(A, Z)
    table = A.uniform if A.uniform is not None else A.depth
    room = A.eval_depth + 1
    for n in range(len(Z) - room + 1):
        for s in combinations(Z, n):
            above = finset_above(Z, s)
            if len(above) < room:
                continue
            v = A.f(s)
            if v is None:
                continue
            if _is_root(A, s, above, v, table):
                return s
    raise WindowExhausted(f"no stable root inside {Z} (window {A.window})")


def _is_root(A, s, above, v, table) -> bool:
    for m in range(1, max(0, table - len(s)) + 1):
        for u in combinations(above, m):
            if A.f(s + u) != v:
                return False
    return True


@dataclass(frozen=True)
class Extraction:
    """Trace of the three-antichain construction."""

    witness: FinSet
    case: str  # "all-2", "V", "W" or "parity"
    Z: FinSet
    root: Optional[FinSet] = None
    index: Optional[int] = None
    value: Optional[int] = None


def three_antichain_extraction(A: StabilizingArray, jobs: int = 1) -> Extraction:
    """Find ``X`` with ``fbar(X) = fbar(X^-)`` for ``f`` into {0, 1, 2}.

    1. Homogenize the 2-coloring "value is 2" to get Z; if it is 2 on Z,
       take X = Z.
    2. Otherwise pick a stable root s in Z, form V = s + Z/s and
       W = s + (Z/s)^-, and scan adjacent drops V^-i, V^-(i+1) and then
       W^-i, W^-(i+1) for i < |s|.
    3. If every adjacent drop flips the value, the flips along V and W have
       the same parity and fbar(V) = fbar(W), so Z/s itself works.
    """
    if A.colors > 3:
        raise ValueError("the extraction handles at most three values")
    Q = QuasiOrder.antichain(3)
    k = A.eval_depth
    target = A.stable_depth + k + 1
    derived = A.recolor(lambda v: 1 if v == 2 else 0, 2)
    hit = cofinite_homogeneous_search(derived, target, jobs)
    if hit is None:
        raise WindowExhausted(
            f"no homogeneous set of size {target} for the 2-coloring in window {A.window}"
        )
    Z = extend_homogeneous(derived, *hit)
    if hit[1] == 1:
        return _checked(A, Q, Extraction(Z, "all-2", Z, value=2))

    s = find_stable_root(A, Z)
    above = finset_above(Z, s)
    V = s + above
    W = s + above[1:]
    j = len(s)
    for name, U in (("V", V), ("W", W)):
        for i in range(j):
            a, b = fbar(A, U[i:]), fbar(A, U[i + 1 :])
            if a == b:
                return _checked(A, Q, Extraction(U[i:], name, Z, s, i, a))
    X = above
    return _checked(A, Q, Extraction(X, "parity", Z, s, j, fbar(A, X)))


def _checked(A, Q, ex: Extraction) -> Extraction:
    X = ex.witness
    if not Q.le(fbar(A, X), fbar(A, X[1:])):
        raise AssertionError(f"extraction produced a bad witness {X}")
    return ex


def three_antichain_good_pair(A: StabilizingArray, jobs: int = 1) -> FinSet:
    return three_antichain_extraction(A, jobs).witness


# -- array construction -----------------------------------------------------------


def uniform_array(window: int, d: int, colors: int, fn: Callable[[tuple], int],
                  prefixes: bool = False, guard: int = 1) -> StabilizingArray:
    """Tabulate ``fn`` on the ``d``-subsets (and, optionally, smaller sets)."""
    values = {}
    sizes = range(d + 1) if prefixes else [d]
    for n in sizes:
        for s in combinations(range(window), n):
            values[s] = fn(s)
    return StabilizingArray(window, d, guard, colors, values, uniform=d)


def general_array(window: int, depth: int, guard: int, colors: int,
                  fn: Callable[[tuple], int]) -> StabilizingArray:
    """Tabulate ``fn`` on every set of size at most ``depth``."""
    values = {
        s: fn(s) for n in range(depth + 1) for s in combinations(range(window), n)
    }
    return StabilizingArray(window, depth, guard, colors, values)


def random_uniform_array(rng: random.Random, window: int, d: int, colors: int,
                         prefixes: bool = True) -> StabilizingArray:
    return uniform_array(window, d, colors, lambda s: rng.randrange(colors), prefixes)


def _hash_color(seed, s, colors: int) -> int:
    h = hashlib.blake2b(repr((seed, s)).encode(), digest_size=8).digest()
    return int.from_bytes(h, "big") % colors


def hashed_array(seed, window: int, stable: int, guard: int, colors: int) -> StabilizingArray:
    """A general array whose settling point depends on the least element.

    Along a set with minimum ``m`` the values become constant from length
    ``k(m) <= stable`` on, with ``k`` and the values drawn from a keyed hash.
    Table depth is ``stable + guard``.
    """

    def values(s):
        if not s:
            return _hash_color(seed, s, colors)
        k = _hash_color((seed, "k"), s[0], stable + 1)
        return _hash_color(seed, s[:k] if len(s) >= k else s, colors)

    return StabilizingArray(window, stable + guard, guard, colors, values)
