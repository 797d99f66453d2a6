"""Text forms for base orders, elements and the three term languages.

=================  ================================================
base orders        ``fin:3``, ``omega``, ``omega*``, ``lex(X,Y)``
elements           ``3``, ``(1,0)``, ``((0,2),1)``
omega(X) terms     ``w(e1 e2 ...)``, empty term ``w()``
theta terms        ``0``, ``W``, ``e(x)``, ``p(t)``, ``s(t1 t2 ...)``, ``th(t)``
order terms        ``1``, ``n:k``, ``w``, ``w*``, ``q`` joined by ``+``
=================  ================================================
"""

from __future__ import annotations

from .bqo import StabilizingArray
from .core import ParseError
from .fraisse import ETA, OMEGA, OMEGA_STAR, OrderTerm, order_term
from .omega import OmegaTerm
from .orders import BaseOrder, Fin, LexPair, Omega, OmegaStar
from .theta import BigOmega, Collapse, Eps, Pow, SumOf, ThetaTerm, Zero


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, lit: str) -> bool:
        self.skip()
        return self.text.startswith(lit, self.pos)

    def accept(self, lit: str) -> bool:
        if self.peek(lit):
            self.pos += len(lit)
            return True
        return False

    def expect(self, lit: str):
        if not self.accept(lit):
            self.fail(repr(lit))

    def natural(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("a natural number")
        return int(self.text[start:self.pos])

    def end(self):
        self.skip()
        if self.pos != len(self.text):
            self.fail("end of input")

    def fail(self, expected: str):
        raise ParseError(self.text, self.pos, expected)


def _whole(parse):
    def run(text: str):
        sc = _Scanner(text)
        value = parse(sc)
        sc.end()
        return value

    run.__name__ = parse.__name__.lstrip("_")
    return run


# -- base orders and elements ------------------------------------------------------


def _base_order(sc: _Scanner) -> BaseOrder:
    if sc.accept("fin:"):
        return Fin(sc.natural())
    if sc.accept("omega*"):
        return OmegaStar()
    if sc.accept("omega"):
        return Omega()
    if sc.accept("lex("):
        left = _base_order(sc)
        sc.expect(",")
        right = _base_order(sc)
        sc.expect(")")
        try:
            return LexPair(left, right)
        except ValueError:
            sc.fail("lexicographic nesting of depth at most 4")
    sc.fail("'fin:', 'omega', 'omega*' or 'lex('")


def _element(sc: _Scanner):
    if sc.accept("("):
        a = _element(sc)
        sc.expect(",")
        b = _element(sc)
        sc.expect(")")
        return (a, b)
    return sc.natural()


parse_base_order = _whole(_base_order)
parse_element = _whole(_element)


def format_base_order(X: BaseOrder) -> str:
    if isinstance(X, Fin):
        return f"fin:{X.n}"
    if isinstance(X, Omega):
        return "omega"
    if isinstance(X, OmegaStar):
        return "omega*"
    return f"lex({format_base_order(X.left)},{format_base_order(X.right)})"


def format_element(a) -> str:
    if isinstance(a, tuple):
        return f"({format_element(a[0])},{format_element(a[1])})"
    return str(a)


# -- omega(X) terms -------------------------------------------------------------


def _omega_term(sc: _Scanner) -> OmegaTerm:
    sc.expect("w(")
    xs = []
    while not sc.accept(")"):
        if sc.pos >= len(sc.text):
            sc.fail("an exponent or ')'")
        xs.append(_element(sc))
    return OmegaTerm(tuple(xs))


parse_omega = _whole(_omega_term)


def format_omega(t: OmegaTerm) -> str:
    return "w(" + " ".join(format_element(x) for x in t.exponents) + ")"


# -- theta terms ----------------------------------------------------------------


def _theta_term(sc: _Scanner) -> ThetaTerm:
    if sc.accept("0"):
        return Zero()
    if sc.accept("W"):
        return BigOmega()
    if sc.accept("e("):
        x = _element(sc)
        sc.expect(")")
        return Eps(x)
    if sc.accept("th("):
        body = _theta_term(sc)
        sc.expect(")")
        return Collapse(body)
    if sc.accept("p("):
        body = _theta_term(sc)
        sc.expect(")")
        return Pow(body)
    if sc.accept("s("):
        parts = []
        while not sc.accept(")"):
            if sc.pos >= len(sc.text):
                sc.fail("a term or ')'")
            parts.append(_theta_term(sc))
        return SumOf(tuple(parts))
    sc.fail("'0', 'W', 'e(', 'p(', 's(' or 'th('")


parse_theta = _whole(_theta_term)


def format_theta(t: ThetaTerm) -> str:
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, BigOmega):
        return "W"
    if isinstance(t, Eps):
        return f"e({format_element(t.x)})"
    if isinstance(t, Pow):
        return f"p({format_theta(t.body)})"
    if isinstance(t, Collapse):
        return f"th({format_theta(t.body)})"
    return "s(" + " ".join(format_theta(p) for p in t.parts) + ")"


# -- order terms ----------------------------------------------------------------


def _order_atom(sc: _Scanner):
    if sc.accept("n:"):
        k = sc.natural()
        if k == 0:
            sc.fail("a positive run length")
        return k
    if sc.accept("w*"):
        return OMEGA_STAR
    if sc.accept("w"):
        return OMEGA
    if sc.accept("q"):
        return ETA
    if sc.accept("1"):
        return 1
    sc.fail("'1', 'n:', 'w', 'w*' or 'q'")


def _order_term(sc: _Scanner) -> OrderTerm:
    atoms = [_order_atom(sc)]
    while sc.accept("+"):
        atoms.append(_order_atom(sc))
    return order_term(*atoms)


parse_order = _whole(_order_term)


def format_order(t: OrderTerm) -> str:
    out = []
    for a in t.atoms:
        if isinstance(a, int):
            out.append("1" if a == 1 else f"n:{a}")
        else:
            out.append(a)
    return "+".join(out)


# -- array files ----------------------------------------------------------------


def _header_fields(words: list, line_no: int) -> dict:
    known = {"window", "depth", "guard", "colors", "uniform"}
    if len(words) % 2:
        raise ParseError(" ".join(words), 0, f"key/value pairs on line {line_no}")
    out = {}
    for key, val in zip(words[::2], words[1::2]):
        if key not in known:
            raise ParseError(" ".join(words), 0, f"one of {sorted(known)} on line {line_no}")
        if not val.isdigit():
            raise ParseError(" ".join(words), 0, f"a natural number after {key!r}")
        out[key] = int(val)
    return out


def read_array(text: str) -> StabilizingArray:
    """Parse the array file format.

    The header ``window M depth D guard g colors q`` (optionally followed by
    ``uniform d``, on the same or the next line) precedes data lines
    ``<subset> <value>``.  ``#`` starts a comment.
    """
    header: dict = {}
    values: dict = {}
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] in ("window", "uniform") and not values:
            header.update(_header_fields(words, no))
            continue
        if not header:
            raise ParseError(raw, 0, "a header line starting with 'window'")
        for w in words:
            if not w.isdigit():
                raise ParseError(raw, raw.index(w), f"naturals on line {no}")
        *subset, value = map(int, words)
        key = tuple(subset)
        if any(b <= a for a, b in zip(key, key[1:])):
            raise ParseError(raw, 0, f"a strictly increasing subset on line {no}")
        values[key] = value
    missing = {"window", "depth", "guard", "colors"} - header.keys()
    if missing:
        raise ParseError(text[:40], 0, "header fields " + ", ".join(sorted(missing)))
    try:
        return StabilizingArray(
            header["window"], header["depth"], header["guard"], header["colors"],
            values, header.get("uniform"),
        )
    except ValueError as e:
        raise ParseError(text[:40], 0, str(e)) from None


def dump_array(A: StabilizingArray) -> str:
    """Inverse of ``read_array`` for table-backed arrays."""
    if callable(A.values):
        raise ValueError("only table-backed arrays can be written")
    head = f"window {A.window} depth {A.depth} guard {A.guard} colors {A.colors}"
    if A.uniform is not None:
        head += f" uniform {A.uniform}"
    lines = [head]
    for s in sorted(A.values, key=lambda s: (len(s), s)):
        lines.append(" ".join(map(str, s + (A.values[s],))))
    return "\n".join(lines) + "\n"
