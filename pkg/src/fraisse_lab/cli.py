"""Command line front end.

Every subcommand prints one JSON record per query with the fields
``command``, ``digest``, ``status`` (found / none / error), ``witness``,
``verified`` and ``elapsed_ms``.  Exit status: 0 found, 1 none, 2 bad input,
3 window exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Optional

from . import bqo, fraisse, omega, theta
from .core import FraisseLabError, Ordering, WindowExhausted
from .orders import Fin, base_descent
from .syntax import (
    format_omega,
    format_theta,
    parse_base_order,
    parse_omega,
    parse_order,
    parse_theta,
    read_array,
)

EXIT_FOUND, EXIT_NONE, EXIT_INPUT, EXIT_EXHAUSTED = 0, 1, 2, 3


@dataclass
class Report:
    status: str
    witness: Any = None
    verified: bool = False
    extra: dict = field(default_factory=dict)


# -- subcommands ------------------------------------------------------------------


def _compare(args, parse, compare) -> Report:
    X = parse_base_order(args.base)
    s, t = parse(args.left), parse(args.right)
    c = compare(X, s, t)
    back = compare(X, t, s)
    return Report("found", c.name, back is c.flip())


def cmd_compare_omega(args) -> Report:
    return _compare(args, parse_omega, omega.omega_compare)


def cmd_compare_theta(args) -> Report:
    return _compare(args, parse_theta, theta.theta_compare)


def cmd_enumerate_omega(args) -> Report:
    X = parse_base_order(args.base)
    if not isinstance(X, Fin):
        raise _input_error("enumeration needs a base of the form fin:n")
    terms = omega.omega_enumerate(X, args.budget)
    ok = all(
        omega.omega_compare(X, a, b) is Ordering.LT for a, b in zip(terms, terms[1:])
    )
    return Report("found", [format_omega(t) for t in terms], ok)


def cmd_descend(args) -> Report:
    X = parse_base_order(args.base)
    if args.system == "omega":
        d = base_descent(X)
        if d is None:
            return Report("none")
        scheme = omega.omega_descend_lift(X, d)
        chain = scheme.take(args.budget)
        return Report("found", [format_omega(t) for t in chain], scheme.verify(args.budget))
    chain = theta.theta_descend_search(X, args.budget)
    if chain is None:
        return Report("none")
    ok = all(theta.theta_lt(X, b, a) for a, b in zip(chain, chain[1:]))
    return Report("found", [format_theta(t) for t in chain], ok)


def cmd_embed(args) -> Report:
    t, s = parse_order(args.source), parse_order(args.target)
    verdict = fraisse.embeds(t, s)
    # a positive verdict must survive the finite pattern refuter
    ok = (not verdict) or fraisse.finite_suborder_check(t, s, 3)
    return Report("found", verdict, ok)


def cmd_fraisse(args) -> Report:
    L = [parse_order(x) for x in args.orders]
    pair = fraisse.fraisse_pair(L)
    if pair is None:
        return Report("none")
    i, j = pair
    return Report("found", [i, j], fraisse.embeds(L[i], L[j]))


def _array(args) -> bqo.StabilizingArray:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            return read_array(fh.read())
    if args.guard is not None:
        return bqo.hashed_array(args.seed, args.window, args.depth, args.guard, args.colors)
    rng = random.Random(args.seed)
    return bqo.random_uniform_array(rng, args.window, args.depth, args.colors)


def cmd_good_pair(args) -> Report:
    A = _array(args)
    if A.colors == 3:
        ex = bqo.three_antichain_extraction(A, args.jobs)
        X = ex.witness
        extra = {"case": ex.case}
    else:
        X = bqo.good_pair_search(A, bqo.QuasiOrder.antichain(A.colors), args.jobs)
        extra = {}
        if X is None:
            return Report("none")
    ok = bqo.fbar(A, X) == bqo.fbar(A, X[1:])
    return Report("found", list(X), ok, extra)


def cmd_ramsey(args) -> Report:
    A = _array(args)
    if A.colors != 2:
        raise _input_error("ramsey needs a 2-coloring")
    hit = bqo.cofinite_homogeneous_search(A, args.target, args.jobs)
    if hit is None:
        return Report("none")
    X, color = hit
    return Report("found", {"set": list(X), "color": color}, bqo.verify_homogeneous(A, X))


def cmd_verify_array(args) -> Report:
    A = _array(args).certify()
    info = {"window": A.window, "depth": A.depth, "guard": A.guard, "colors": A.colors,
            "uniform": A.uniform}
    return Report("found", info, True)


class _InputError(FraisseLabError, ValueError):
    code = "InvalidInput"


def _input_error(msg: str) -> _InputError:
    return _InputError(msg)


# -- parser -----------------------------------------------------------------------

_COMMANDS = {
    "compare-omega": cmd_compare_omega,
    "compare-theta": cmd_compare_theta,
    "enumerate-omega": cmd_enumerate_omega,
    "descend": cmd_descend,
    "embed": cmd_embed,
    "fraisse": cmd_fraisse,
    "good-pair": cmd_good_pair,
    "ramsey": cmd_ramsey,
    "verify-array": cmd_verify_array,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fraisse-lab", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for random inputs")
    common.add_argument("--jobs", type=int, default=1, help="parallelism hint for searches")
    common.add_argument("--no-timing", action="store_true",
                        help="report elapsed_ms as null so output is byte-stable")
    sub = p.add_subparsers(dest="command", required=True)

    for name in ("compare-omega", "compare-theta"):
        c = sub.add_parser(name, parents=[common])
        c.add_argument("--base", default="fin:1")
        c.add_argument("left")
        c.add_argument("right")

    c = sub.add_parser("enumerate-omega", parents=[common])
    c.add_argument("--base", default="fin:1")
    c.add_argument("--budget", type=int, default=10)

    c = sub.add_parser("descend", parents=[common])
    c.add_argument("--system", choices=("omega", "theta"), default="omega")
    c.add_argument("--base", default="omega*")
    c.add_argument("--budget", type=int, default=100)

    c = sub.add_parser("embed", parents=[common])
    c.add_argument("source")
    c.add_argument("target")

    c = sub.add_parser("fraisse", parents=[common])
    c.add_argument("orders", nargs="+")

    for name, window, depth, colors in (("good-pair", 50, 1, 3), ("ramsey", 6, 2, 2),
                                        ("verify-array", 8, 1, 2)):
        c = sub.add_parser(name, parents=[common])
        c.add_argument("--file", help="array file; random array when omitted")
        c.add_argument("--window", type=int, default=window)
        c.add_argument("--depth", type=int, default=depth,
                       help="uniform depth, or stabilization depth when --guard is set")
        c.add_argument("--guard", type=int, default=None,
                       help="build a hashed general array with this guard")
        c.add_argument("--colors", type=int, default=colors)
        if name == "ramsey":
            c.add_argument("--target", type=int, default=3)
    return p


def _digest(args, file_text: Optional[str]) -> str:
    payload = {k: v for k, v in sorted(vars(args).items()) if k not in ("jobs", "no_timing")}
    payload["file_text"] = file_text
    blob = json.dumps(payload, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    file_text = None
    if getattr(args, "file", None):
        try:
            with open(args.file, encoding="utf-8") as fh:
                file_text = fh.read()
        except OSError as e:
            file_text = f"<unreadable: {e.strerror}>"
    t0 = time.perf_counter()
    try:
        rep = _COMMANDS[args.command](args)
        code = EXIT_FOUND if rep.status == "found" else EXIT_NONE
    except WindowExhausted as e:
        rep, code = Report("error", extra={"error": {"code": e.code, "message": str(e)}}), EXIT_EXHAUSTED
    except (FraisseLabError, ValueError, OSError) as e:
        err = {"code": getattr(e, "code", type(e).__name__), "message": str(e)}
        if hasattr(e, "pos"):
            err["position"], err["expected"] = e.pos, e.expected
        rep, code = Report("error", extra={"error": err}), EXIT_INPUT
    elapsed = None if args.no_timing else round((time.perf_counter() - t0) * 1000, 3)
    record = {
        "command": args.command,
        "digest": _digest(args, file_text),
        "status": rep.status,
        "witness": rep.witness,
        "verified": rep.verified,
        "elapsed_ms": elapsed,
        **rep.extra,
    }
    out.write(json.dumps(record, sort_keys=True) + "\n")
    return code


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
