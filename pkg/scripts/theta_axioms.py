"""Exhaustive strict-total-order check of theta_compare on small terms."""

import argparse
import time
from dataclasses import dataclass
from itertools import product

from fraisse_lab.core import Ordering
from fraisse_lab.orders import Fin
from fraisse_lab.theta import theta_compare, theta_terms


@dataclass
class Config:
    base_size: int = 1
    max_size: int = 5
    bound: int = 2


def main(cfg: Config):
    X = Fin(cfg.base_size)
    t0 = time.perf_counter()
    terms = theta_terms(X, cfg.max_size, cfg.bound)
    rel = {(a, b): theta_compare(X, a, b) for a, b in product(terms, repeat=2)}
    bad = 0
    for a, b in product(terms, repeat=2):
        bad += (rel[a, b] is Ordering.EQ) != (a == b)
        bad += rel[b, a] is not rel[a, b].flip()
    below = {a: {b for b in terms if rel[b, a] is Ordering.LT} for a in terms}
    bad += sum(not below[b] <= below[a] for a in terms for b in below[a])
    print(f"{len(terms)} terms over {X}, {bad} violations, {time.perf_counter() - t0:.1f}s")
    return bad


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--base-size", type=int, default=Config.base_size)
    p.add_argument("--max-size", type=int, default=Config.max_size)
    p.add_argument("--bound", type=int, default=Config.bound)
    a = p.parse_args()
    raise SystemExit(main(Config(a.base_size, a.max_size, a.bound)) != 0)
