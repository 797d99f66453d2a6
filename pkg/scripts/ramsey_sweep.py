"""Homogeneous-set search over every 2-coloring of pairs of a small window.

Prints, for each target size, how many colorings admit a homogeneous set.
With window 6 every coloring has a homogeneous triple; for window 5 the
pentagon coloring is the classical exception.
"""

import argparse
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from fraisse_lab.bqo import StabilizingArray, cofinite_homogeneous_search, verify_homogeneous


@dataclass
class Config:
    window: int = 6
    max_target: int = 4
    jobs: int = 1


def main(cfg: Config):
    pairs = list(combinations(range(cfg.window), 2))
    found = Counter()
    total = 1 << len(pairs)
    for bits in range(total):
        table = {p: (bits >> i) & 1 for i, p in enumerate(pairs)}
        A = StabilizingArray(cfg.window, 2, 1, 2, table, uniform=2)
        for target in range(3, cfg.max_target + 1):
            hit = cofinite_homogeneous_search(A, target, cfg.jobs)
            if hit is not None:
                assert verify_homogeneous(A, hit[0])
                found[target] += 1
    for target in range(3, cfg.max_target + 1):
        print(f"window {cfg.window} target {target}: {found[target]}/{total} colorings")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--window", type=int, default=Config.window)
    p.add_argument("--max-target", type=int, default=Config.max_target)
    p.add_argument("--jobs", type=int, default=Config.jobs)
    a = p.parse_args()
    main(Config(a.window, a.max_target, a.jobs))
