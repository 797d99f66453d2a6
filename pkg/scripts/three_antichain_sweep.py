"""Run the three-antichain extraction on seeded random arrays and tally which
branch produced the witness."""

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from fraisse_lab.bqo import fbar, hashed_array, random_uniform_array, three_antichain_extraction
from fraisse_lab.core import WindowExhausted


@dataclass
class Config:
    arrays: int = 1000
    window: int = 50
    guard: int = 2
    seed: int = 0


def arrays(cfg: Config):
    for i in range(cfg.arrays):
        seed = cfg.seed + i
        if i % 2 == 0:
            rng = random.Random(seed)
            d = rng.choice([1, 2])
            yield f"uniform d={d}", random_uniform_array(rng, cfg.window, d, 3)
        else:
            yield f"general k={seed % 3}", hashed_array(seed, cfg.window, seed % 3, cfg.guard, 3)


def main(cfg: Config):
    t0 = time.perf_counter()
    tally, bad = Counter(), 0
    for kind, A in arrays(cfg):
        try:
            ex = three_antichain_extraction(A)
        except WindowExhausted:
            tally[kind, "exhausted"] += 1
            continue
        bad += fbar(A, ex.witness) != fbar(A, ex.witness[1:])
        tally[kind, ex.case] += 1
    for (kind, case), n in sorted(tally.items()):
        print(f"{kind:14s} {case:10s} {n}")
    print(f"{bad} bad witnesses, {time.perf_counter() - t0:.1f}s")
    return bad


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    for f in ("arrays", "window", "guard", "seed"):
        p.add_argument(f"--{f}", type=int, default=getattr(Config, f))
    a = p.parse_args()
    raise SystemExit(main(Config(a.arrays, a.window, a.guard, a.seed)) != 0)
