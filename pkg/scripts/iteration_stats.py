"""Histogram of Gauss-reduction iteration counts on random solution modules."""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from quatideal.hurwitz import HurwitzQuaternion
from quatideal.orders import all_three_squares, is_squarefree
from quatideal.solutions import iteration_cap, minimal_vector, solve


def random_module(rng, mmax):
    while True:
        m = rng.randint(2, mmax)
        if m % 8 == 7 or m % 4 == 0 or not is_squarefree(m):
            continue
        reps = all_three_squares(m)
        mu = HurwitzQuaternion(0, *(2 * t for t in rng.choice(reps)))
        x, y, z = rng.sample(rng.choice(reps), 3)
        nu = HurwitzQuaternion(0, *(2 * rng.choice((1, -1)) * t for t in (x, y, z)))
        return solve(mu, nu)


@dataclass(frozen=True)
class StatsConfig:
    count: int = 10_000
    max_m: int = 10_000
    seed: int = 0


def parse_args(argv=None) -> StatsConfig:
    d = StatsConfig()
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=d.count)
    ap.add_argument("--max-m", type=int, default=d.max_m)
    ap.add_argument("--seed", type=int, default=d.seed)
    args = ap.parse_args(argv)
    return StatsConfig(args.count, args.max_m, args.seed)


def main():
    cfg = parse_args()
    rng = random.Random(cfg.seed)
    hist = Counter()
    over = 0
    for _ in range(cfg.count):
        sm = random_module(rng, cfg.max_m)
        _, it = minimal_vector(sm, with_iterations=True)
        hist[it] += 1
        over += it > iteration_cap(max(sm.upsilon.norm(), sm.upsilon1.norm()))
    for k in sorted(hist):
        print(f"{k:>3} iterations: {hist[k]}")
    print(f"over the cap: {over}")


if __name__ == "__main__":
    main()
