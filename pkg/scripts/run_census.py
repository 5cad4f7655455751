"""Census rows for several limits, optionally with per-representation CSV.

    python3 scripts/run_census.py 1000 10000 --threads 2 --details out/
"""

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from quatideal.experiments import census, write_details


@dataclass(frozen=True)
class RunConfig:
    limits: tuple[int, ...]
    threads: int = 1
    details: str | None = None


def parse_args(argv=None) -> RunConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("limits", type=int, nargs="+")
    ap.add_argument("--threads", type=int, default=int(os.environ.get("QUATIDEAL_THREADS", 1)))
    ap.add_argument("--details", metavar="DIR")
    args = ap.parse_args(argv)
    return RunConfig(tuple(args.limits), args.threads, args.details)


def main():
    args = parse_args()
    for n in args.limits:
        t0 = time.perf_counter()
        res = census(n, threads=args.threads, progress=True)
        row = res.row.to_json()
        row["seconds"] = round(time.perf_counter() - t0, 2)
        print(json.dumps(row))
        if args.details:
            os.makedirs(args.details, exist_ok=True)
            with open(os.path.join(args.details, f"census_{n}.csv"), "w", newline="") as fh:
                write_details(res, fh)
    return 0


if __name__ == "__main__":
    sys.exit(main())
