"""Class group structure next to the ambiguous-ideal count M for record-setting m."""

import argparse

from quatideal.experiments import census_table3


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("ms", type=int, nargs="*", default=[21, 105, 645, 2310, 10605])
    args = ap.parse_args()
    print(f"{'m':>7} {'M':>3} {'disc':>8} {'h':>4}  group")
    for r in census_table3(args.ms):
        print(f"{r.m:>7} {r.M:>3} {r.discriminant:>8} {r.h:>4}  {' '.join(map(str, r.elementary_divisors))}")


if __name__ == "__main__":
    main()
