"""Walk the cycle of an ideal through moved orders and print signs.

    python3 scripts/cycles.py 29,4,6 23,21
    python3 scripts/cycles.py 42,14,1 18,1 --scan 40
"""

import argparse

from quatideal.experiments import (
    NotSeparated,
    UnsignedOrder,
    is_separated,
    order_via_bruteforce,
    order_via_separation,
    walk_cycle,
)
from quatideal.ideals import ZBasis, enumerate_ideals
from quatideal.orders import make_order


def show(seed):
    c = walk_cycle(seed)
    print(f"[{seed.a}, {seed.b} + omega] in {seed.order}: f = {c.length}")
    for i, (mu, s) in enumerate(zip(c.orders, c.signs), 1):
        print(f"  mu_{i:<3} {str(mu):<22} {s.value if s else 'none'}")
    try:
        sep = is_separated(c)
    except UnsignedOrder:
        sep = None
    print(f"  separated: {sep}, order by brute force: {order_via_bruteforce(seed)}")
    if sep:
        print(f"  order from sign borders: {order_via_separation(seed)}")


def scan(o, max_norm):
    """List the separated seeds of small norm."""
    for I in enumerate_ideals(o, max_norm):
        zb = I.zbasis()
        c = walk_cycle(zb)
        try:
            if c.length > 2 and is_separated(c):
                f = order_via_separation(zb)
                print(f"[{zb.a}, {zb.b}]  f = {c.length}  border search = {f}")
        except (UnsignedOrder, NotSeparated) as exc:
            print(f"[{zb.a}, {zb.b}]  f = {c.length}  ({type(exc).__name__})")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("mu")
    ap.add_argument("ideal", nargs="?")
    ap.add_argument("--scan", type=int, metavar="MAX_NORM")
    args = ap.parse_args()
    o = make_order(*map(int, args.mu.split(",")))
    if args.scan:
        scan(o, args.scan)
    if args.ideal:
        a, b = map(int, args.ideal.split(","))
        show(ZBasis(a, b % a, o))


if __name__ == "__main__":
    main()
