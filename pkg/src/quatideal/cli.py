"""Command line front end.  Every subcommand prints JSON on stdout.

Exit status: 0 on success, 1 when the input is mathematically invalid,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import experiments as ex
from . import factor as fa
from . import forms, ideals, orders, solutions
from .hurwitz import HurwitzQuaternion


class UsageError(Exception):
    pass


def _triple(text: str) -> tuple[int, int, int]:
    parts = [int(p) for p in text.split(",")]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected x,y,z, got {text!r}")
    return tuple(parts)


def _pair(text: str) -> tuple[int, int]:
    parts = [int(p) for p in text.split(",")]
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected a,b, got {text!r}")
    return tuple(parts)


def _order(args) -> orders.QuadraticOrder:
    o = orders.make_order(*args.mu)
    if args.m is not None and args.m != o.m:
        raise ValueError(f"x^2 + y^2 + z^2 = {o.m}, not {args.m}")
    return o


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _threads(args) -> int:
    env = os.environ.get("QUATIDEAL_THREADS")
    if env:
        return max(1, int(env))
    return args.threads


# ---------------------------------------------------------------------------
# handlers

def cmd_three_squares(args):
    if args.all:
        _emit({"m": args.m, "representations": [list(t) for t in orders.all_three_squares(args.m)]})
    else:
        x, y, z = orders.three_squares(args.m)
        _emit({"m": args.m, "representation": [x, y, z], "text": f"{args.m} = {x}^2 + {y}^2 + {z}^2"})


def cmd_make_order(args):
    o = _order(args)
    _emit({**o.to_json(), "omega": str(o.omega), "sign": orders.sign_of_order(o).value})


def _ideal_report(I: ideals.Ideal) -> dict:
    out = I.to_json()
    out["right_order"] = str(ideals.right_order(I).mu)
    out["identities"] = ideals.check_identities(I.primitive()).to_json()
    return out


def cmd_ideal(args):
    o = _order(args)
    a, b = args.ideal
    I = ideals.ideal(o, a, b)
    action = args.action
    if action == "restore":
        zb = ideals.restore_z_basis(I)
        res = {"rho": str(I.rho), "a": zb.a, "b": zb.b, "b_norm_at_least_a": zb.minimal_norm_b()}
    elif action == "reduce":
        R, iters = ideals.reduce(I, with_iterations=True)
        res = {"input": _ideal_report(I), "reduced": _ideal_report(R), "iterations": iters}
    elif action == "conj":
        res = {"input": _ideal_report(I), "conjugate": _ideal_report(ideals.conjugate_ideal(I))}
    elif action == "mul":
        if args.other is None:
            raise UsageError("ideal mul needs --other a,b")
        J = ideals.ideal(o, *args.other)
        P = ideals.multiply(I, J)
        res = {"product": P.to_json(), "reduced": ideals.reduce(P.primitive()).to_json()}
    elif action == "check":
        res = _ideal_report(I)
        res["ambiguous_ideal"] = ideals.is_ambiguous_ideal(I)
        res["ambiguous_class"] = ideals.is_ambiguous_class(I)
    else:  # left-right
        left = ideals.left_generator(I)
        back = ideals.right_from_left(left, o)
        res = {"right": str(I.rho), "left": str(left), "right_again": str(back), "round_trip": back == I.rho}
    _emit(res)


def cmd_solve_module(args):
    mu = HurwitzQuaternion(0, *(2 * t for t in args.mu))
    mu2 = HurwitzQuaternion(0, *(2 * t for t in args.mu_prime))
    if args.m is not None and mu.norm() != args.m:
        raise ValueError(f"N(mu) = {mu.norm()}, not {args.m}")
    sm = solutions.solve(mu, mu2)
    v, iters = solutions.minimal_vector(sm, with_iterations=True)
    _emit({
        "upsilon": str(sm.upsilon),
        "upsilon1": str(sm.upsilon1),
        "case": sm.case,
        "norm_form": list(solutions.norm_form(sm)),
        "minimal_vector": str(v),
        "minimal_norm": v.norm(),
        "iterations": iters,
    })


def cmd_factor(args):
    m = args.m
    if args.two_squares:
        for w in (1, 2):
            reps = fa.two_square_reps(m, w)
            if len(reps) >= 2:
                (x0, y0), (x1, y1) = reps[0], reps[1]
                _emit(fa.fermat_two_squares(m, x0, y0, x1, y1, weight=w).to_json())
                return
        raise ValueError(f"{m} has fewer than two representations x^2 + y^2 or x^2 + 2y^2")
    if args.pairs:
        wit = fa.factor_by_pairs(m)
    else:
        wit = None
        for rep in ex.counted_reps(m):
            wit = fa.factor_single_rep(*rep)
            if wit is not None:
                break
    if wit is None:
        _emit({"m": m, "factor": None})
        return 1
    _emit(wit.to_json())


def cmd_class_group(args):
    _emit(forms.class_group(args.disc).to_json())


def cmd_class_number(args):
    _emit({"discriminant": args.disc, "h": forms.class_number(args.disc)})


def cmd_census(args):
    res = ex.census(args.limit, threads=_threads(args), progress=True)
    row = res.row.to_json()
    if args.json == "-":
        _emit(row)
    else:
        if args.json:
            with open(args.json, "w") as fh:
                json.dump(row, fh, indent=2)
        print(
            f"N={row['limit']} sigma={row['sigma']} A={row['a']} {row['percent']:.2f}% "
            f"max={row['argmax_m']} ({row['argmax_count']})"
        )
    if args.details:
        with open(args.details, "w", newline="") as fh:
            ex.write_details(res, fh)


def _seed(args):
    o = _order(args)
    a, b = args.ideal
    return ideals.ZBasis(a, b % a, o), o


def cmd_cycle(args):
    seed, o = _seed(args)
    c = ex.walk_cycle(seed, o)
    out = c.to_json()
    try:
        out["separated"] = ex.is_separated(c)
    except ex.UnsignedOrder:
        out["separated"] = None
    if args.order_search:
        out["order"] = _order_of(seed, o, args.order_search)
    _emit(out)


def _order_of(seed, o, method):
    if method == "separation":
        return ex.order_via_separation(seed, o)
    return ex.order_via_bruteforce(seed, o)


def cmd_order_of(args):
    seed, o = _seed(args)
    _emit({"seed": [seed.a, seed.b], "m": o.m, "method": args.method, "order": _order_of(seed, o, args.method)})


# ---------------------------------------------------------------------------

def _order_args(p, ideal=False):
    p.add_argument("--m", type=int)
    p.add_argument("--mu", type=_triple, required=True, help="x,y,z")
    if ideal:
        p.add_argument("--ideal", type=_pair, required=True, help="a,b")


# lets "-4,-2,-1" through as a value instead of an option
_NEGATIVE = re.compile(r"^-\d[\d,-]*$")


class _Parser(argparse.ArgumentParser):
    def __init__(self, *a, **kw):
        super().__init__(*a, **kw)
        self._negative_number_matcher = _NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="quatideal", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("three-squares")
    p.add_argument("m", type=int)
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_three_squares)

    p = sub.add_parser("make-order")
    _order_args(p)
    p.set_defaults(func=cmd_make_order)

    p = sub.add_parser("ideal")
    p.add_argument("action", choices=["restore", "reduce", "conj", "mul", "check", "left-right"])
    _order_args(p, ideal=True)
    p.add_argument("--other", type=_pair, help="second ideal for mul")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("solve-module")
    _order_args(p)
    p.add_argument("--mu-prime", type=_triple, required=True)
    p.set_defaults(func=cmd_solve_module)

    p = sub.add_parser("factor")
    p.add_argument("m", type=int)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--pairs", action="store_true", help="search pairs of representations")
    g.add_argument("--single-rep", action="store_true", help="use rho mu = -mu rho (default)")
    g.add_argument("--two-squares", action="store_true", help="classical two-squares difference")
    p.set_defaults(func=cmd_factor)

    for name, fn in (("class-group", cmd_class_group), ("class-number", cmd_class_number)):
        p = sub.add_parser(name)
        p.add_argument("disc", type=int)
        p.set_defaults(func=fn)

    p = sub.add_parser("census")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--json", metavar="PATH", help="write the summary row as JSON ('-' for stdout)")
    p.add_argument("--details", metavar="PATH", help="per-representation CSV")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("cycle")
    _order_args(p, ideal=True)
    p.add_argument("--order-search", choices=["separation", "bruteforce"])
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("order-of")
    _order_args(p, ideal=True)
    p.add_argument("--method", choices=["separation", "bruteforce"], default="bruteforce")
    p.set_defaults(func=cmd_order_of)
    return ap


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        rc = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return rc or 0


def main() -> None:
    sys.exit(run())
