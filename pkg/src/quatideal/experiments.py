"""Census of ambiguous ideals from rho*mu = -mu*rho, and cycles of moved orders."""

from __future__ import annotations

import csv
import logging
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from sympy import isprime

from .factor import ambiguous_hits
from .forms import class_group, discriminant_of
from .hurwitz import HurwitzQuaternion
from .ideals import Ideal, ZBasis, conjugate_ideal, gcd_right, moved_mu, multiply, power, reduce, unit_ideal
from .orders import (
    NoSign,
    QuadraticOrder,
    Sign,
    all_three_squares,
    is_squarefree,
    order_from_mu,
    orders_equivalent,
    sign_of_order,
)

log = logging.getLogger(__name__)


class CycleOverrun(RuntimeError):
    pass


class UnsignedOrder(ValueError):
    pass


class NotSeparated(ValueError):
    pass


# ---------------------------------------------------------------------------
# census

def in_sigma(m: int) -> bool:
    """Squarefree, composite and not 7 mod 8 (m = 1 is left out)."""
    return m > 1 and m % 8 != 7 and is_squarefree(m) and not isprime(m)


def counted_reps(m: int) -> list[tuple[int, int, int]]:
    """Representations entering the census: no zero and no repeated coefficient."""
    return [(x, y, z) for x, y, z in all_three_squares(m) if z and x != y and y != z]


@dataclass(frozen=True)
class RepResult:
    m: int
    x: int
    y: int
    z: int
    ambiguous_class_count: int
    factor_found: int | None

    def csv_row(self) -> list:
        return [self.m, self.x, self.y, self.z, self.ambiguous_class_count, self.factor_found or ""]


CSV_HEADER = ["m", "x", "y", "z", "ambiguous_class_count", "factor_found"]


def examine_rep(m: int, x: int, y: int, z: int) -> RepResult:
    mu = HurwitzQuaternion(0, 2 * x, 2 * y, 2 * z)
    hits = ambiguous_hits(mu, -mu)
    # each ambiguous class is pinned down by the splitting {g, m/g} it produces
    splits = {min(g, m // g) for g in (gcd(h.norm, m) for h in hits)}
    factor = gcd(hits[0].norm, m) if hits else None
    return RepResult(m, x, y, z, len(splits), factor)


def examine_m(m: int) -> list[RepResult]:
    return [examine_rep(m, *rep) for rep in counted_reps(m)]


def _examine_block(ms: list[int]) -> list[tuple[int, list[RepResult]]]:
    return [(m, examine_m(m)) for m in ms]


@dataclass(frozen=True)
class CensusRow:
    limit: int
    count_sigma: int
    count_a: int
    argmax_m: int
    argmax_count: int
    example_in_a: tuple | None
    example_outside: int | None

    @property
    def percent(self) -> float:
        return 100.0 * self.count_a / self.count_sigma if self.count_sigma else 0.0

    def to_json(self) -> dict:
        return {
            "limit": self.limit,
            "sigma": self.count_sigma,
            "a": self.count_a,
            "percent": round(self.percent, 2),
            "argmax_m": self.argmax_m,
            "argmax_count": self.argmax_count,
            "example_in_a": list(self.example_in_a) if self.example_in_a else None,
            "example_outside": self.example_outside,
        }


@dataclass
class CensusResult:
    row: CensusRow
    counts: dict = field(default_factory=dict)  # m -> M for m in Sigma
    details: list = field(default_factory=list)  # RepResult, sorted by (m, rep)

    def in_a(self, m: int) -> bool:
        return self.counts.get(m, 0) > 0


def census(limit: int, *, threads: int = 1, progress: bool = False, block: int = 500) -> CensusResult:
    """Table of how many m <= limit get a nontrivial ambiguous ideal from (mu, -mu).

    M(m) is the number of representations of m that produce one.  The work
    is split into blocks of m; with ``threads > 1`` they run in worker
    processes and are merged in m order, so output does not depend on the
    schedule.
    """
    if limit < 10:
        raise ValueError("limit must be at least 10")
    sigma = [m for m in range(2, limit + 1) if in_sigma(m)]
    blocks = [sigma[i:i + block] for i in range(0, len(sigma), block)]
    results: dict[int, list[RepResult]] = {}
    next_report = 10_000

    def absorb(chunk):
        nonlocal next_report
        for m, reps in chunk:
            results[m] = reps
        top = chunk[-1][0] if chunk else 0
        while progress and top >= next_report:
            print(f"census: m = {next_report}", file=sys.stderr, flush=True)
            next_report += 10_000

    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for chunk in pool.map(_examine_block, blocks):
                absorb(chunk)
    else:
        for b in blocks:
            absorb(_examine_block(b))

    counts = {}
    details = []
    best_m, best_c = 0, 0
    ex_in = ex_out = None
    for m in sigma:
        reps = results[m]
        details.extend(reps)
        c = sum(1 for r in reps if r.ambiguous_class_count)
        counts[m] = c
        if c > best_c:
            best_m, best_c = m, c
        if c and ex_in is None:
            first = next(r for r in reps if r.ambiguous_class_count)
            ex_in = (m, first.x, first.y, first.z)
        if not c and ex_out is None:
            ex_out = m
    count_a = sum(1 for c in counts.values() if c)
    row = CensusRow(limit, len(sigma), count_a, best_m, best_c, ex_in, ex_out)
    return CensusResult(row, counts, details)


def write_details(result: CensusResult, stream) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in result.details:
        w.writerow(r.csv_row())


def ambiguous_count(m: int) -> int:
    """M(m) for a single m, without running the whole census."""
    return sum(1 for r in examine_m(m) if r.ambiguous_class_count)


@dataclass(frozen=True)
class Table3Row:
    m: int
    discriminant: int
    h: int
    elementary_divisors: tuple[int, ...]
    M: int

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "discriminant": self.discriminant,
            "h": self.h,
            "elementary_divisors": list(self.elementary_divisors),
            "M": self.M,
        }


def census_table3(ms=(21, 105, 645, 2310, 10605)) -> list[Table3Row]:
    rows = []
    for m in ms:
        disc = discriminant_of(m)
        cg = class_group(disc)
        rows.append(Table3Row(m, disc, cg.h, cg.elementary_divisors, ambiguous_count(m)))
    return rows


# ---------------------------------------------------------------------------
# cycles

def class_number_bound(m: int) -> int:
    d = abs(discriminant_of(m))
    return math.ceil(math.sqrt(d) * math.log(d) / math.pi)


@dataclass(frozen=True)
class Cycle:
    seed: ZBasis
    orders: tuple[HurwitzQuaternion, ...]
    signs: tuple

    @property
    def length(self) -> int:
        return len(self.orders)

    def to_json(self) -> dict:
        return {
            "seed": [self.seed.a, self.seed.b],
            "m": self.seed.order.m,
            "f": self.length,
            "orders": [str(mu) for mu in self.orders],
            "signs": [s.value if isinstance(s, Sign) else None for s in self.signs],
        }


def _sign_or_none(mu):
    try:
        return sign_of_order(mu)
    except NoSign:
        log.warning("order O(%s) has no sign", mu)
        return None


def walk_cycle(seed: ZBasis, o: QuadraticOrder | None = None) -> Cycle:
    """Move ``[a, b + omega]`` from order to order until it comes back.

    a and b stay fixed; only omega changes.  Step i takes
    ``rho_i = gcd_r(a, b + omega_i)`` and ``mu_{i+1} = rho_i mu_i rho_i^-1``.
    """
    o = seed.order if o is None else o
    a, b = seed.a, seed.b
    bound = class_number_bound(o.m)
    mus = [o.mu]
    cur = o
    while True:
        rho = gcd_right(a, cur.omega + b)
        if rho.norm() != a:
            raise CycleOverrun(f"[{a}, {b} + omega] is not an ideal of {cur}")
        nxt = moved_mu(rho, cur.mu)
        if orders_equivalent(nxt, o.mu):
            break
        mus.append(nxt)
        if len(mus) > bound:
            raise CycleOverrun(f"no return to {o} within {bound} steps")
        cur = order_from_mu(nxt)
    signs = tuple(_sign_or_none(mu) for mu in mus)
    return Cycle(seed, tuple(mus), signs)


def _matches(sign, side) -> bool:
    return sign is Sign.BOTH or sign is side


def is_separated(c: Cycle) -> bool:
    if any(s is None for s in c.signs):
        raise UnsignedOrder("an order in the cycle has no sign")
    f = c.length
    half = f // 2
    for first, second in ((Sign.POSITIVE, Sign.NEGATIVE), (Sign.NEGATIVE, Sign.POSITIVE)):
        if all(_matches(s, first) for s in c.signs[:half]) and all(
            _matches(s, second) for s in c.signs[half:]
        ):
            return True
    return False


def order_via_bruteforce(seed: ZBasis, o: QuadraticOrder | None = None) -> int:
    o = seed.order if o is None else o
    I = reduce(Ideal.from_generator(o, gcd_right(seed.a, o.omega + seed.b)))
    bound = class_number_bound(o.m)
    cur, f = I, 1
    while not cur.is_unit():
        cur = reduce(multiply(cur, I).primitive())
        f += 1
        if f > bound:
            raise CycleOverrun(f"order of {I} exceeds {bound}")
    return f


def _strict_sign(mu) -> Sign | None:
    s = _sign_or_none(mu)
    if s is None:
        raise UnsignedOrder(f"O({mu}) has no sign")
    return None if s is Sign.BOTH else s


def order_via_separation(seed: ZBasis, o: QuadraticOrder | None = None) -> int:
    """Class order of a separated seed from the two sign borders of its cycle.

    ``mu_{1+k}`` is the right order of ``a^k`` and ``mu_{1-k}`` that of the
    conjugate ideal to the k-th power, so each probe costs O(log k) ideal
    multiplications.  A border is bracketed by doubling k and then located
    by bisection.  With d1 the first forward step that lands on the other
    side and d2 the first backward step that lands back on the starting
    side, the cycle length is ``d1 + d2 - 1``.
    """
    o = seed.order if o is None else o
    I = Ideal.from_generator(o, gcd_right(seed.a, o.omega + seed.b))
    if I.is_unit():
        return 1
    bound = class_number_bound(o.m)
    start = _strict_sign(o.mu)
    if start is None:
        raise NotSeparated(f"{o} is both positive and negative; pick another starting order")
    other = Sign.NEGATIVE if start is Sign.POSITIVE else Sign.POSITIVE
    conj = conjugate_ideal(I)

    def mu_at(J: Ideal, k: int) -> HurwitzQuaternion:
        return moved_mu(power(J, k).rho, o.mu)

    def first_hit(J: Ideal, want: Sign) -> int:
        k = 1
        while _strict_sign(mu_at(J, k)) is not want:
            k *= 2
            if k > 2 * bound:
                raise NotSeparated(f"no border within {bound} steps")
        lo, hi = k // 2, k  # the predicate fails at lo (or lo = 0) and holds at hi
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if _strict_sign(mu_at(J, mid)) is want:
                hi = mid
            else:
                lo = mid
        return hi

    d1 = first_hit(I, other)
    d2 = first_hit(conj, start)
    f = d1 + d2 - 1
    if not power(I, f).is_unit():
        raise NotSeparated(f"sign borders give {f}, which is not the order of the class")
    return f
