"""Splitting m from two representations of it.

Two routes: the classical one (two different ways of writing m as
x^2 + y^2, or as x^2 + 2y^2), and the quaternion one, where an ambiguous
ideal tying O(mu) to O(mu2) has a norm that shares a proper factor with m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

from .hurwitz import HurwitzQuaternion, divides_right
from .ideals import Ideal, is_ambiguous_class, moved_mu
from .orders import NormMismatch, QuadraticOrder, order_from_mu
from .solutions import SolutionModule, gauss_reduce, norm_form, solve


class NotTwoRepresentations(ValueError):
    pass


class ShapeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class FactorWitness:
    m: int
    factor: int
    trace: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not (1 < self.factor < self.m and self.m % self.factor == 0):
            raise ValueError(f"{self.factor} is not a proper factor of {self.m}")

    @property
    def cofactor(self) -> int:
        return self.m // self.factor

    def to_json(self) -> dict:
        return {"m": self.m, "factor": self.factor, "cofactor": self.cofactor, "trace": self.trace}


# ---------------------------------------------------------------------------
# two squares

def two_square_reps(m: int, weight: int = 1) -> list[tuple[int, int]]:
    """All ``(x, y)`` with ``x^2 + weight*y^2 = m``, ``x, y >= 0``; for weight 1 also ``x >= y``.

    Sorted by decreasing x.
    """
    out = []
    for y in range(isqrt(m // weight) + 1):
        rest = m - weight * y * y
        x = isqrt(rest)
        if x * x == rest and (weight != 1 or x >= y):
            out.append((x, y))
    out.sort(reverse=True)
    return out


def fermat_two_squares(m: int, x0: int, y0: int, x1: int, y1: int, *, weight: int = 1) -> FactorWitness:
    """Factor m from ``m = x0^2 + w y0^2 = x1^2 + w y1^2`` (w = 1 or 2)."""
    if weight not in (1, 2):
        raise ValueError("weight must be 1 or 2")
    ok = (
        x0 * x0 + weight * y0 * y0 == m
        and x1 * x1 + weight * y1 * y1 == m
        and min(x0, y0, x1, y1) >= 0
        and x0 > x1
    )
    if ok and weight == 1:
        ok = x0 >= y0 and x1 >= y1
    if not ok:
        raise NotTwoRepresentations(f"({x0}, {y0}) and ({x1}, {y1}) are not two representations of {m}")
    g = gcd(x0 * y1 - y0 * x1, m)
    return FactorWitness(m, g, {"reps": [[x0, y0], [x1, y1]], "weight": weight})


# ---------------------------------------------------------------------------
# quaternion route

@dataclass(frozen=True)
class AmbiguousHit:
    rho: HurwitzQuaternion
    norm: int
    coords: tuple[int, int]


def ambiguous_hits(mu: HurwitzQuaternion, mu2: HurwitzQuaternion, *, first_only: bool = False) -> list[AmbiguousHit]:
    """Primitive solutions of ``rho mu = mu2 rho`` whose norm divides 4m and splits m.

    The lattice is scanned by its reduced norm form, so the cost is
    proportional to the number of lattice points of norm at most 4m.
    Hits come out sorted by norm.
    """
    m = mu.norm()
    sm = solve(mu, mu2)
    u, v, _ = gauss_reduce(sm.upsilon, sm.upsilon1)
    a, b, c = norm_form(SolutionModule(u, v, mu, mu2))
    bound = 4 * m
    disc = 4 * a * c - b * b
    hits = []
    ymax = isqrt(4 * a * bound // disc) + 1
    for y in range(ymax + 1):
        # a x^2 + b x y + c y^2 <= bound  <=>  (2ax + by)^2 <= 4a*bound - disc*y^2
        rhs = 4 * a * bound - disc * y * y
        if rhs < 0:
            break
        s = isqrt(rhs)
        lo = (-b * y - s) // (2 * a) - 1
        hi = (-b * y + s) // (2 * a) + 1
        for x in range(lo, hi + 1):
            if (y == 0 and x <= 0) or gcd(x, y) != 1:
                continue
            n = a * x * x + b * x * y + c * y * y
            if n > bound or bound % n:
                continue
            if 1 < gcd(n, m) < m:
                hits.append(AmbiguousHit(u * x + v * y, n, (x, y)))
                if first_only:
                    return hits
    hits.sort(key=lambda h: (h.norm, h.rho.doubled))
    return hits


def factor_from_order_pair(o: QuadraticOrder, o2: QuadraticOrder):
    """A proper factor of m read off the solutions of ``rho mu = mu2 rho``, or None.

    Short lattice vectors are scanned in order of norm. A hit must split m,
    have norm dividing 4m and divide ``2 mu`` from the right.
    """
    if o.m != o2.m:
        raise NormMismatch(f"{o} and {o2} have different norms")
    m = o.m
    two_mu = o.mu * 2
    hits = [h for h in ambiguous_hits(o.mu, o2.mu) if divides_right(h.rho, two_mu)]
    if not hits:
        return None
    h = hits[0]
    g = gcd(h.norm, m)
    rho = h.rho
    trace = {
        "mu": str(o.mu),
        "mu2": str(o2.mu),
        "rho": str(rho),
        "norm": h.norm,
    }
    return FactorWitness(m, g, trace)


def factor_single_rep(x: int, y: int, z: int):
    """Try the pair (mu, -mu) for ``mu = x i + y j + z k``."""
    mu = HurwitzQuaternion(0, 2 * x, 2 * y, 2 * z)
    o = order_from_mu(mu)
    return factor_from_order_pair(o, order_from_mu(-mu))


def factor_by_pairs(m: int, *, limit: int | None = None):
    """Search pairs of representations of m until one gives a factor."""
    from .orders import all_three_squares

    reps = all_three_squares(m)
    base = reps[0]
    mu = HurwitzQuaternion(0, *(2 * t for t in base))
    o = order_from_mu(mu)
    tried = 0
    for rep in reps:
        for sign in (1, -1):
            for cand in _signed_arrangements(rep):
                mu2 = HurwitzQuaternion(0, *(2 * sign * t for t in cand))
                w = factor_from_order_pair(o, order_from_mu(mu2))
                tried += 1
                if w is not None:
                    return w
                if limit is not None and tried >= limit:
                    return None
    return None


def _signed_arrangements(rep):
    x, y, z = rep
    seen = []
    for t in ((x, y, z), (x, z, y)):
        if t not in seen:
            seen.append(t)
    return seen


# ---------------------------------------------------------------------------
# shapes of mu'

def _has_zero(mu: HurwitzQuaternion) -> bool:
    return sum(1 for v in mu.doubled[1:] if v == 0) == 1


def _has_equal_pair(mu: HurwitzQuaternion) -> bool:
    a, b, c = (abs(v) for v in mu.doubled[1:])
    return (a == b) + (b == c) + (a == c) == 1


@dataclass(frozen=True)
class ShapeReport:
    shape: str
    class_ambiguous: bool
    mu_prime: HurwitzQuaternion
    mu_prime_has_shape: bool

    @property
    def holds(self) -> bool:
        return self.class_ambiguous == self.mu_prime_has_shape

    def to_json(self) -> dict:
        return {
            "shape": self.shape,
            "class_ambiguous": self.class_ambiguous,
            "mu_prime": str(self.mu_prime),
            "mu_prime_has_shape": self.mu_prime_has_shape,
            "holds": self.holds,
        }


def verify_shape_criterion(o: QuadraticOrder, I: Ideal) -> ShapeReport:
    """Check "class ambiguous iff mu' keeps the special shape of mu".

    The shape is either a single zero coefficient or a single pair of
    coefficients equal in absolute value; unit conjugation preserves both.
    """
    if _has_zero(o.mu):
        shape, test = "zero", _has_zero
    elif _has_equal_pair(o.mu):
        shape, test = "equal_pair", _has_equal_pair
    else:
        raise ShapeMismatch(f"{o.mu} has neither a zero nor a repeated coefficient")
    mu1 = moved_mu(I.rho, o.mu)
    return ShapeReport(shape, is_ambiguous_class(I), mu1, test(mu1))


