"""Ideals of quadratic orders O(mu), represented by a right pseudo generator.

An ideal ``[a, b + omega]`` of O(mu) equals ``{xi*rho in O(mu)}`` for
``rho = gcd_r(a, b + omega)``, so ``rho`` alone determines it.  Everything
here works from ``rho``; the Z-basis is only recovered on request.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .hurwitz import (
    HurwitzQuaternion,
    NotHurwitz,
    canonical_associate,
    canonical_associate_right,
    divides_right,
    gcd_left,
    gcd_right,
    right_quotient,
    scalar_product,
    units,
)
from .orders import QuadraticOrder, order_from_mu, orders_equivalent
from .solutions import minimal_vector, solve

log = logging.getLogger(__name__)


class InvalidIdeal(ValueError):
    pass


class OrderMismatch(ValueError):
    pass


class NotIntegral(ArithmeticError):
    """rho mu rho^-1 is not an integral pure quaternion."""


class HalfIntegralObstruction(ArithmeticError):
    """No unit normalization makes the bridging quaternion Hurwitz."""


class InternalInconsistency(AssertionError):
    pass


@dataclass(frozen=True)
class ZBasis:
    """``c * [a, b + omega]`` with ``0 <= b < a``."""

    a: int
    b: int
    order: QuadraticOrder
    c: int = 1

    def __post_init__(self):
        if self.a < 1 or self.c < 1:
            raise InvalidIdeal("a and c must be positive")
        if not zbasis_valid(self.a, self.b, self.order):
            r, m = self.order.r, self.order.m
            raise InvalidIdeal(
                f"[{self.a}, {self.b} + omega] is not an ideal of {self.order}: "
                f"{r * r * self.a} does not divide {(r * self.b + r - 1) ** 2 + m}"
            )

    def generator_b(self) -> HurwitzQuaternion:
        return self.order.omega + self.b

    def minimal_norm_b(self) -> int:
        """Smallest b' >= 0, b' = b mod a, with N(b' + omega) >= a."""
        b = self.b
        while (self.order.omega + b).norm() < self.a:
            b += self.a
        return b

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c}


def zbasis_valid(a: int, b: int, order: QuadraticOrder) -> bool:
    r = order.r
    return ((r * b + r - 1) ** 2 + order.m) % (r * r * a) == 0


@dataclass(frozen=True)
class Ideal:
    order: QuadraticOrder
    rho: HurwitzQuaternion  # primitive, canonical under left units
    content: int = 1
    _zb: list = field(default_factory=list, compare=False, repr=False)

    @classmethod
    def from_generator(cls, order: QuadraticOrder, rho: HurwitzQuaternion) -> "Ideal":
        c = rho.content()
        return cls(order, canonical_associate(rho.exact_div_int(c)), c)

    @property
    def generator(self) -> HurwitzQuaternion:
        return self.rho * self.content

    def norm(self) -> int:
        """Norm of the primitive part times content^2."""
        return self.rho.norm() * self.content ** 2

    def primitive(self) -> "Ideal":
        return self if self.content == 1 else Ideal(self.order, self.rho)

    def is_unit(self) -> bool:
        return self.rho.norm() == 1

    def zbasis(self) -> ZBasis:
        if not self._zb:
            self._zb.append(restore_z_basis(self))
        return self._zb[0]

    def __str__(self) -> str:
        zb = self.zbasis()
        head = f"{self.content}*" if self.content > 1 else ""
        return f"{head}[{zb.a}, {zb.b} + omega] in {self.order}"

    def to_json(self) -> dict:
        zb = self.zbasis()
        return {
            "order": self.order.to_json(),
            "rho": str(self.rho),
            "rho_doubled": self.rho.to_json(),
            "content": self.content,
            "a": zb.a,
            "b": zb.b,
        }


def unit_ideal(order: QuadraticOrder) -> Ideal:
    return Ideal(order, HurwitzQuaternion(2, 0, 0, 0))


def from_z_basis(z: ZBasis) -> Ideal:
    rho = gcd_right(z.a, z.generator_b())
    if rho.norm() != z.a:
        raise InternalInconsistency(f"N(gcd) = {rho.norm()} != a = {z.a}")
    ideal = Ideal(z.order, rho, z.c)
    ideal._zb.append(z)
    return ideal


def ideal(order: QuadraticOrder, a: int, b: int, c: int = 1) -> Ideal:
    """Shorthand for ``from_z_basis(ZBasis(a, b mod a, order, c))``."""
    return from_z_basis(ZBasis(a, b % a, order, c))


# ----------------------------------------------------------------------------
# helpers

def _int_scalar(q: HurwitzQuaternion, mu: HurwitzQuaternion) -> int:
    s = scalar_product(q, mu)
    assert s.denominator == 1
    return int(s)


def conjugate_into(rho: HurwitzQuaternion, q: HurwitzQuaternion) -> HurwitzQuaternion:
    """``rho q rho^-1``, raising NotIntegral if it is not Hurwitz."""
    try:
        return (rho * q * rho.conjugate()).exact_div_int(rho.norm())
    except NotHurwitz as exc:
        raise NotIntegral(str(exc)) from None


def moved_mu(rho: HurwitzQuaternion, mu: HurwitzQuaternion) -> HurwitzQuaternion:
    mu1 = conjugate_into(rho, mu)
    if not mu1.is_pure() or mu1.is_half_integral():
        raise NotIntegral(f"{rho} {mu} {rho}^-1 is not an integral pure quaternion")
    return mu1


def _odd_real_left(rho: HurwitzQuaternion) -> HurwitzQuaternion:
    """First ``e*rho`` (e a unit) with integral coordinates and odd real part."""
    for e in units():
        q = e * rho
        if not q.is_half_integral() and (q.da >> 1) & 1:
            return q
    raise InternalInconsistency(f"no unit gives {rho} an odd real part")


def _bridge_candidates(rho: HurwitzQuaternion, o: QuadraticOrder, side: str):
    """Unit multiples of rho for which the bridging element lies in the ideal.

    That needs an integral rho with odd real part and an integral cofactor xi;
    for odd Re(rho), xi is half-integral exactly when N(rho) is even and m,
    (mu, rho) have different parity.
    """
    seen = set()
    for e in units():
        q = e * rho if side == "left" else rho * e
        if q.is_half_integral() or not (q.da >> 1) & 1 or q in seen:
            continue
        seen.add(q)
        if q.norm() % 2 == 0 and (o.m - _int_scalar(q, o.mu)) % 2:
            continue
        yield q


def _bridge(rho: HurwitzQuaternion, mu: HurwitzQuaternion, target: HurwitzQuaternion) -> HurwitzQuaternion:
    """``-(mu, rho) + Re(rho) * target`` for integral rho."""
    t = rho.da >> 1
    return target * t - _int_scalar(rho, mu)


# ----------------------------------------------------------------------------
# restoring the Z-basis

def restore_z_basis(I: Ideal) -> ZBasis:
    """Recover ``[a, b + omega]`` from the pseudo generator alone."""
    o = I.order
    m, r = o.m, o.r
    rho = _odd_real_left(I.rho)
    n = rho.norm()
    sp = _int_scalar(rho, o.mu)
    re = rho.da >> 1
    t = 2 if n % 2 == 0 and (m - sp) % 2 else 1
    d = gcd(re, n // t)
    if sp % d:
        raise InternalInconsistency("d does not divide (mu, rho)")
    mod = n // (t * d)
    rhs = (-(sp // d) * pow(re // d, -1, mod)) % mod if mod > 1 else 0
    if r == 1:
        b0 = rhs
    else:
        # 2b + 1 = rhs (mod odd modulus)
        b0 = ((rhs - 1) * pow(2, -1, mod)) % mod if mod > 1 else 0
    # the congruence fixes b modulo n/(t d); pick the residue mod n that rho divides
    for b in range(b0, n, max(mod, 1)):
        if zbasis_valid(n, b, o) and divides_right(I.rho, o.omega + b):
            return ZBasis(n, b, o, I.content)
    raise InternalInconsistency(f"no b found for {I.rho} in {o}")


# ----------------------------------------------------------------------------
# orders attached to an ideal

def right_order(I: Ideal) -> QuadraticOrder:
    return order_from_mu(moved_mu(I.rho, I.order.mu))


def left_order_of(rho_left: HurwitzQuaternion, o: QuadraticOrder) -> QuadraticOrder:
    """O(rho'^-1 mu rho') for a left pseudo generator rho'."""
    return order_from_mu(moved_mu(rho_left.conjugate(), o.mu))


# ----------------------------------------------------------------------------
# left <-> right pseudo generators

def right_from_left(rho_left: HurwitzQuaternion, o: QuadraticOrder) -> HurwitzQuaternion:
    """Right pseudo generator of the ideal whose left pseudo generator is ``rho_left``."""
    c = rho_left.content()
    p = rho_left.exact_div_int(c)
    if p.norm() == 1:
        return canonical_associate(p * c)
    n = p.norm()
    for q in _bridge_candidates(p, o, "right"):
        out = gcd_right(_bridge(q, o.mu, o.mu), n)
        if out.norm() == n:
            break
    else:
        # the bridging element would leave the ideal; go through the Z-basis
        zb = restore_z_basis(Ideal(o, canonical_associate(p.conjugate())))
        b = (-zb.b - (o.r - 1)) % zb.a
        out = gcd_right(zb.a, o.omega + b)
    return canonical_associate(out * c)


def left_from_right(rho: HurwitzQuaternion, o: QuadraticOrder) -> HurwitzQuaternion:
    """Left pseudo generator of ``R(rho)``."""
    c = rho.content()
    p = rho.exact_div_int(c)
    if p.norm() == 1:
        return canonical_associate_right(p * c)
    n = p.norm()
    for q in _bridge_candidates(p, o, "left"):
        out = gcd_left(_bridge(q, o.mu, o.mu), n)
        if out.norm() == n:
            break
    else:
        zb = restore_z_basis(Ideal(o, canonical_associate(p)))
        out = gcd_left(zb.a, o.omega + zb.b)
    return canonical_associate_right(out * c)


def left_generator(I: Ideal) -> HurwitzQuaternion:
    return left_from_right(I.generator, I.order)


def conjugate_ideal(I: Ideal) -> Ideal:
    """The conjugate ideal: right pseudo generator is conj(left pseudo generator)."""
    rho_left = left_from_right(I.rho, I.order)
    return Ideal(I.order, canonical_associate(rho_left.conjugate()), I.content)


# ----------------------------------------------------------------------------
# multiplication and reduction

def multiply(I: Ideal, J: Ideal) -> Ideal:
    """Product ideal ``R(rho'' rho')`` with the integer content split off."""
    if I.order != J.order:
        raise OrderMismatch(f"{I.order} != {J.order}")
    o = I.order
    rho, rho1 = I.rho, J.rho
    mu1 = moved_mu(rho1, o.mu)
    if rho.norm() == 1:
        rho2 = rho
    else:
        n = rho.norm()
        for q in _bridge_candidates(rho, o, "left"):
            rho2 = gcd_right(_bridge(q, o.mu, mu1), n)
            if rho2.norm() == n:
                break
        else:
            zb = I.primitive().zbasis()
            omega1 = order_from_mu(mu1).omega
            rho2 = gcd_right(zb.a, omega1 + zb.b)
    prod = Ideal.from_generator(o, rho2 * rho1)
    c = prod.content * I.content * J.content
    return Ideal(o, prod.rho, c)


def reduce(I: Ideal, *, with_iterations: bool = False):
    """The reduced ideal equivalent to ``I`` (content dropped)."""
    o = I.order
    mu1 = moved_mu(I.rho, o.mu)
    sm = solve(o.mu, mu1)
    v, iters = minimal_vector(sm, with_iterations=True)
    if o.m % 8 == 3 and v.norm() % 2 == 0:
        raise InternalInconsistency("reduced generator has even norm for m = 3 mod 8")
    out = Ideal(o, canonical_associate(v))
    log.debug("reduce %s: %d iterations", I.rho, iters)
    if with_iterations:
        return out, iters
    return out


def power(I: Ideal, n: int) -> Ideal:
    """``I^n`` reduced after every step; ``n >= 0``."""
    result = unit_ideal(I.order)
    base = reduce(I.primitive())
    while n:
        if n & 1:
            result = reduce(multiply(result, base).primitive())
        n >>= 1
        if n:
            base = reduce(multiply(base, base).primitive())
    return result


def is_valid_generator(rho: HurwitzQuaternion, o: QuadraticOrder) -> bool:
    """Criterion for ``rho`` to be a right pseudo generator of an ideal of ``o``.

    ``rho`` must be primitive, ``rho mu rho^-1`` integral, and ``N(rho)`` odd
    when ``m = 3 (mod 8)``.
    """
    if rho.is_zero() or not rho.is_primitive():
        return False
    if o.m % 8 == 3 and rho.norm() % 2 == 0:
        return False
    try:
        moved_mu(rho, o.mu)
    except NotIntegral:
        return False
    return True


def is_ambiguous_ideal(I: Ideal) -> bool:
    amb = conjugate_ideal(I).rho == I.rho
    if amb:
        mu2 = I.order.mu * (2 // I.order.r)
        if not divides_right(I.rho, mu2):
            raise InternalInconsistency(f"ambiguous {I.rho} does not divide (2/r) mu")
    return amb


def is_ambiguous_class(I: Ideal) -> bool:
    p = I.primitive()
    return reduce(multiply(p, p).primitive()).is_unit()


def equivalent(I: Ideal, J: Ideal) -> bool:
    """Same ideal class (decided through the form correspondence)."""
    from .forms import ideal_to_form, reduce_form

    return reduce_form(ideal_to_form(I.primitive())) == reduce_form(ideal_to_form(J.primitive()))


# ----------------------------------------------------------------------------
# identities

@dataclass(frozen=True)
class IdentityReport:
    xi: HurwitzQuaternion
    rho_relation: bool
    xi_relation: bool
    cross_relation: bool
    square_relation: bool

    @property
    def all_hold(self) -> bool:
        return self.rho_relation and self.xi_relation and self.cross_relation and self.square_relation

    def to_json(self) -> dict:
        return {
            "xi": str(self.xi),
            "rho_relation": self.rho_relation,
            "xi_relation": self.xi_relation,
            "cross_relation": self.cross_relation,
            "square_relation": self.square_relation,
        }


def check_identities(I: Ideal, rho: HurwitzQuaternion | None = None) -> IdentityReport:
    """Evaluate the four exact relations tying rho, xi, b, omega and mu' together.

    ``rho`` may be any right pseudo generator of ``I`` (default: the stored one).
    """
    o = I.order
    zb = I.zbasis()
    rho = I.rho if rho is None else rho
    m, r = o.m, o.r
    b = zb.b
    xi = right_quotient(o.omega + b, rho)
    mu1 = moved_mu(rho, o.mu)
    re_rho, re_xi = rho.real_part(), xi.real_part()
    shift = b + Fraction(r - 1, r)
    sp = scalar_product
    n_rho, n_xi = rho.norm(), xi.norm()

    rho_rel = sp(o.omega, rho) + re_rho * shift == re_xi * n_rho
    xi_rel = sp(o.omega, xi) + re_xi * shift == re_rho * n_xi
    lhs = m + sp(o.mu, mu1)
    # both sides of the omega + omega' relations carry a factor 1/2
    cross = Fraction(lhs, 2 * r) == re_xi * sp(o.mu, rho) + re_rho * sp(o.mu, xi)
    square = Fraction(lhs, 2 * r * r) == (
        re_rho ** 2 * sp(xi, xi) + 2 * re_rho * re_xi * sp(rho, xi) + re_xi ** 2 * sp(rho, rho)
    )
    return IdentityReport(xi, rho_rel, xi_rel, cross, square)


def enumerate_ideals(o: QuadraticOrder, max_norm: int) -> list[Ideal]:
    """Every primitive ideal of norm at most ``max_norm``."""
    out = []
    for a in range(1, max_norm + 1):
        for b in range(a):
            if zbasis_valid(a, b, o):
                out.append(from_z_basis(ZBasis(a, b, o)))
    return out
