"""Quadratic orders O(mu) inside the Hurwitz quaternions."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from sympy import factorint

from .hurwitz import HurwitzQuaternion, units


class NoRepresentation(ValueError):
    """m is of the form 4^k (8n + 7)."""


class InvalidOrder(ValueError):
    pass


class NormMismatch(ValueError):
    pass


class NoSign(ValueError):
    """Neither a non-negative nor a non-positive unit conjugate exists."""


class Sign(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    BOTH = "both"


def is_squarefree(m: int) -> bool:
    return m >= 1 and all(e == 1 for e in factorint(m).values())


def _is_three_squares(m: int) -> bool:
    while m and m % 4 == 0:
        m //= 4
    return m % 8 != 7


def _two_squares_max(n: int):
    """Largest y with n = y^2 + z^2, y >= z >= 0, or None."""
    y = isqrt(n)
    while 2 * y * y >= n:
        z2 = n - y * y
        z = isqrt(z2)
        if z * z == z2:
            return y, z
        y -= 1
    return None


def three_squares(m: int) -> tuple[int, int, int]:
    """Lexicographically largest ``(x, y, z)``, ``x >= y >= z >= 0``, with squares summing to m."""
    if m < 1:
        raise ValueError("m must be positive")
    if not _is_three_squares(m):
        raise NoRepresentation(f"{m} is not a sum of three squares")
    x = isqrt(m)
    while x >= 0:
        rest = m - x * x
        if 2 * x * x >= rest:
            yz = _two_squares_max(rest)
            if yz is not None and yz[0] <= x:
                return (x, yz[0], yz[1])
        x -= 1
    raise AssertionError("unreachable for admissible m")


def all_three_squares(m: int) -> list[tuple[int, int, int]]:
    """Every ``(x, y, z)`` with ``x >= y >= z >= 0`` and ``x^2+y^2+z^2 = m``, descending."""
    out = []
    x = isqrt(m)
    while 3 * x * x >= m:
        rest = m - x * x
        y = min(x, isqrt(rest))
        while y >= 0 and 2 * y * y >= rest:
            z2 = rest - y * y
            z = isqrt(z2)
            if z * z == z2:
                out.append((x, y, z))
            y -= 1
        x -= 1
    return out


@dataclass(frozen=True)
class QuadraticOrder:
    """The order O(mu) = [1, omega] with mu = x i + y j + z k and mu^2 = -m."""

    mu: HurwitzQuaternion
    m: int
    r: int
    omega: HurwitzQuaternion

    @property
    def xyz(self) -> tuple[int, int, int]:
        return self.mu.int_coords()[1:]

    def __str__(self) -> str:
        return f"O({self.mu})"

    def to_json(self) -> dict:
        return {"mu": list(self.xyz), "m": self.m, "r": self.r}


def _omega(mu: HurwitzQuaternion, r: int) -> HurwitzQuaternion:
    if r == 1:
        return mu
    return HurwitzQuaternion(1, mu.db // 2, mu.dc // 2, mu.dd // 2)


def make_order(x: int, y: int, z: int, *, check_squarefree: bool = True) -> QuadraticOrder:
    if (x, y, z) == (0, 0, 0):
        raise InvalidOrder("mu must be nonzero")
    m = x * x + y * y + z * z
    if m % 8 == 7:
        raise InvalidOrder(f"m = {m} is congruent to 7 mod 8")
    if check_squarefree and not is_squarefree(m):
        raise InvalidOrder(f"m = {m} is not squarefree")
    if gcd(x, y, z) != 1:
        raise InvalidOrder(f"({x}, {y}, {z}) is imprimitive")
    r = 2 if m % 4 == 3 else 1
    mu = HurwitzQuaternion(0, 2 * x, 2 * y, 2 * z)
    return QuadraticOrder(mu, m, r, _omega(mu, r))


def order_from_mu(mu: HurwitzQuaternion) -> QuadraticOrder:
    """Order for an already-validated pure quaternion (no squarefree test)."""
    if not mu.is_pure() or mu.is_half_integral():
        raise InvalidOrder(f"{mu} is not an integral pure quaternion")
    m = mu.norm()
    r = 2 if m % 4 == 3 else 1
    return QuadraticOrder(mu, m, r, _omega(mu, r))


def conjugate_by(e: HurwitzQuaternion, mu: HurwitzQuaternion) -> HurwitzQuaternion:
    """``e mu conj(e)`` for a unit e."""
    return e * mu * e.conjugate()


@lru_cache(maxsize=1 << 16)
def unit_orbit(mu: HurwitzQuaternion) -> frozenset:
    return frozenset(conjugate_by(e, mu) for e in units())


def _mu_of(o) -> HurwitzQuaternion:
    return o.mu if isinstance(o, QuadraticOrder) else o


def equivalence_witness(o1, o2):
    """A unit e with ``mu2 = e mu1 conj(e)``, or None."""
    mu1, mu2 = _mu_of(o1), _mu_of(o2)
    if mu1.norm() != mu2.norm():
        raise NormMismatch(f"N({mu1}) != N({mu2})")
    for e in units():
        if conjugate_by(e, mu1) == mu2:
            return e
    return None


def orders_equivalent(o1, o2) -> bool:
    mu1, mu2 = _mu_of(o1), _mu_of(o2)
    if mu1.norm() != mu2.norm():
        raise NormMismatch(f"N({mu1}) != N({mu2})")
    return mu2 in unit_orbit(mu1)


def orbit_key(o) -> tuple[int, int, int, int]:
    """Canonical label of the equivalence class of O(mu)."""
    return max(q.doubled for q in unit_orbit(_mu_of(o)))


def sign_of_order(o) -> Sign:
    pos = neg = False
    for q in unit_orbit(_mu_of(o)):
        c = q.doubled[1:]
        if all(v >= 0 for v in c):
            pos = True
        if all(v <= 0 for v in c):
            neg = True
    if pos and neg:
        return Sign.BOTH
    if pos:
        return Sign.POSITIVE
    if neg:
        return Sign.NEGATIVE
    raise NoSign(f"O({_mu_of(o)}) is neither positive nor negative")
