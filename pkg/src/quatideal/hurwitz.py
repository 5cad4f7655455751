"""Exact arithmetic on Hurwitz (integral) quaternions.

A Hurwitz quaternion is stored by its doubled coordinates ``(da, db, dc, dd)``
so that it represents ``(da + db*i + dc*j + dd*k) / 2``.  All four doubled
coordinates share a parity; half-integral elements have them all odd.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable

__all__ = [
    "HurwitzQuaternion",
    "RationalQuaternion",
    "ZeroQuaternion",
    "NotHurwitz",
    "ONE",
    "ZERO",
    "I",
    "J",
    "K",
    "units",
    "canonical_associate",
    "canonical_associate_right",
    "div_rem_right",
    "div_rem_left",
    "gcd_right",
    "gcd_left",
    "divides_right",
    "divides_left",
    "scalar_product",
    "full_scalar_product",
    "vector_product",
    "parse",
]


class ZeroQuaternion(ValueError):
    """Raised where a nonzero quaternion is required."""


class NotHurwitz(ValueError):
    """Raised when a value is not a Hurwitz quaternion."""


def _hamilton(a1, b1, c1, d1, a2, b2, c2, d2):
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


@dataclass(frozen=True, slots=True)
class HurwitzQuaternion:
    da: int
    db: int
    dc: int
    dd: int

    def __post_init__(self):
        p = self.da & 1
        if (self.db & 1) != p or (self.dc & 1) != p or (self.dd & 1) != p:
            raise NotHurwitz(f"mixed parity doubled coordinates {self.doubled}")

    @classmethod
    def from_ints(cls, t: int, x: int = 0, y: int = 0, z: int = 0) -> "HurwitzQuaternion":
        """Build ``t + x i + y j + z k`` from integer coordinates."""
        return cls(2 * t, 2 * x, 2 * y, 2 * z)

    @property
    def doubled(self) -> tuple[int, int, int, int]:
        return (self.da, self.db, self.dc, self.dd)

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(v, 2) for v in self.doubled)

    def is_half_integral(self) -> bool:
        return bool(self.da & 1)

    def is_zero(self) -> bool:
        return not (self.da or self.db or self.dc or self.dd)

    def is_pure(self) -> bool:
        return self.da == 0

    def int_coords(self) -> tuple[int, int, int, int]:
        if self.da & 1:
            raise NotHurwitz(f"{self} has half-integer coordinates")
        return (self.da // 2, self.db // 2, self.dc // 2, self.dd // 2)

    # ring operations

    def __add__(self, other):
        if isinstance(other, int):
            other = HurwitzQuaternion(2 * other, 0, 0, 0)
        if not isinstance(other, HurwitzQuaternion):
            return NotImplemented
        return HurwitzQuaternion(
            self.da + other.da, self.db + other.db, self.dc + other.dc, self.dd + other.dd
        )

    __radd__ = __add__

    def __neg__(self):
        return HurwitzQuaternion(-self.da, -self.db, -self.dc, -self.dd)

    def __sub__(self, other):
        if isinstance(other, int):
            other = HurwitzQuaternion(2 * other, 0, 0, 0)
        if not isinstance(other, HurwitzQuaternion):
            return NotImplemented
        return HurwitzQuaternion(
            self.da - other.da, self.db - other.db, self.dc - other.dc, self.dd - other.dd
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return HurwitzQuaternion(self.da * other, self.db * other, self.dc * other, self.dd * other)
        if not isinstance(other, HurwitzQuaternion):
            return NotImplemented
        p = _hamilton(*self.doubled, *other.doubled)
        # product of doubled coordinates is 4*q*r, always divisible by 2
        return HurwitzQuaternion(p[0] >> 1, p[1] >> 1, p[2] >> 1, p[3] >> 1)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def exact_div_int(self, n: int) -> "HurwitzQuaternion":
        """``self / n`` for an integer ``n``; raises NotHurwitz if not integral."""
        if n == 0:
            raise ZeroDivisionError("division by zero")
        if self.da % n or self.db % n or self.dc % n or self.dd % n:
            raise NotHurwitz(f"{self} is not divisible by {n}")
        return HurwitzQuaternion(self.da // n, self.db // n, self.dc // n, self.dd // n)

    def conjugate(self) -> "HurwitzQuaternion":
        return HurwitzQuaternion(self.da, -self.db, -self.dc, -self.dd)

    def norm(self) -> int:
        return (self.da * self.da + self.db * self.db + self.dc * self.dc + self.dd * self.dd) >> 2

    def real_part(self) -> Fraction:
        return Fraction(self.da, 2)

    def vector_part(self) -> "HurwitzQuaternion":
        """The pure part ``x i + y j + z k``.

        Only Hurwitz when the coordinates are integral; otherwise the value is
        returned as a RationalQuaternion.
        """
        if self.da & 1:
            return RationalQuaternion(0, *self.coords[1:])
        return HurwitzQuaternion(0, self.db, self.dc, self.dd)

    def inverse(self) -> "RationalQuaternion":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero quaternion")
        return RationalQuaternion.from_hurwitz(self.conjugate()) * Fraction(1, n)

    def to_rational(self) -> "RationalQuaternion":
        return RationalQuaternion.from_hurwitz(self)

    def content(self) -> int:
        """Largest n >= 1 with ``self / n`` still Hurwitz."""
        if self.is_zero():
            raise ZeroQuaternion("content of zero")
        g = gcd(self.da, self.db, self.dc, self.dd)
        # doubled/g has gcd 1: Hurwitz only when every entry is odd
        if all((v // g) & 1 for v in self.doubled):
            return g
        return g // 2

    def is_primitive(self) -> bool:
        return self.content() == 1

    def primitive_part(self) -> "HurwitzQuaternion":
        return self.exact_div_int(self.content())

    # formatting

    def __str__(self) -> str:
        if self.da & 1:
            return "(" + _fmt_terms(self.doubled) + ")/2"
        return _fmt_terms(tuple(v // 2 for v in self.doubled))

    def __repr__(self) -> str:
        return f"HurwitzQuaternion({str(self)!r})"

    def to_json(self) -> dict:
        return {"da": self.da, "db": self.db, "dc": self.dc, "dd": self.dd}

    @classmethod
    def from_json(cls, data: dict) -> "HurwitzQuaternion":
        return cls(int(data["da"]), int(data["db"]), int(data["dc"]), int(data["dd"]))


def _fmt_terms(vals) -> str:
    out = []
    for v, lab in zip(vals, ("", "i", "j", "k")):
        if v == 0:
            continue
        mag = abs(v)
        body = lab if (mag == 1 and lab) else f"{mag}{lab}"
        if not out:
            out.append(("-" if v < 0 else "") + body)
        else:
            out.append(("-" if v < 0 else "+") + body)
    return "".join(out) or "0"


ZERO = HurwitzQuaternion(0, 0, 0, 0)
ONE = HurwitzQuaternion(2, 0, 0, 0)
I = HurwitzQuaternion(0, 2, 0, 0)
J = HurwitzQuaternion(0, 0, 2, 0)
K = HurwitzQuaternion(0, 0, 0, 2)


@dataclass(frozen=True, slots=True)
class RationalQuaternion:
    t: Fraction
    x: Fraction
    y: Fraction
    z: Fraction

    def __init__(self, t, x=0, y=0, z=0):
        object.__setattr__(self, "t", Fraction(t))
        object.__setattr__(self, "x", Fraction(x))
        object.__setattr__(self, "y", Fraction(y))
        object.__setattr__(self, "z", Fraction(z))

    @classmethod
    def from_hurwitz(cls, q: HurwitzQuaternion) -> "RationalQuaternion":
        return cls(*q.coords)

    @property
    def coords(self):
        return (self.t, self.x, self.y, self.z)

    def __add__(self, other):
        other = _as_rational(other)
        return RationalQuaternion(*(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        other = _as_rational(other)
        return RationalQuaternion(*(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return RationalQuaternion(*(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalQuaternion(*(a * other for a in self.coords))
        other = _as_rational(other)
        return RationalQuaternion(*_hamilton(*self.coords, *other.coords))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return _as_rational(other) * self

    def norm(self) -> Fraction:
        return sum((a * a for a in self.coords), Fraction(0))

    def conjugate(self) -> "RationalQuaternion":
        return RationalQuaternion(self.t, -self.x, -self.y, -self.z)

    def is_hurwitz(self) -> bool:
        doubled = [2 * a for a in self.coords]
        if any(d.denominator != 1 for d in doubled):
            return False
        return len({int(d) & 1 for d in doubled}) == 1

    def to_hurwitz(self) -> HurwitzQuaternion:
        if not self.is_hurwitz():
            raise NotHurwitz(f"{self} is not a Hurwitz quaternion")
        return HurwitzQuaternion(*(int(2 * a) for a in self.coords))

    def __str__(self) -> str:
        parts = []
        for v, lab in zip(self.coords, ("", "i", "j", "k")):
            if v:
                parts.append(f"{'+' if v > 0 and parts else ''}{v}{lab}")
        return "".join(parts) or "0"


def _as_rational(q) -> RationalQuaternion:
    if isinstance(q, RationalQuaternion):
        return q
    if isinstance(q, HurwitzQuaternion):
        return RationalQuaternion.from_hurwitz(q)
    if isinstance(q, (int, Fraction)):
        return RationalQuaternion(q)
    raise TypeError(f"cannot use {type(q).__name__} as a quaternion")


# ----------------------------------------------------------------------------
# scalar and vector products

def scalar_product(q, r) -> Fraction:
    """Dot product of the vector parts."""
    q, r = _as_rational(q), _as_rational(r)
    return q.x * r.x + q.y * r.y + q.z * r.z


def full_scalar_product(q, r) -> Fraction:
    q, r = _as_rational(q), _as_rational(r)
    return q.t * r.t + q.x * r.x + q.y * r.y + q.z * r.z


def vector_product(q, r) -> RationalQuaternion:
    q, r = _as_rational(q), _as_rational(r)
    return RationalQuaternion(
        0,
        q.y * r.z - r.y * q.z,
        r.x * q.z - q.x * r.z,
        q.x * r.y - r.x * q.y,
    )


# ----------------------------------------------------------------------------
# units and associates

@lru_cache(maxsize=None)
def units() -> tuple[HurwitzQuaternion, ...]:
    """The 24 units of the Hurwitz order, in a fixed order."""
    out = []
    for pos in range(4):
        for s in (2, -2):
            v = [0, 0, 0, 0]
            v[pos] = s
            out.append(HurwitzQuaternion(*v))
    for a in (1, -1):
        for b in (1, -1):
            for c in (1, -1):
                for d in (1, -1):
                    out.append(HurwitzQuaternion(a, b, c, d))
    return tuple(out)


def canonical_associate(q: HurwitzQuaternion) -> HurwitzQuaternion:
    """Representative of the left-unit orbit ``{e*q}``: the largest doubled tuple."""
    if q.is_zero():
        raise ZeroQuaternion("zero has no canonical associate")
    return max((e * q for e in units()), key=lambda h: h.doubled)


def canonical_associate_right(q: HurwitzQuaternion) -> HurwitzQuaternion:
    """Representative of the right-unit orbit ``{q*e}``."""
    if q.is_zero():
        raise ZeroQuaternion("zero has no canonical associate")
    return max((q * e for e in units()), key=lambda h: h.doubled)


# ----------------------------------------------------------------------------
# division with remainder and gcds

def _round_half_up(num: int, den: int) -> int:
    # floor(num/den + 1/2) for den > 0
    return (2 * num + den) // (2 * den)


def _hurwitz_round(doubled_num: tuple[int, ...], den: int) -> list[HurwitzQuaternion]:
    """Candidate Hurwitz quaternions nearest to ``doubled_num / (2*den)``."""
    # nearest integer point: coordinate num/(2 den)
    ints = [_round_half_up(v, 2 * den) for v in doubled_num]
    # nearest point of (1/2 + Z)^4: round (v/(2den) - 1/2) then add 1/2
    halves = [_round_half_up(v - den, 2 * den) for v in doubled_num]
    return [
        HurwitzQuaternion(*(2 * a for a in ints)),
        HurwitzQuaternion(*(2 * a + 1 for a in halves)),
    ]


def div_rem_right(q: HurwitzQuaternion, d: HurwitzQuaternion):
    """Return ``(xi, s)`` with ``q = xi*d + s`` and ``N(s) < N(d)``."""
    n = d.norm()
    if n == 0:
        raise ZeroDivisionError("right division by zero quaternion")
    # q d^{-1} = q conj(d) / n; doubled coords of q conj(d) are integers
    num = (q * d.conjugate()).doubled
    best = None
    for xi in _hurwitz_round(num, n):
        s = q - xi * d
        key = (s.norm(), xi.doubled)
        if best is None or key < best[0]:
            best = (key, xi, s)
    _, xi, s = best
    assert s.norm() < n
    return xi, s


def div_rem_left(q: HurwitzQuaternion, d: HurwitzQuaternion):
    """Return ``(xi, s)`` with ``q = d*xi + s`` and ``N(s) < N(d)``."""
    xi, s = div_rem_right(q.conjugate(), d.conjugate())
    return xi.conjugate(), s.conjugate()


def _gcd_right_raw(q: HurwitzQuaternion, r: HurwitzQuaternion) -> HurwitzQuaternion:
    while not r.is_zero():
        _, s = div_rem_right(q, r)
        q, r = r, s
    return q


def gcd_right(q, r) -> HurwitzQuaternion:
    """Greatest common right divisor, canonical up to left units."""
    q, r = _as_hurwitz(q), _as_hurwitz(r)
    if q.is_zero() and r.is_zero():
        raise ZeroQuaternion("gcd of two zeros")
    return canonical_associate(_gcd_right_raw(q, r))


def gcd_left(q, r) -> HurwitzQuaternion:
    """Greatest common left divisor, canonical up to right units."""
    q, r = _as_hurwitz(q), _as_hurwitz(r)
    if q.is_zero() and r.is_zero():
        raise ZeroQuaternion("gcd of two zeros")
    g = _gcd_right_raw(q.conjugate(), r.conjugate()).conjugate()
    return canonical_associate_right(g)


def divides_right(d, q) -> bool:
    """True iff ``q = xi*d`` for a Hurwitz ``xi``."""
    d, q = _as_hurwitz(d), _as_hurwitz(q)
    n = d.norm()
    if n == 0:
        raise ZeroDivisionError("divisibility by zero quaternion")
    num = (q * d.conjugate()).doubled
    if any(v % n for v in num):
        return False
    return len({(v // n) & 1 for v in num}) == 1


def divides_left(d, q) -> bool:
    """True iff ``q = d*xi`` for a Hurwitz ``xi``."""
    return divides_right(_as_hurwitz(d).conjugate(), _as_hurwitz(q).conjugate())


def right_quotient(q: HurwitzQuaternion, d: HurwitzQuaternion) -> HurwitzQuaternion:
    """``xi`` with ``q = xi*d``; raises NotHurwitz if ``d`` does not right-divide ``q``."""
    n = d.norm()
    if n == 0:
        raise ZeroDivisionError("division by zero quaternion")
    return (q * d.conjugate()).exact_div_int(n)


def left_quotient(q: HurwitzQuaternion, d: HurwitzQuaternion) -> HurwitzQuaternion:
    """``xi`` with ``q = d*xi``."""
    n = d.norm()
    if n == 0:
        raise ZeroDivisionError("division by zero quaternion")
    return (d.conjugate() * q).exact_div_int(n)


def _as_hurwitz(q) -> HurwitzQuaternion:
    if isinstance(q, HurwitzQuaternion):
        return q
    if isinstance(q, int):
        return HurwitzQuaternion.from_ints(q)
    if isinstance(q, RationalQuaternion):
        return q.to_hurwitz()
    raise TypeError(f"cannot use {type(q).__name__} as a Hurwitz quaternion")


# ----------------------------------------------------------------------------
# parsing

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*([ijk]?)")


def _parse_linear(text: str) -> list[int]:
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty quaternion literal")
    vals = [0, 0, 0, 0]
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse quaternion literal {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        vals["_ijk".index(m.group(3)) if m.group(3) else 0] += sign * mag
        pos = m.end()
    return vals


def parse(text: str) -> HurwitzQuaternion:
    """Parse ``"1+2i-j"`` or ``"(1+i+j+k)/2"``."""
    s = text.strip().replace(" ", "")
    m = re.fullmatch(r"\((.*)\)/2", s)
    if m:
        return HurwitzQuaternion(*_parse_linear(m.group(1)))
    return HurwitzQuaternion(*(2 * v for v in _parse_linear(s)))
