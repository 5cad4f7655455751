"""Positive definite binary quadratic forms: the classical cross-check.

Nothing here touches quaternions except :func:`ideal_to_form`, which maps an
ideal ``[a, b + omega]`` to ``(a, 2b + r - 1, N(b + omega)/a)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from sympy import factorint
from sympy.ntheory import sqrt_mod as _sympy_sqrt_mod

from .solutions import ext_gcd

__all__ = [
    "BinaryQuadraticForm",
    "ClassGroupDescription",
    "DiscriminantMismatch",
    "InvalidDiscriminant",
    "NotPositiveDefinite",
    "class_group",
    "class_number",
    "compose",
    "discriminant_of",
    "ext_gcd",
    "form_order",
    "ideal_to_form",
    "principal_form",
    "reduce_form",
    "reduced_forms",
    "sqrt_mod",
]


class NotPositiveDefinite(ValueError):
    pass


class DiscriminantMismatch(ValueError):
    pass


class InvalidDiscriminant(ValueError):
    pass


@dataclass(frozen=True)
class BinaryQuadraticForm:
    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def inverse(self) -> "BinaryQuadraticForm":
        return BinaryQuadraticForm(self.a, -self.b, self.c)

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (abs(b) <= a <= c):
            return False
        return b >= 0 or (abs(b) != a and a != c)

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"

    def to_json(self) -> list[int]:
        return [self.a, self.b, self.c]


def _check_pd(f: BinaryQuadraticForm) -> None:
    if f.a <= 0 or f.discriminant >= 0:
        raise NotPositiveDefinite(f"{f} is not positive definite")


def reduce_form(f, *, with_transform: bool = False):
    """Reduced representative of the proper equivalence class of ``f``.

    With ``with_transform`` also return the unimodular matrix ``(p, q, r, s)``
    such that the result is ``f(p x + q y, r x + s y)``.
    """
    if not isinstance(f, BinaryQuadraticForm):
        f = BinaryQuadraticForm(*f)
    _check_pd(f)
    a, b, c = f.a, f.b, f.c
    p, q, r, s = 1, 0, 0, 1
    while True:
        if not (-a < b <= a):
            # translate x -> x + k y so that b lands in (-a, a]
            k = (a - b) // (2 * a)
            c = a * k * k + b * k + c
            b = b + 2 * a * k
            q, s = q + k * p, s + k * r
            continue
        if a > c:
            # (x, y) -> (-y, x)
            a, b, c = c, -b, a
            p, q, r, s = q, -p, s, -r
            continue
        if a == c and b < 0:
            a, b, c = c, -b, a
            p, q, r, s = q, -p, s, -r
            continue
        break
    g = BinaryQuadraticForm(a, b, c)
    if with_transform:
        return g, (p, q, r, s)
    return g


def apply_transform(f: BinaryQuadraticForm, t) -> BinaryQuadraticForm:
    """``f(p x + q y, r x + s y)`` for ``t = (p, q, r, s)``."""
    p, q, r, s = t
    a = f(p, r)
    c = f(q, s)
    b = 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s
    return BinaryQuadraticForm(a, b, c)


def principal_form(disc: int) -> BinaryQuadraticForm:
    _check_disc(disc)
    k = disc % 2
    return BinaryQuadraticForm(1, k, (k - disc) // 4)


def _check_disc(disc: int) -> None:
    if disc >= 0 or disc % 4 not in (0, 1):
        raise InvalidDiscriminant(f"{disc} is not a negative discriminant")


def compose(f: BinaryQuadraticForm, g: BinaryQuadraticForm) -> BinaryQuadraticForm:
    """Gauss composition (Dirichlet's united forms), reduced."""
    if f.discriminant != g.discriminant:
        raise DiscriminantMismatch(f"{f} and {g} have different discriminants")
    disc = f.discriminant
    a1, b1, _ = f.a, f.b, f.c
    a2, b2, _ = g.a, g.b, g.c
    beta = (b1 + b2) // 2
    e, u, v = ext_gcd(a1, a2)
    e2, w, z = ext_gcd(e, beta)
    # w*(u a1 + v a2) + z*beta = e2
    a3 = a1 * a2 // (e2 * e2)
    B = (w * u * a1 * b2 + w * v * a2 * b1 + z * (b1 * b2 + disc) // 2) // e2
    b3 = B % (2 * a3)
    c3 = (b3 * b3 - disc) // (4 * a3)
    return reduce_form(BinaryQuadraticForm(a3, b3, c3))


def form_power(f: BinaryQuadraticForm, n: int) -> BinaryQuadraticForm:
    result = principal_form(f.discriminant)
    base = reduce_form(f)
    if n < 0:
        base, n = base.inverse(), -n
        base = reduce_form(base)
    while n:
        if n & 1:
            result = compose(result, base)
        base = compose(base, base)
        n >>= 1
    return result


def form_order(f: BinaryQuadraticForm) -> int:
    e = principal_form(f.discriminant)
    g = reduce_form(f)
    cur, n = g, 1
    while cur != e:
        cur = compose(cur, g)
        n += 1
    return n


@lru_cache(maxsize=256)
def reduced_forms(disc: int) -> tuple[BinaryQuadraticForm, ...]:
    """All primitive reduced forms of discriminant ``disc``."""
    _check_disc(disc)
    out = []
    amax = isqrt(-disc // 3)
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            if (b * b - disc) % (4 * a):
                continue
            c = (b * b - disc) // (4 * a)
            if c < a or gcd(a, b, c) != 1:
                continue
            f = BinaryQuadraticForm(a, b, c)
            if f.is_reduced():
                out.append(f)
    return tuple(out)


def class_number(disc: int) -> int:
    return len(reduced_forms(disc))


@dataclass(frozen=True)
class ClassGroupDescription:
    discriminant: int
    h: int
    elementary_divisors: tuple[int, ...]

    def __post_init__(self):
        prod = 1
        for d in self.elementary_divisors:
            prod *= d
        if prod != self.h:
            raise ValueError("elementary divisors do not multiply to h")
        ed = self.elementary_divisors
        if any(ed[i] % ed[i + 1] for i in range(len(ed) - 1)):
            raise ValueError("divisibility chain broken")

    def is_cyclic(self) -> bool:
        return len(self.elementary_divisors) <= 1

    def to_json(self) -> dict:
        return {
            "discriminant": self.discriminant,
            "h": self.h,
            "elementary_divisors": list(self.elementary_divisors),
        }


def class_group(disc: int) -> ClassGroupDescription:
    """Structure of the form class group.

    For each prime p | h, the count of elements killed by p^k pins down the
    p-primary part; the invariant factors are then assembled from those.
    """
    forms = reduced_forms(disc)
    h = len(forms)
    orders = [form_order(f) for f in forms]
    per_prime = {}  # p -> exponents of the cyclic p-factors, descending
    for p, e in factorint(h).items():
        # n_k = #{x : p^k x = 0} = p^(sum_i min(k, e_i))
        sums = [0]
        k = 1
        while True:
            n_k = sum(1 for o in orders if (p ** k) % o == 0)
            s = _exact_log(n_k, p)
            sums.append(s)
            if s == e:
                break
            k += 1
        # number of factors with exponent >= k is sums[k] - sums[k-1]
        ge = [sums[i] - sums[i - 1] for i in range(1, len(sums))]
        exps = []
        for i in range(len(ge)):
            nxt = ge[i + 1] if i + 1 < len(ge) else 0
            exps += [i + 1] * (ge[i] - nxt)
        per_prime[p] = sorted(exps, reverse=True)
    cyc = []
    width = max((len(v) for v in per_prime.values()), default=0)
    for i in range(width):
        d = 1
        for p, exps in per_prime.items():
            if i < len(exps):
                d *= p ** exps[i]
        cyc.append(d)
    return ClassGroupDescription(disc, h, tuple(cyc))


def _exact_log(n: int, p: int) -> int:
    s = 0
    while n > 1:
        assert n % p == 0
        n //= p
        s += 1
    return s


def discriminant_of(m: int) -> int:
    """Discriminant of the maximal order of Q(sqrt(-m)) for squarefree m."""
    return -m if m % 4 == 3 else -4 * m


def ideal_to_form(I) -> BinaryQuadraticForm:
    zb = I.primitive().zbasis()
    o = I.order
    num = (o.omega + zb.b).norm()
    assert num % zb.a == 0
    return BinaryQuadraticForm(zb.a, 2 * zb.b + o.r - 1, num // zb.a)


def sqrt_mod(a: int, n: int):
    """Some ``x`` in ``[0, n)`` with ``x^2 = a (mod n)``, or None."""
    if n < 1:
        raise ValueError("modulus must be positive")
    if n == 1:
        return 0
    return _sympy_sqrt_mod(a % n, n)


def orders_histogram(disc: int) -> Counter:
    return Counter(form_order(f) for f in reduced_forms(disc))
