"""The lattice of all rho with rho*mu = mu'*rho, and its shortest vector."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .hurwitz import HurwitzQuaternion, full_scalar_product
from .orders import NormMismatch

log = logging.getLogger(__name__)


class NotPure(ValueError):
    pass


class AllZero(ValueError):
    pass


def ext_gcd(u: int, v: int) -> tuple[int, int, int]:
    """``(g, s, t)`` with ``g = gcd(u, v) = s*u + t*v`` and ``g >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    a, b = u, v
    while b:
        q = a // b
        a, b = b, a - q * b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def ext_gcd3(u: int, v: int, w: int) -> tuple[int, int, int, int]:
    """``(g, a, b, c)`` with ``g = gcd(u, v, w) = a*u + b*v + c*w``."""
    if u == v == w == 0:
        raise AllZero("ext_gcd3 of three zeros")
    g1, s, t = ext_gcd(u, v)
    g, p, c = ext_gcd(g1, w)
    return g, p * s, p * t, c


@dataclass(frozen=True)
class SolutionModule:
    upsilon: HurwitzQuaternion
    upsilon1: HurwitzQuaternion
    mu: HurwitzQuaternion
    mu_prime: HurwitzQuaternion
    case: str = ""

    def element(self, x: int, y: int) -> HurwitzQuaternion:
        return self.upsilon * x + self.upsilon1 * y

    def coordinates(self, rho: HurwitzQuaternion):
        """Rational ``(X, Y)`` with ``rho = X*upsilon + Y*upsilon1``, or None if outside the span."""
        u, v, w = self.upsilon.doubled, self.upsilon1.doubled, rho.doubled
        # pick two coordinates with a nonsingular 2x2 minor
        for i in range(4):
            for j in range(i + 1, 4):
                det = u[i] * v[j] - u[j] * v[i]
                if det:
                    x = Fraction(w[i] * v[j] - w[j] * v[i], det)
                    y = Fraction(u[i] * w[j] - u[j] * w[i], det)
                    if all(x * a + y * b == c for a, b, c in zip(u, v, w)):
                        return x, y
                    return None
        raise ValueError("degenerate solution module")


def _check_input(mu: HurwitzQuaternion, mu_prime: HurwitzQuaternion):
    if not mu.is_pure() or not mu_prime.is_pure():
        raise NotPure("mu and mu' must have zero real part")
    if mu.norm() != mu_prime.norm():
        raise NormMismatch(f"N({mu}) != N({mu_prime})")


def _pure(x: int, y: int, z: int) -> HurwitzQuaternion:
    return HurwitzQuaternion(0, 2 * x, 2 * y, 2 * z)


def _solve_opposite(x: int, y: int, z: int, m: int):
    """Basis for rho*mu = -mu*rho, mu = x i + y j + z k."""
    # the formula needs (y, z) != (0, 0); rotate axes so that holds
    if y == 0 and z == 0:
        # mu = x i with m = x^2 squarefree, so x = +-1
        return _pure(0, 1, 0), _pure(0, 0, 1)
    d, e, f = ext_gcd(y, z)
    ups = _pure(0, z // d, -y // d)
    ups1 = _pure(-d, x * e, x * f)
    return ups, ups1


def solve(mu: HurwitzQuaternion, mu_prime: HurwitzQuaternion) -> SolutionModule:
    """Z-basis ``[upsilon, upsilon1]`` of every Hurwitz rho with ``rho*mu = mu_prime*rho``."""
    _check_input(mu, mu_prime)
    _, x, y, z = mu.int_coords()
    _, x1, y1, z1 = mu_prime.int_coords()
    m = mu.norm()

    if mu_prime == -mu:
        ups, ups1 = _solve_opposite(x, y, z, m)
        sm = SolutionModule(ups, _size_reduce(ups, ups1), mu, mu_prime, "opposite")
        _verify(sm)
        return sm

    sums = (x1 + x, y1 + y, z1 + z)
    diffs = (x1 - x, y1 - y, z1 - z)
    d, a, b, c = ext_gcd3(*sums)
    e = gcd(d, *diffs)
    p = c * diffs[1] - b * diffs[2]
    q = a * diffs[2] - c * diffs[0]
    r = b * diffs[0] - a * diffs[1]
    ups = _pure(*(s // d for s in sums))
    # Upsilon = (-d + p i + q j + r k) / e, integral since e | d and e | p, q, r
    big = HurwitzQuaternion(2 * (-d // e), 2 * (p // e), 2 * (q // e), 2 * (r // e))
    coef = (a, b, c)

    case, shift = _select_case(m, sums, coef)
    if shift is None:
        ups1 = big
    else:
        ups1 = (big + ups * shift).exact_div_int(2)
    sm = SolutionModule(ups, _size_reduce(ups, ups1), mu, mu_prime, case)
    _verify(sm)
    return sm


def _size_reduce(ups: HurwitzQuaternion, ups1: HurwitzQuaternion) -> HurwitzQuaternion:
    """Representative of ``ups1`` modulo ``ups`` with ``-N/2 < (ups, ups1)_x <= N/2``.

    upsilon1 is only determined up to adding multiples of upsilon (it depends
    on which Bezout coefficients ext_gcd3 returns); this fixes one choice.
    """
    n = ups.norm()
    # k = ceil(((ups, ups1)_x - n/2) / n), with _full = 4 (ups, ups1)_x
    k = -((2 * n - _full(ups, ups1)) // (4 * n))
    return ups1 - ups * k if k else ups1


def _select_case(m: int, sums, coef):
    """Pick which half-lattice vector completes [upsilon, Upsilon].

    Returns ``(case, shift)`` where upsilon1 = (Upsilon + shift*upsilon) / 2, or
    shift None when upsilon1 = Upsilon.
    """
    if m % 4 in (1, 2):
        even = [i for i, s in enumerate(sums) if s % 2 == 0]
        # with all three sums even no half-integral solution exists
        if len(even) == 1:
            i = even[0]
            return "a", coef[i] + 1
        return "d", None
    if m % 8 == 3:
        residues = [s % 4 for s in sums]
        if residues.count(2) == 1 and residues.count(0) == 2:
            i = residues.index(2)
            others = [coef[j] for j in range(3) if j != i]
            return "b", others[0] + others[1] + 1
        if residues == [2, 2, 2]:
            return "c", 1
        return "d", None
    raise ValueError(f"m = {m} is not admissible")


def _verify(sm: SolutionModule) -> None:
    for v in (sm.upsilon, sm.upsilon1):
        if v * sm.mu != sm.mu_prime * v:
            raise AssertionError(f"{v} does not solve rho*mu = mu'*rho (case {sm.case})")
    if norm_form_discriminant(sm) >= 0:
        raise AssertionError("solution basis is linearly dependent")


def norm_form(sm: SolutionModule) -> tuple[int, int, int]:
    """``(N(u), 2 (u, u1)_x, N(u1))``: the norm of ``u X + u1 Y`` as a binary form."""
    b = 2 * full_scalar_product(sm.upsilon, sm.upsilon1)
    assert b.denominator == 1
    return sm.upsilon.norm(), int(b), sm.upsilon1.norm()


def norm_form_discriminant(sm: SolutionModule) -> int:
    a, b, c = norm_form(sm)
    return b * b - 4 * a * c


def _full(u: HurwitzQuaternion, v: HurwitzQuaternion) -> int:
    # doubled inner product is 4 (u, v)_x
    return u.da * v.da + u.db * v.db + u.dc * v.dc + u.dd * v.dd


def iteration_cap(max_norm: int) -> int:
    """Engineering cap on Gauss-loop iterations for inputs of the given size."""
    import math

    ll = math.log(max(max_norm, 3))
    return 2 * (math.ceil(math.log2(ll)) + 8)


def gauss_reduce(u: HurwitzQuaternion, v: HurwitzQuaternion):
    """Reduce the basis ``[u, v]``; returns ``(short, other, iterations)``.

    On return ``N(short) <= N(other)`` and ``-N(short)/2 <= (short, other)_x < N(short)/2``.
    """
    if u.norm() < v.norm():
        u, v = v, u
    iterations = 0
    while True:
        u, v = v, u
        nu = u.norm()
        # X = floor((u, v)_x / N(u) + 1/2); (u, v)_x = _full/4 and N(u) = nu
        x = (2 * _full(u, v) + 4 * nu) // (8 * nu)
        if x:
            v = v - u * x
        iterations += 1
        if not (u.is_primitive() and v.is_primitive()):
            raise AssertionError("reduction basis lost primitivity")
        if u.norm() > v.norm():
            continue
        return u, v, iterations


def minimal_vector(sm: SolutionModule, *, with_iterations: bool = False):
    """Lattice element of smallest positive norm."""
    u, v, iterations = gauss_reduce(sm.upsilon, sm.upsilon1)
    nu, nv = u.norm(), v.norm()
    result = u
    if nu == nv:
        f = _full(u, v)  # 4 (u, v)_x
        if 2 * abs(f) >= 4 * nu:
            # tie: u and v -/+ u have equal norm; prefer the combination
            result = v - u if f > 0 else v + u
            assert result.norm() == nu
    log.debug("minimal_vector: %d iterations, norm %d", iterations, result.norm())
    if with_iterations:
        return result, iterations
    return result
