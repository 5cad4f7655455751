from fractions import Fraction

import pytest
from hypothesis import given

from quatideal.hurwitz import (
    HurwitzQuaternion as H,
    RationalQuaternion,
    NotHurwitz,
    canonical_associate,
    div_rem_left,
    div_rem_right,
    divides_left,
    divides_right,
    full_scalar_product,
    gcd_left,
    gcd_right,
    parse,
    scalar_product,
    units,
    vector_product,
)

from strategies import hurwitz

I, J, K, ONE = parse("i"), parse("j"), parse("k"), parse("1")


def test_addition():
    assert parse("1") + parse("i") == parse("1+i")
    assert parse("(1+i+j+k)/2") + parse("(1-i-j-k)/2") == ONE
    assert (I + (-I)).is_zero()


def test_multiplication_table():
    assert I * J == K
    assert J * I == -K
    assert J * K == I and K * I == J
    assert I * I == -ONE
    assert parse("(1+i+j+k)/2") * parse("(1-i-j-k)/2") == ONE


def test_conjugate_norm_inverse():
    assert parse("1+i").conjugate() == parse("1-i")
    assert parse("1+i").norm() == 2
    assert parse("(1+i+j+k)/2").norm() == 1
    assert I.inverse().to_hurwitz() == -I


def test_parity_invariant():
    with pytest.raises(ValueError):
        H(1, 0, 0, 0)


def test_scalar_and_vector_products():
    assert scalar_product(I, J) == 0
    assert scalar_product(parse("i+2j"), parse("3j+k")) == 6
    assert scalar_product(parse("i+j+k"), parse("i+j+k")) == 3
    assert vector_product(I, J).to_hurwitz() == K
    assert full_scalar_product(parse("1+i"), parse("1+i")) == 2


def test_pure_product_identity_example():
    q, r = parse("i+2k"), parse("3j")
    lhs = q * r
    rhs = vector_product(q, r).to_hurwitz() - int(scalar_product(q, r))
    assert lhs == rhs


def test_content():
    assert parse("2+4i").content() == 2
    assert parse("(1+i+j+k)/2").content() == 1
    assert parse("3+6i").content() == 3
    # 3+3i+3j+3k is 6 * (1+i+j+k)/2, so its content is 6 rather than 3
    assert parse("3+3i+3j+3k").content() == 6
    assert parse("1+i+j+k").content() == 2


def test_exact_division_guard():
    with pytest.raises(NotHurwitz):
        parse("1+i").exact_div_int(3)


def test_division_examples():
    xi, s = div_rem_right(K, I)
    assert s.is_zero() and xi * I == K
    xi, s = div_rem_right(parse("3+4i-j"), ONE)
    assert xi == parse("3+4i-j") and s.is_zero()
    xi, s = div_rem_right(parse("3+i"), parse("2i"))
    assert xi * parse("2i") + s == parse("3+i")
    assert s.norm() < 4


def test_gcd_examples():
    q = parse("3-2i+j")
    assert gcd_right(q, H(0, 0, 0, 0)) == canonical_associate(q)
    g = gcd_right(parse("2"), parse("1+i"))
    assert g.norm() == 2 and divides_right(g, parse("1+i")) and divides_right(g, parse("2"))


def test_units_and_canonical():
    us = units()
    assert len(us) == 24 and len(set(us)) == 24
    assert all(u.norm() == 1 for u in us)
    assert canonical_associate(-ONE) == ONE
    assert canonical_associate(I * parse("1+j")) == canonical_associate(parse("1+j"))


def test_divisibility_examples():
    assert divides_right(I, K)
    assert not divides_right(parse("1+i"), parse("3"))


def test_parse_roundtrip():
    for text in ["1+i", "(1+i+j+k)/2", "-3j+k", "0", "(3-5i+j-k)/2"]:
        assert str(parse(text)) == text


@given(hurwitz(), hurwitz())
def test_norm_multiplicative(p, q):
    assert (p * q).norm() == p.norm() * q.norm()


@given(hurwitz(), hurwitz())
def test_conjugate_antihomomorphism(p, q):
    assert (p * q).conjugate() == q.conjugate() * p.conjugate()


@given(hurwitz(), hurwitz())
def test_qr_plus_rq(p, q):
    # p q + q p = 2 Re(p) q + 2 Re(q) p - 2 (p, q)
    lhs = (p * q + q * p).to_rational()
    rhs = q.to_rational() * (2 * p.real_part()) + p.to_rational() * (2 * q.real_part())
    rhs = rhs - RationalQuaternion(2 * full_scalar_product(p, q))
    assert lhs.coords == rhs.coords


@given(hurwitz(), hurwitz())
def test_pure_product_splits(p, q):
    u, v = p.vector_part(), q.vector_part()
    lhs = RationalQuaternion(0, *p.coords[1:]) * RationalQuaternion(0, *q.coords[1:])
    rhs = vector_product(u, v) - RationalQuaternion(scalar_product(u, v))
    assert lhs.coords == rhs.coords


@given(hurwitz(bound=40), hurwitz(bound=10, nonzero=True))
def test_euclidean_right_division(q, d):
    xi, s = div_rem_right(q, d)
    assert xi * d + s == q
    assert s.norm() < d.norm()


@given(hurwitz(bound=40), hurwitz(bound=10, nonzero=True))
def test_euclidean_left_division(q, d):
    xi, s = div_rem_left(q, d)
    assert d * xi + s == q
    assert s.norm() < d.norm()


@given(hurwitz(bound=20), hurwitz(bound=20))
def test_gcd_right_divides_both(p, q):
    if p.is_zero() and q.is_zero():
        return
    g = gcd_right(p, q)
    assert divides_right(g, p) and divides_right(g, q)


@given(hurwitz(bound=20), hurwitz(bound=20))
def test_gcd_left_divides_both(p, q):
    if p.is_zero() and q.is_zero():
        return
    g = gcd_left(p, q)
    assert divides_left(g, p) and divides_left(g, q)


@given(hurwitz(bound=15, nonzero=True), hurwitz(bound=15, nonzero=True))
def test_gcd_right_common_factor(x, rho):
    assert divides_right(rho, gcd_right(x * rho, I * rho))
    assert gcd_right(I * rho, rho) == canonical_associate(rho)


@given(hurwitz(nonzero=True))
def test_canonical_associate_orbit(q):
    c = canonical_associate(q)
    assert all(canonical_associate(e * q) == c for e in units())


@given(hurwitz())
def test_json_roundtrip(q):
    assert H.from_json(q.to_json()) == q
    assert parse(str(q)) == q


def test_real_part_is_fraction():
    assert parse("(1+i+j+k)/2").real_part() == Fraction(1, 2)
