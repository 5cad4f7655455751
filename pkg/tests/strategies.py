"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from quatideal.hurwitz import HurwitzQuaternion
from quatideal.ideals import ZBasis, from_z_basis, zbasis_valid
from quatideal.orders import make_order

small = st.integers(-30, 30)


@st.composite
def hurwitz(draw, bound=30, nonzero=False):
    half = draw(st.booleans())
    vals = [draw(st.integers(-bound, bound)) for _ in range(4)]
    d = [2 * v + 1 for v in vals] if half else [2 * v for v in vals]
    q = HurwitzQuaternion(*d)
    if nonzero and q.is_zero():
        q = HurwitzQuaternion(2, 0, 0, 0)
    return q


# the orders the property suite runs over
ORDER_MUS = {10: (3, 1, 0), 21: (4, 2, 1), 30: (5, 2, 1), 105: (10, 2, 1), 893: (29, 4, 6), 1961: (42, 14, 1)}
ORDERS = {m: make_order(*mu) for m, mu in ORDER_MUS.items()}


@st.composite
def ideals_of(draw, max_norm=200, ms=tuple(ORDERS)):
    o = ORDERS[draw(st.sampled_from(ms))]
    while True:
        a = draw(st.integers(1, max_norm))
        bs = [b for b in range(a) if zbasis_valid(a, b, o)]
        if bs:
            return from_z_basis(ZBasis(a, draw(st.sampled_from(bs)), o))


@st.composite
def ideal_pairs(draw, max_norm=60, ms=tuple(ORDERS)):
    m = draw(st.sampled_from(ms))
    return draw(ideals_of(max_norm, (m,))), draw(ideals_of(max_norm, (m,)))
