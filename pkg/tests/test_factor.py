import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import isprime

from quatideal.experiments import counted_reps
from quatideal.factor import (
    FactorWitness,
    NotTwoRepresentations,
    ShapeMismatch,
    factor_by_pairs,
    factor_from_order_pair,
    factor_single_rep,
    fermat_two_squares,
    two_square_reps,
    verify_shape_criterion,
)
from quatideal.ideals import enumerate_ideals
from quatideal.orders import make_order, order_from_mu


def test_witness_invariant():
    with pytest.raises(ValueError):
        FactorWitness(21, 1)
    with pytest.raises(ValueError):
        FactorWitness(21, 5)
    assert FactorWitness(21, 7).cofactor == 3


def test_fermat_examples():
    assert fermat_two_squares(25, 5, 0, 4, 3).factor == 5
    w = fermat_two_squares(50, 7, 1, 5, 5)
    assert w.factor == 10
    with pytest.raises(NotTwoRepresentations):
        fermat_two_squares(25, 5, 0, 5, 0)
    with pytest.raises(NotTwoRepresentations):
        fermat_two_squares(26, 5, 1, 4, 3)


def test_fermat_weight_two():
    # 33 = 1 + 2*16 = 25 + 2*4
    reps = two_square_reps(33, 2)
    assert reps == [(5, 2), (1, 4)]
    w = fermat_two_squares(33, 5, 2, 1, 4, weight=2)
    assert w.factor in (3, 11)


@given(st.integers(2, 10_000))
def test_fermat_against_trial_division(m):
    for weight in (1, 2):
        reps = two_square_reps(m, weight)
        if len(reps) < 2:
            continue
        (x0, y0), (x1, y1) = reps[0], reps[1]
        w = fermat_two_squares(m, x0, y0, x1, y1, weight=weight)
        assert m % w.factor == 0 and 1 < w.factor < m
        assert not isprime(m)


def test_order_pair_example_21():
    o = make_order(4, 2, 1)
    w = factor_from_order_pair(o, order_from_mu(-o.mu))
    assert w.factor in (3, 7)


@pytest.mark.parametrize("m", [5, 13, 29, 101, 997])
def test_primes_give_nothing(m):
    for rep in counted_reps(m):
        assert factor_single_rep(*rep) is None


def test_equivalent_orders_give_nothing():
    o = make_order(4, 2, 1)
    assert factor_from_order_pair(o, o) is None


def test_pairs_driver():
    w = factor_by_pairs(1001)
    assert w is not None and 1001 % w.factor == 0


@pytest.mark.parametrize("mu", [(3, 1, 0), (5, 1, 0), (5, 3, 0), (9, 5, 0), (2, 1, 1), (3, 2, 2), (7, 2, 2), (11, 3, 3)])
def test_shape_biconditional(mu):
    o = make_order(*mu)
    reports = [verify_shape_criterion(o, I) for I in enumerate_ideals(o, 60)]
    assert reports and all(r.holds for r in reports)
    assert any(r.class_ambiguous for r in reports)


def test_shape_mismatch():
    o = make_order(4, 2, 1)
    with pytest.raises(ShapeMismatch):
        verify_shape_criterion(o, enumerate_ideals(o, 3)[0])
