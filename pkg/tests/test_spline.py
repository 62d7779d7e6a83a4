import pytest
from hypothesis import given, strategies as st

from antibracket.errors import DivergenceError, SmoothnessError
from antibracket.sampling import random_bump_spline
from antibracket.scalars import mpq
from antibracket.spline import PiecewisePolynomial, SupportSet

from conftest import rngs

PP = PiecewisePolynomial


def unit_bump(a=0, b=1, order=5):
    raw = PP.bump(a, b, order)
    return raw.scale(mpq(1) / raw.integral())


def test_bump_has_declared_smoothness():
    for order in (1, 3, 5):
        assert PP.bump(0, 1, order).smoothness() == order - 1


def test_unit_bump_cumulative_tails():
    c = unit_bump().cumulative()
    assert c.left_tail() == ()
    assert c.right_tail() == (1,)


def test_cumulative_of_zero():
    assert PP.constant(0).cumulative().is_zero()


@given(rngs)
def test_cumulative_inverts_derivative(rng):
    phi = random_bump_spline(rng)
    assert phi.diff().cumulative() == phi


@given(rngs)
def test_derivative_of_cumulative(rng):
    phi = random_bump_spline(rng)
    assert phi.cumulative().diff() == phi


@given(rngs, rngs)
def test_product_and_sum_evaluate_pointwise(r1, r2):
    a, b = random_bump_spline(r1), random_bump_spline(r2)
    for x in (mpq(-5, 2), mpq(-1, 3), 0, mpq(7, 5), 2):
        assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
        assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)


def test_redundant_breakpoints_are_merged():
    plain = PP.polynomial((1, 2))
    split = PP((0, 1), ((1, 2), (1, 2), (1, 2)))
    assert split == plain
    assert split.breakpoints == ()


def test_breakpoints_validation():
    with pytest.raises(ValueError):
        PP((1, 0), ((), (), ()))
    with pytest.raises(ValueError):
        PP((0,), ((),))


def test_derivative_across_jump_raises():
    step = PP((0,), ((), (1,)))
    with pytest.raises(SmoothnessError):
        step.diff()
    kink = PP.bump(0, 1, 1)
    with pytest.raises(SmoothnessError):
        kink.diff().diff()


def test_noncompact_integral_raises():
    with pytest.raises(DivergenceError):
        PP.constant(1).integral()


def test_support():
    phi = PP.bump(0, 1) + PP.bump(2, 3)
    assert phi.support() == SupportSet([(0, 1), (2, 3)])
    assert PP.constant(0).support().is_empty()
    assert not PP.constant(1).support().is_bounded()


@given(rngs)
def test_json_round_trip(rng):
    phi = random_bump_spline(rng)
    back = PP.from_json(phi.to_json())
    assert back == phi
    assert phi.to_dict()["smoothness"] == phi.smoothness()


def test_json_rejects_overstated_smoothness():
    data = PP.bump(0, 1, 2).to_dict(smoothness=4)
    with pytest.raises(ValueError):
        PP.from_dict(data)


def test_json_is_bit_exact():
    phi = PP.bump(mpq(1, 3), mpq(5, 7), 2, mpq(-2, 9))
    text = phi.to_json()
    assert "1/3" in text and "5/7" in text
    assert PP.from_json(text).pieces == phi.pieces
