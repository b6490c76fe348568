from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl2spectrum.exact import (
    ONE,
    Polynomial,
    PowerSeries,
    evaluate_polynomial,
    psi_polynomial,
    rational_from_str,
    rational_to_str,
    series_add,
    series_compose_elementary,
    series_mul,
)
from sl2spectrum.recursion import psi_sequence


def hand_psi(n, E):
    """Reference recursion in exact rationals at a rational energy."""
    prev, cur = F(0), F(1)
    for k in range(n):
        prev, cur = cur, (E * cur - k * prev) / (k + 1)
    return cur


def test_psi_polynomial_examples():
    assert psi_polynomial(0) == Polynomial([1])
    assert psi_polynomial(2) == Polynomial([F(-1, 2), 0, F(1, 2)])
    assert psi_polynomial(3) == Polynomial([0, F(-5, 6), 0, F(1, 6)])


@pytest.mark.parametrize("n", range(0, 16))
def test_psi_polynomial_shape(n):
    import math

    p = psi_polynomial(n)
    assert p.degree == n
    assert p.coeffs[-1] == F(1, math.factorial(n))
    assert all(c == 0 for k, c in enumerate(p.coeffs) if k % 2 != n % 2)


@pytest.mark.parametrize("E", [F(0), F(2), F(-3, 7), F(5, 2)])
def test_psi_polynomial_matches_rational_recursion(E):
    for n in range(12):
        p = psi_polynomial(n)
        value = sum(c * E**k for k, c in enumerate(p.coeffs))
        assert value == hand_psi(n, E)


def test_evaluate_polynomial_examples():
    assert evaluate_polynomial(psi_polynomial(2), 0.0) == -0.5
    assert evaluate_polynomial(psi_polynomial(3), 2.0) == pytest.approx(-1 / 3, rel=1e-15)
    assert evaluate_polynomial(Polynomial(), 3.7) == 0.0


def test_polynomial_cross_check_against_float_recursion():
    grid = np.linspace(-5, 5, 20)
    polys = [psi_polynomial(n) for n in range(31)]
    for E in grid:
        psi = psi_sequence(E, 30).values
        for n, p in enumerate(polys):
            assert evaluate_polynomial(p, E) == pytest.approx(psi[n], rel=1e-12, abs=0)


def test_zero_polynomial_degree_sentinel():
    assert Polynomial().degree == -1
    assert Polynomial([0, 0]).is_zero()
    assert Polynomial([1, 2, 0]).coeffs == (F(1), F(2))


def test_polynomial_division():
    a = Polynomial([-1, 0, 1])  # E^2 - 1
    b = Polynomial([1, 1])
    assert a.exact_div(b) == Polynomial([-1, 1])
    with pytest.raises(ArithmeticError):
        Polynomial([1, 0, 1]).exact_div(b)


def test_rational_serialization_round_trip():
    assert rational_to_str(F(-6, 8)) == "-3/4"
    assert rational_to_str(0) == "0/1"
    assert rational_from_str("10/4") == F(5, 2)
    p = Polynomial([F(-21, 2048), 0, F(-15, 512)])
    assert Polynomial.from_json(p.to_json()) == p


def test_series_examples():
    x = PowerSeries.x(2)
    assert series_mul(1 + x, 1 - x) == PowerSeries([1, 0, -1], 2)
    a = PowerSeries([1, 2, 3], 2)
    assert series_add(a, PowerSeries.zero(2)) == a
    x1 = PowerSeries.x(1)
    assert (x1 * x1).is_zero()


def test_series_order_mismatch_rejected():
    with pytest.raises(ValueError):
        PowerSeries.x(2) + PowerSeries.x(3)
    with pytest.raises(ValueError):
        PowerSeries.x(2) * PowerSeries.x(3)


@pytest.mark.parametrize(
    "kind, expected",
    [
        ("log1p", [0, 1, F(-1, 2), F(1, 3)]),
        ("sin", [0, 1, 0, F(-1, 6)]),
        ("cos", [1, 0, F(-1, 2), 0]),
        ("geom", [0, 1, -1, 1]),
        ("sqrt1p", [1, F(1, 2), F(-1, 8), F(1, 16)]),
        ("inv_sqrt1p", [1, F(-1, 2), F(3, 8), F(-5, 16)]),
    ],
)
def test_compose_elementary_taylor(kind, expected):
    assert series_compose_elementary(kind, PowerSeries.x(3)) == PowerSeries(expected, 3)


def test_compose_requires_zero_constant():
    with pytest.raises(ValueError):
        series_compose_elementary("sin", PowerSeries([1, 1], 3))


def test_sqrt_squared_and_inverse():
    x = PowerSeries.x(8)
    s = series_compose_elementary("sqrt1p", x)
    assert s * s == 1 + x
    r = series_compose_elementary("inv_sqrt1p", x)
    assert (s * r) == PowerSeries.constant(1, 8)
    assert (1 + x).inverse() * (1 + x) == PowerSeries.constant(1, 8)


small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=7)
polys = st.lists(small_fracs, max_size=3).map(Polynomial)


def series_strategy(order=4):
    return st.lists(polys, max_size=order + 1).map(lambda c: PowerSeries(c, order))


@settings(max_examples=40, deadline=None)
@given(series_strategy(), series_strategy(), series_strategy())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=25, deadline=None)
@given(series_strategy(order=5))
def test_sin_squared_plus_cos_squared(s):
    s = PowerSeries([Polynomial(), *s.coeffs[1:]], s.order)  # zero constant term
    sn = series_compose_elementary("sin", s)
    cs = series_compose_elementary("cos", s)
    assert sn * sn + cs * cs == PowerSeries.constant(ONE, s.order)


@settings(max_examples=25, deadline=None)
@given(series_strategy(order=4), series_strategy(order=4))
def test_compose_is_homomorphism(a, b):
    inner = PowerSeries([0, 1, F(1, 3), -2], 4)
    assert (a * b).compose(inner) == a.compose(inner) * b.compose(inner)
