import json
from fractions import Fraction as F

import numpy as np
import pytest

from sl2spectrum.bootstrap import (
    PAPER_DELTA,
    PAPER_EPSILON,
    CorrectionTables,
    bracket_conditions,
    compare_with_printed,
    correction_eval,
    derive_corrections,
    residual_check,
)
from sl2spectrum.exact import Polynomial, PowerSeries, series_compose_elementary


def test_order_one():
    t = derive_corrections(1)
    assert t.delta == (Polynomial([F(-1, 4)]),)
    assert t.epsilon == (Polynomial([0, F(1, 4)]),)


def test_order_two():
    t = derive_corrections(2)
    assert t.delta[1] == Polynomial([1, 0, 2]) / 32
    assert t.epsilon[1] == -Polynomial([0, -5, 0, 1]) / 96


def test_order_six_matches_printed(tables6):
    assert tables6.delta[5] == Polynomial([869, 0, 2518, 0, -2540, 0, 120]) / 65536
    assert tables6.epsilon[5] == -Polynomial([0, -7615, 0, 22169, 0, -2793, 0, 15]) / 258048
    rows = compare_with_printed(tables6)
    assert len(rows) == 12
    assert [name for name, _, _, ok in rows if not ok] == []


def test_printed_constants_transcription():
    # spot-check the built-in reference against the printed fractions as written
    assert PAPER_DELTA[3] == Polynomial([-21, 0, -60, 0, 20]) / 2048
    assert PAPER_EPSILON[3] == -Polynomial([0, 341, 0, -490, 0, 9]) / 15360
    assert PAPER_DELTA[2].coeffs == (F(5, 128), 0, F(-10, 128))


def test_lower_orders_stable(tables8):
    # solving to a higher order never changes the lower coefficients
    assert tables8.truncated(6) == derive_corrections(6)


def test_parity(tables8):
    for d, e in zip(tables8.delta, tables8.epsilon):
        assert d.is_even()
        assert e.is_odd()


@pytest.mark.parametrize("J", [3, 6])
def test_residuals_vanish(J, tables8):
    cos_r, sin_r = residual_check(tables8.truncated(J))
    assert cos_r.order == J + 1
    assert cos_r.is_zero() and sin_r.is_zero()


def test_residual_sensitive_to_perturbation(tables6):
    t = tables6
    bad = CorrectionTables(t.order, (Polynomial([F(-1, 3)]),) + t.delta[1:], t.epsilon)
    cos_r, sin_r = residual_check(bad)
    # delta_1 first enters the sin-condition at x^2
    assert sin_r.valuation() == 2
    assert cos_r.valuation() is not None and cos_r.valuation() >= 2


def test_alpha_expansion_third_order():
    # x^3 coefficient of (E/2) log(1+x) is E/6
    lg = series_compose_elementary("log1p", PowerSeries.x(3)) * (Polynomial([0, 1]) / 2)
    assert lg[3] == Polynomial([0, F(1, 6)])
    assert lg[2] == Polynomial([0, F(-1, 4)])


def test_alpha_expansion_with_phase_unknowns():
    # alpha_n = (E/2)x - (E/4 + e1)x^2 + (E/6 + e1 - 2 e2)x^3 + ... with symbolic e1, e2
    # represented by plugging e1 = 1, e2 = 0 and e1 = 0, e2 = 1
    x = PowerSeries.x(3)
    geom = series_compose_elementary("geom", x)
    half_E = Polynomial([0, F(1, 2)])
    base = series_compose_elementary("log1p", x) * half_E
    for e1, e2 in [(1, 0), (0, 1), (3, -2)]:
        eps = PowerSeries([0, e1, e2], 3)
        alpha = base + eps.compose(geom) - eps
        assert alpha[2] == Polynomial([-e1, F(-1, 4)])
        assert alpha[3] == Polynomial([e1 - 2 * e2, F(1, 6)])


def test_conditions_hold_trivially_at_low_order():
    c, s = bracket_conditions([], [], 1)
    assert c.is_zero() and s.is_zero()


def test_correction_eval_examples(tables6):
    d, e = correction_eval(tables6.truncated(1), 4, 0.0)
    assert d == -1 / 16 and e == 0.0
    d, e = correction_eval(tables6.truncated(2), 10, 2.0)
    assert d == pytest.approx(-1 / 40 + 9 / 3200, rel=1e-15)
    assert e == pytest.approx(1 / 20 + 1 / 4800, rel=1e-15)
    d, e = correction_eval(tables6, 10**9, 1.0)
    assert abs(d) < 1e-8 and abs(e) < 1e-8


def test_correction_eval_vectorized(tables6):
    n = np.array([10, 100, 1000])
    d, e = correction_eval(tables6, n, 1.3)
    for k, nk in enumerate(n):
        dk, ek = correction_eval(tables6, int(nk), 1.3)
        assert d[k] == dk and e[k] == ek


def test_correction_eval_rejects_small_n(tables6):
    with pytest.raises(ValueError):
        correction_eval(tables6, 0, 1.0)


def test_json_round_trip(tables6):
    doc = tables6.to_json()
    assert doc["order"] == 6
    assert doc["delta"][0] == ["-1/4"]
    assert doc["epsilon"][0] == ["0/1", "1/4"]
    assert CorrectionTables.from_json(json.dumps(doc)) == tables6


def test_invalid_order():
    with pytest.raises(ValueError):
        derive_corrections(0)


def test_numerical_scaling_of_truncation_error(tables8):
    # residual after stripping J terms shrinks like n^-(J+1); doubling n_min divides it by ~2^(J+1)
    from sl2spectrum.asymptotics import extract_constants

    for E in (0.0, 1.0, 2.5):
        for J in (2, 6):
            t = tables8.truncated(J)
            r1 = extract_constants(E, 20, 200, t).residual
            r2 = extract_constants(E, 40, 400, t).residual
            ratio = r1 / r2
            assert 2 ** (J + 1) / 2 < ratio < 2 ** (J + 1) * 2, (E, J, ratio)
