"""Order-by-order derivation of the 1/n correction polynomials.

With psi_n = A_n / sqrt(n) * cos(Phi_n), A_n = A (1 + delta(x)),
Phi_n = (E/2) log n - pi n / 2 + phi + eps(x) and x = 1/n, the recursion
splits into one condition per coefficient of cos(Phi_n) and sin(Phi_n).
After multiplying by x sqrt(n) / A_n both read

    sqrt(1+x) R+ sin(a)  + (1-x)^(-1/2) R- sin(a') - E x = 0
    sqrt(1+x) R+ cos(a)  - (1-x)^(-1/2) R- cos(a')       = 0

with R+- = A_{n+-1} / A_n and a, a' the phase increments towards n+1 and
n-1. At x**(k+1) the unknowns delta_k, eps_k enter linearly and nothing of
higher index does, so they are solved for one order at a time.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exact import (
    E_VAR,
    ZERO,
    Polynomial,
    PowerSeries,
    series_compose_elementary,
)

P = Polynomial

PAPER_DELTA: tuple[Polynomial, ...] = (
    P([Fraction(-1, 4)]),
    P([1, 0, 2]) / 32,
    P([5, 0, -10]) / 128,
    P([-21, 0, -60, 0, 20]) / 2048,
    -P([399, 0, -1380, 0, 180]) / 8192,
    P([869, 0, 2518, 0, -2540, 0, 120]) / 65536,
)
PAPER_EPSILON: tuple[Polynomial, ...] = (
    P([0, Fraction(1, 4)]),
    -P([0, -5, 0, 1]) / 96,
    P([0, -9, 0, 1]) / 96,
    -P([0, 341, 0, -490, 0, 9]) / 15360,
    P([0, 375, 0, -190, 0, 3]) / 2560,
    -P([0, -7615, 0, 22169, 0, -2793, 0, 15]) / 258048,
)


class BootstrapError(RuntimeError):
    pass


@dataclass(frozen=True)
class CorrectionTables:
    order: int
    delta: tuple[Polynomial, ...]
    epsilon: tuple[Polynomial, ...]

    def __post_init__(self):
        if len(self.delta) != self.order or len(self.epsilon) != self.order:
            raise ValueError("delta and epsilon must each hold `order` polynomials")

    def truncated(self, J: int) -> "CorrectionTables":
        if not 0 <= J <= self.order:
            raise ValueError(f"cannot truncate order {self.order} table to {J}")
        return CorrectionTables(J, self.delta[:J], self.epsilon[:J])

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "delta": [p.to_json() for p in self.delta],
            "epsilon": [p.to_json() for p in self.epsilon],
        }

    @classmethod
    def from_json(cls, doc: dict | str) -> "CorrectionTables":
        if isinstance(doc, str):
            doc = json.loads(doc)
        return cls(
            int(doc["order"]),
            tuple(Polynomial.from_json(c) for c in doc["delta"]),
            tuple(Polynomial.from_json(c) for c in doc["epsilon"]),
        )

    def coefficient_values(self, E: float) -> tuple[np.ndarray, np.ndarray]:
        """Float values (delta_1(E)..delta_J(E)), (eps_1(E)..eps_J(E))."""
        return (
            np.array([p(E) for p in self.delta], dtype=float),
            np.array([p(E) for p in self.epsilon], dtype=float),
        )


def _partial_sum(coeffs: np.ndarray, n):
    x = 1.0 / np.asarray(n, dtype=float)
    acc = np.zeros_like(x)
    for c in coeffs[::-1]:
        acc = (acc + c) * x
    return acc


def correction_eval(t: CorrectionTables, n, E: float):
    """Partial sums sum_j delta_j(E)/n^j and sum_j eps_j(E)/n^j.

    ``n`` may be a scalar or an array; returns floats or arrays to match.
    """
    if np.any(np.asarray(n) < 1):
        raise ValueError("n must be >= 1")
    d, e = t.coefficient_values(E)
    delta, eps = _partial_sum(d, n), _partial_sum(e, n)
    if np.ndim(n) == 0:
        return float(delta), float(eps)
    return delta, eps


def _series(coeffs: Sequence[Polynomial], order: int) -> PowerSeries:
    return PowerSeries([ZERO, *coeffs], order)


def bracket_conditions(
    delta: Sequence[Polynomial], epsilon: Sequence[Polynomial], order: int
) -> tuple[PowerSeries, PowerSeries]:
    """The cos(Phi_n) and sin(Phi_n) conditions as series in x, truncated at ``order``."""
    x = PowerSeries.x(order)
    half_E = E_VAR / 2
    d = _series(delta, order)
    e = _series(epsilon, order)

    x_next = series_compose_elementary("geom", x)  # 1/(n+1) = x/(1+x)
    x_prev = -series_compose_elementary("geom", -x)  # 1/(n-1) = x/(1-x)

    a_next = series_compose_elementary("log1p", x) * half_E + e.compose(x_next) - e
    a_prev = -series_compose_elementary("log1p", -x) * half_E + e - e.compose(x_prev)

    inv_amp = (1 + d).inverse()
    r_next = series_compose_elementary("sqrt1p", x) * (1 + d.compose(x_next)) * inv_amp
    r_prev = series_compose_elementary("inv_sqrt1p", -x) * (1 + d.compose(x_prev)) * inv_amp

    cos_cond = (
        r_next * series_compose_elementary("sin", a_next)
        + r_prev * series_compose_elementary("sin", a_prev)
        - x * E_VAR
    )
    sin_cond = (
        r_next * series_compose_elementary("cos", a_next)
        - r_prev * series_compose_elementary("cos", a_prev)
    )
    return cos_cond, sin_cond


def _solve_2x2(M: list[list[Polynomial]], rhs: list[Polynomial], k: int):
    det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    if det.is_zero():
        raise BootstrapError(f"singular system at order {k}: M={M}")
    try:
        u = (M[1][1] * rhs[0] - M[0][1] * rhs[1]).exact_div(det)
        v = (M[0][0] * rhs[1] - M[1][0] * rhs[0]).exact_div(det)
    except ArithmeticError as exc:
        raise BootstrapError(f"no polynomial solution at order {k}: {exc}") from exc
    return u, v


def derive_corrections(J: int) -> CorrectionTables:
    """Solve for delta_1..delta_J, eps_1..eps_J exactly.

    Each step truncates at x**(k+1), the lowest power in which delta_k and
    eps_k appear; truncated products are exact at every retained power.
    """
    if J < 1:
        raise ValueError("order J must be >= 1")
    delta: list[Polynomial] = []
    epsilon: list[Polynomial] = []
    for k in range(1, J + 1):
        order = k + 1

        def at(dk: Polynomial, ek: Polynomial) -> list[Polynomial]:
            c, s = bracket_conditions(delta + [dk], epsilon + [ek], order)
            return [c[order], s[order]]

        base = at(ZERO, ZERO)
        with_d = at(Polynomial.constant(1), ZERO)
        with_e = at(ZERO, Polynomial.constant(1))
        # residual = base + M @ (delta_k, eps_k); probing with 1 reads off M
        M = [[with_d[i] - base[i], with_e[i] - base[i]] for i in range(2)]
        dk, ek = _solve_2x2(M, [-base[0], -base[1]], k)
        delta.append(dk)
        epsilon.append(ek)

        c, s = bracket_conditions(delta, epsilon, order)
        for series, name in ((c, "cos"), (s, "sin")):
            bad = [j for j in range(order + 1) if not series[j].is_zero()]
            if bad:
                raise BootstrapError(f"{name} condition inconsistent at x^{bad[0]} (order {k})")
    return CorrectionTables(J, tuple(delta), tuple(epsilon))


def residual_check(t: CorrectionTables) -> tuple[PowerSeries, PowerSeries]:
    """Both bracket conditions with the table substituted, through x**(J+1).

    For a correct table every coefficient is the zero polynomial.
    """
    return bracket_conditions(t.delta, t.epsilon, t.order + 1)


def compare_with_printed(t: CorrectionTables) -> list[tuple[str, Polynomial, Polynomial, bool]]:
    """Rows (name, derived, printed, equal) for the orders both tables cover."""
    rows = []
    for name, ours, ref in (("delta", t.delta, PAPER_DELTA), ("epsilon", t.epsilon, PAPER_EPSILON)):
        for j, (a, b) in enumerate(zip(ours, ref), start=1):
            rows.append((f"{name}_{j}", a, b, a == b))
    return rows
