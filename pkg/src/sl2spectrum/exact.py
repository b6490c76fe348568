"""Exact arithmetic: polynomials in E over the rationals and truncated power
series in x = 1/n whose coefficients are such polynomials.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator). Everything here is immutable.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

Scalar = Union[int, Fraction]

SERIES_KINDS = ("sin", "cos", "log1p", "sqrt1p", "inv_sqrt1p", "geom")


def rational_to_str(q: Scalar) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(s: str) -> Fraction:
    return Fraction(s.strip())


class Polynomial:
    """Polynomial in E with exact rational coefficients, dense storage.

    ``coeffs[k]`` is the coefficient of E**k. Trailing zeros are stripped, so
    the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [Fraction(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Polynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def parity(self) -> int | None:
        """0 if even, 1 if odd, None if mixed. The zero polynomial counts as both; returns 0."""
        powers = {k % 2 for k, a in enumerate(self.coeffs) if a != 0}
        if len(powers) > 1:
            return None
        return powers.pop() if powers else 0

    def is_even(self) -> bool:
        return all(a == 0 for a in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(a == 0 for a in self.coeffs[0::2])

    def __call__(self, E: float) -> float:
        return evaluate_polynomial(self, E)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Polynomial(0)"
        terms = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            terms.append(f"({a})" + ("" if k == 0 else "*E" if k == 1 else f"*E^{k}"))
        return "Polynomial(" + " + ".join(terms) + ")"

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(a / other for a in self.coeffs)
        if isinstance(other, Polynomial):
            return self.exact_div(other)
        return NotImplemented

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            quot[k - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:dq] if dq > 0 else [])

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"{self!r} is not divisible by {other!r}")
        return q

    def to_json(self) -> list[str]:
        return [rational_to_str(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, items: Sequence[str | int]) -> "Polynomial":
        return cls(rational_from_str(str(a)) for a in items)


ZERO = Polynomial()
ONE = Polynomial.constant(1)
E_VAR = Polynomial.monomial(1)


def evaluate_polynomial(p: Polynomial, E: float) -> float:
    """Horner evaluation of ``p`` at a float energy."""
    acc = 0.0
    for a in reversed(p.coeffs):
        acc = acc * E + float(a)
    return acc


def psi_polynomial(n: int) -> Polynomial:
    """Exact psi_n(E) from (k+1) psi_{k+1} = E psi_k - k psi_{k-1}, psi_0 = 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    prev, cur = ZERO, ONE
    for k in range(n):
        prev, cur = cur, (E_VAR * cur - prev * k) / (k + 1)
    return cur


class PowerSeries:
    """Power series in x truncated at ``order`` (terms x**0 .. x**order).

    Coefficients are :class:`Polynomial` in E. Binary operations require equal
    orders; mixing orders raises ``ValueError``.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Polynomial | Scalar], order: int):
        if order < 0:
            raise ValueError("order must be >= 0")
        c = [a if isinstance(a, Polynomial) else Polynomial.constant(a) for a in coeffs]
        c = c[: order + 1]
        c += [ZERO] * (order + 1 - len(c))
        self.order = order
        self.coeffs: tuple[Polynomial, ...] = tuple(c)

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([], order)

    @classmethod
    def constant(cls, c: Polynomial | Scalar, order: int) -> "PowerSeries":
        return cls([c], order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls([0, 1], order)

    def __getitem__(self, k: int) -> Polynomial:
        return self.coeffs[k]

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coeffs)

    def valuation(self) -> int | None:
        """Lowest power with a nonzero coefficient, None for the zero series."""
        for k, a in enumerate(self.coeffs):
            if not a.is_zero():
                return k
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"PowerSeries({list(self.coeffs)!r}, order={self.order})"

    def _check(self, other: "PowerSeries") -> None:
        if not isinstance(other, PowerSeries):
            raise TypeError(f"expected PowerSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            other = PowerSeries.constant(other, self.order)
        self._check(other)
        return PowerSeries((a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries((-a for a in self.coeffs), self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return PowerSeries((a * other for a in self.coeffs), self.order)
        self._check(other)
        J = self.order
        out = [ZERO] * (J + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(J + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return PowerSeries(out, J)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PowerSeries":
        if k < 0:
            return self.inverse() ** (-k)
        result = PowerSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "PowerSeries":
        """Multiplicative inverse; the constant term must be a nonzero rational."""
        c0 = self.coeffs[0]
        if c0.degree != 0:
            raise ValueError("inverse needs a nonzero constant (E-independent) leading term")
        inv0 = 1 / c0.coeffs[0]
        out = [Polynomial.constant(inv0)]
        for k in range(1, self.order + 1):
            acc = ZERO
            for j in range(1, k + 1):
                acc = acc + self.coeffs[j] * out[k - j]
            out.append(-acc * inv0)
        return PowerSeries(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries((a / other for a in self.coeffs), self.order)
        return self * other.inverse()

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """self(inner(x)); ``inner`` must have zero constant term."""
        self._check(inner)
        if not inner.coeffs[0].is_zero():
            raise ValueError("inner series must have zero constant term")
        # Horner in the series ring
        acc = PowerSeries.zero(self.order)
        for a in reversed(self.coeffs):
            acc = acc * inner + a
        return acc

    def evaluate(self, x: float, E: float) -> float:
        acc = 0.0
        for a in reversed(self.coeffs):
            acc = acc * x + evaluate_polynomial(a, E)
        return acc


def series_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a + b


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a * b


def _binomial(alpha: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for j in range(k):
        out = out * (alpha - j) / (j + 1)
    return out


_TAYLOR: dict[str, Callable[[int], Fraction]] = {
    "sin": lambda k: Fraction(0) if k % 2 == 0 else Fraction((-1) ** (k // 2), math.factorial(k)),
    "cos": lambda k: Fraction(0) if k % 2 else Fraction((-1) ** (k // 2), math.factorial(k)),
    "log1p": lambda k: Fraction(0) if k == 0 else Fraction((-1) ** (k + 1), k),
    "sqrt1p": lambda k: _binomial(Fraction(1, 2), k),
    "inv_sqrt1p": lambda k: _binomial(Fraction(-1, 2), k),
    "geom": lambda k: Fraction(0) if k == 0 else Fraction((-1) ** (k + 1)),
}


def taylor_series(kind: str, order: int) -> PowerSeries:
    """Maclaurin series of the named elementary function, exact to ``order``.

    ``geom`` is t/(1+t); ``sqrt1p`` and ``inv_sqrt1p`` are (1+t)**(1/2) and
    (1+t)**(-1/2).
    """
    if kind not in _TAYLOR:
        raise ValueError(f"unknown kind {kind!r}; expected one of {SERIES_KINDS}")
    f = _TAYLOR[kind]
    return PowerSeries((f(k) for k in range(order + 1)), order)


def series_compose_elementary(kind: str, s: PowerSeries) -> PowerSeries:
    if not s.coeffs[0].is_zero():
        raise ValueError(f"{kind}(s) needs s with zero constant term")
    return taylor_series(kind, s.order).compose(s)
