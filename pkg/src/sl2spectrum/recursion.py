"""Floating-point eigenvector components psi_n(E) of the Jacobi operator

    (H psi)_n = (n+1) psi_{n+1} + n psi_{n-1},

computed by forward recursion and, independently, by 2x2 transfer-matrix
products.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

INF = math.inf  # sentinel index for the limiting transfer matrix


def check_energy(E: float) -> float:
    E = float(E)
    if not math.isfinite(E):
        raise ValueError(f"energy must be finite, got {E!r}")
    return E


@dataclass(frozen=True)
class WaveSequence:
    energy: float
    values: np.ndarray
    method_tag: Literal["recursion", "transfer_product"] = "recursion"

    def __post_init__(self):
        if self.values.ndim != 1 or len(self.values) == 0:
            raise ValueError("values must be a non-empty 1-d array")
        if self.values[0] != 1.0:
            raise ValueError("psi_0 must equal 1")
        self.values.setflags(write=False)

    @property
    def N(self) -> int:
        return len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]


def psi_values(E: float, N: int) -> np.ndarray:
    """psi_0..psi_N as a float64 array (no validation, hot path)."""
    out = np.empty(N + 1)
    out[0] = 1.0
    prev, cur = 0.0, 1.0
    for n in range(N):
        # parity psi_n(-E) = (-1)^n psi_n(E) holds bit-for-bit with this form
        prev, cur = cur, (E * cur - n * prev) / (n + 1)
        out[n + 1] = cur
    return out


def psi_sequence(E: float, N: int) -> WaveSequence:
    if N < 0:
        raise ValueError("N must be >= 0")
    E = check_energy(E)
    return WaveSequence(E, psi_values(E, N), "recursion")


@dataclass(frozen=True)
class TransferMatrix:
    entries: np.ndarray
    index_n: float

    @property
    def det(self) -> float:
        a = self.entries
        return a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]


def transfer_step(n: float, E: float) -> TransferMatrix:
    """L_n = [[0, -1 + 1/n], [1, E/n]]; ``n = math.inf`` gives the limit [[0, -1], [1, 0]]."""
    E = check_energy(E)
    if n != INF and (n < 1 or int(n) != n):
        raise ValueError(f"n must be a positive integer, got {n!r}")
    inv = 0.0 if n == INF else 1.0 / n
    return TransferMatrix(np.array([[0.0, -1.0 + inv], [1.0, E * inv]]), n)


def transfer_product(E: float, N: int) -> tuple[float, float]:
    """(0, 1) L_1 L_2 ... L_N, applied left to right; equals (psi_{N-1}, psi_N)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    E = check_energy(E)
    a, b = 0.0, 1.0
    for n in range(1, N + 1):
        # (a, b) @ [[0, -1+1/n], [1, E/n]]
        a, b = b, a * (-1.0 + 1.0 / n) + b * (E / n)
    return a, b


def transfer_sequence(E: float, N: int) -> WaveSequence:
    """psi_0..psi_N read off the running transfer product."""
    if N < 0:
        raise ValueError("N must be >= 0")
    E = check_energy(E)
    out = np.empty(N + 1)
    out[0] = 1.0
    a, b = 0.0, 1.0
    for n in range(1, N + 1):
        a, b = b, a * (-1.0 + 1.0 / n) + b * (E / n)
        out[n] = b
    return WaveSequence(E, out, "transfer_product")


class OutOfRegimeError(ValueError):
    """L_n has real eigenvalues (small n, large |E|)."""


@dataclass(frozen=True)
class EigenPair:
    lam: complex
    lam_conj: complex
    index_n: int


def diagonalize_step(n: int, E: float) -> EigenPair:
    """Complex-conjugate eigenvalues of L_n: E/(2n) +/- i sqrt(1 - 1/n - E^2/(4n^2))."""
    E = check_energy(E)
    if n < 2:
        raise ValueError("n must be >= 2 (L_1 is singular)")
    disc = 1.0 - 1.0 / n - E * E / (4.0 * n * n)
    if disc < 0:
        raise OutOfRegimeError(f"real eigenvalues at n={n}, E={E} (discriminant {disc:.3g} < 0)")
    lam = complex(E / (2.0 * n), math.sqrt(disc))
    return EigenPair(lam, lam.conjugate(), n)
