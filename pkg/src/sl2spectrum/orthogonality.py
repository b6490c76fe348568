"""Finite-N signatures of the continuous-spectrum normalization.

Off the diagonal the truncated inner product obeys the Christoffel-Darboux
identity

    sum_{n<N} psi_n(E) psi_n(E') = N / (E - E') * (psi_N(E) psi_{N-1}(E') - psi_N(E') psi_{N-1}(E))

and tends to a sinc kernel in log N; on the diagonal it grows like
(A(E)^2 / 2) log N.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .asymptotics import AsymptoticFit
from .recursion import check_energy, psi_values


@dataclass(frozen=True)
class KernelSample:
    E: float
    E_prime: float
    N: int
    direct_sum: float
    cd_value: float
    sinc_model_value: float = math.nan


def truncated_inner(E: float, E_prime: float, N: int) -> float:
    """sum_{n=0}^{N} psi_n(E) psi_n(E'), summed directly."""
    if N < 0:
        raise ValueError("N must be >= 0")
    a = psi_values(check_energy(E), N)
    b = psi_values(check_energy(E_prime), N)
    return math.fsum(a * b)


def cd_rhs(E: float, E_prime: float, N: int) -> float:
    """Christoffel-Darboux closed form; equals truncated_inner(E, E', N - 1)."""
    E, E_prime = check_energy(E), check_energy(E_prime)
    if N < 1:
        raise ValueError("N must be >= 1")
    if E == E_prime:
        raise ValueError("E == E' has no CD closed form here; use delta_norm_slope")
    a = psi_values(E, N)
    b = psi_values(E_prime, N)
    return float(N / (E - E_prime) * (a[N] * b[N - 1] - b[N] * a[N - 1]))


def sinc_model(fit_E: AsymptoticFit, fit_Ep: AsymptoticFit, N: int) -> float:
    """A(E) A(E') sin((E'-E)/2 log N + phi(E') - phi(E)) / (E' - E)."""
    dE = fit_Ep.energy - fit_E.energy
    if dE == 0:
        raise ValueError("sinc model is singular at E == E'")
    arg = 0.5 * dE * math.log(N) + fit_Ep.phi_est - fit_E.phi_est
    return fit_E.A_est * fit_Ep.A_est * math.sin(arg) / dE


def kernel_sample(E: float, E_prime: float, N: int, fit_E=None, fit_Ep=None) -> KernelSample:
    """Direct sum through N-1 alongside the CD value at N (same truncation)."""
    direct = truncated_inner(E, E_prime, N - 1)
    cd = cd_rhs(E, E_prime, N)
    model = sinc_model(fit_E, fit_Ep, N) if fit_E is not None and fit_Ep is not None else math.nan
    return KernelSample(float(E), float(E_prime), int(N), direct, cd, model)


def inner_products(E: float, E_prime: float, N_max: int) -> np.ndarray:
    """Running sums S[N] = sum_{n<=N} psi_n(E) psi_n(E') for N = 0..N_max."""
    a = psi_values(check_energy(E), N_max)
    b = a if E_prime == E else psi_values(check_energy(E_prime), N_max)
    return np.cumsum(a * b)


@dataclass(frozen=True)
class SlopeFit:
    slope: float
    intercept: float
    A_from_slope: float
    N: np.ndarray
    sums: np.ndarray
    max_residual: float  # max |fit - data| over the points


def delta_norm_slope(E: float, N_list) -> SlopeFit:
    """Least-squares fit of S(N) = sum_{n<=N} psi_n(E)^2 against log N.

    The slope estimates A(E)^2 / 2; ``A_from_slope = sqrt(2 slope)``.
    """
    N = np.asarray([int(k) for k in N_list])
    if len(N) < 2:
        raise ValueError("N_list needs at least two values")
    if np.any(np.diff(N) <= 0):
        raise ValueError("N_list must be strictly increasing")
    if N[0] < 1:
        raise ValueError("N values must be >= 1")
    if N[-1] < 10 * N[0]:
        raise ValueError("N_list must span at least one decade")
    S = inner_products(E, E, int(N[-1]))[N]
    logN = np.log(N)
    slope, intercept = np.polyfit(logN, S, 1)
    fitted = slope * logN + intercept
    return SlopeFit(
        slope=float(slope),
        intercept=float(intercept),
        A_from_slope=math.sqrt(2.0 * slope) if slope > 0 else math.nan,
        N=N,
        sums=S,
        max_residual=float(np.max(np.abs(fitted - S))),
    )


def upcrossings_log(E: float, E_prime: float, N_lo: int, N_hi: int) -> np.ndarray:
    """log N at which the running inner product crosses zero going upward.

    Sampled at every N in [N_lo, N_hi]; crossing points are interpolated
    linearly in log N. Only even N are used so the (-1)^N ripple of the
    partial sums cannot fake a crossing.
    """
    S = inner_products(E, E_prime, N_hi)
    N = np.arange(N_lo + (N_lo % 2), N_hi + 1, 2)
    s = S[N]
    logN = np.log(N)
    idx = np.nonzero((s[:-1] < 0) & (s[1:] >= 0))[0]
    t = -s[idx] / (s[idx + 1] - s[idx])
    return logN[idx] + t * (logN[idx + 1] - logN[idx])
