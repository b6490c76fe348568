"""Amplitude/phase extraction from computed psi_n.

For large n, psi_n = A_n / sqrt(n) * cos(Phi_n) with
Phi_n = (E/2) log n - pi n / 2 + phi_n. Consecutive pairs (psi_n, psi_{n+1})
fix (A_n, Phi_n) once the phase increment alpha_n and the amplitude ratio
A_{n+1}/A_n are taken from the correction tables. Stripping the corrections
leaves the constants A(E) and phi(E).
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bootstrap import CorrectionTables, correction_eval
from .recursion import check_energy, psi_values

DEFAULT_WINDOW = (1_000, 10_000)
DEFAULT_ORDER = 6


class DegenerateSampleError(ValueError):
    pass


@dataclass(frozen=True)
class AsymptoticFit:
    energy: float
    n_window: tuple[int, int]
    A_seq: np.ndarray
    phi_seq: np.ndarray
    A_est: float
    phi_est: float
    residual: float
    order: int = 0
    # max deviation of the stripped phase from phi_est
    phi_residual: float = field(default=0.0)

    @property
    def n(self) -> np.ndarray:
        return np.arange(self.n_window[0], self.n_window[0] + len(self.A_seq))

    @property
    def relative_spread(self) -> float:
        return self.residual / self.A_est


def local_amplitude_phase(u_n, u_np1, alpha_n):
    """Solve u_n = A cos(Phi), u_np1 = A sin(Phi + alpha) for A > 0, Phi in (-pi, pi].

    Accepts scalars or arrays. ``u_np1`` should already carry the amplitude
    ratio correction A_n / A_{n+1} if one is wanted.
    """
    u_n = np.asarray(u_n, dtype=float)
    u_np1 = np.asarray(u_np1, dtype=float)
    alpha_n = np.asarray(alpha_n, dtype=float)
    if np.any((u_n == 0) & (u_np1 == 0)):
        raise DegenerateSampleError("both samples vanish; phase undetermined")
    c = u_n
    s = (u_np1 - u_n * np.sin(alpha_n)) / np.cos(alpha_n)
    A = np.hypot(c, s)
    Phi = np.arctan2(s, c)
    if A.ndim == 0:
        return float(A), float(Phi)
    return A, Phi


def _wrap(theta):
    """Map to (-pi, pi]."""
    w = np.mod(theta + np.pi, 2 * np.pi) - np.pi
    return np.where(w == -np.pi, np.pi, w)


def phase_unwrap(n, Phi, E: float) -> np.ndarray:
    """phi_n = Phi_n - (E/2) log n + pi n / 2, made continuous in n.

    ``n`` must be consecutive integers. The first point is mapped into
    (-pi, pi]; later points follow by minimal 2 pi steps.
    """
    n = np.asarray(n)
    Phi = np.asarray(Phi, dtype=float)
    if len(n) < 2:
        raise ValueError("phase unwrapping needs at least two points")
    if np.any(np.diff(n) != 1):
        raise ValueError("n must be consecutive")
    # pi n / 2 reduced mod 2 pi before it meets floating point
    raw = Phi - 0.5 * E * np.log(n) + (n % 4) * (np.pi / 2)
    phi = np.unwrap(raw)
    return phi + (_wrap(phi[0]) - phi[0])


def amplitude_phase_sequences(E: float, n_min: int, n_max: int, t: CorrectionTables | None = None):
    """(n, A_n, phi_n) over n_min..n_max using pairs (psi_n, psi_{n+1})."""
    E = check_energy(E)
    if n_min < 2 or n_max < n_min:
        raise ValueError(f"bad window [{n_min}, {n_max}]")
    psi = psi_values(E, n_max + 1)
    n = np.arange(n_min, n_max + 1)
    u_n = np.sqrt(n) * psi[n_min : n_max + 1]
    u_np1 = np.sqrt(n + 1.0) * psi[n_min + 1 : n_max + 2]
    alpha = 0.5 * E * np.log1p(1.0 / n)
    if t is not None and t.order > 0:
        d0, e0 = correction_eval(t, n, E)
        d1, e1 = correction_eval(t, n + 1, E)
        alpha = alpha + (e1 - e0)
        u_np1 = u_np1 * (1.0 + d0) / (1.0 + d1)
    A, Phi = local_amplitude_phase(u_n, u_np1, alpha)
    return n, A, phase_unwrap(n, Phi, E)


def extract_constants(
    E: float,
    n_min: int = DEFAULT_WINDOW[0],
    n_max: int = DEFAULT_WINDOW[1],
    t: CorrectionTables | None = None,
) -> AsymptoticFit:
    """Estimate A(E) and phi(E) as window means of the correction-stripped sequences."""
    if n_max < n_min:
        raise ValueError("empty window")
    n, A, phi = amplitude_phase_sequences(E, n_min, n_max, t)
    if t is not None and t.order > 0:
        delta, eps = correction_eval(t, n, E)
    else:
        delta = eps = np.zeros(len(n))
    A_stripped = A / (1.0 + delta)
    phi_stripped = phi - eps
    A_est = float(np.mean(A_stripped))
    phi_mean = float(np.mean(phi_stripped))
    return AsymptoticFit(
        energy=float(E),
        n_window=(int(n_min), int(n_max)),
        A_seq=A,
        phi_seq=phi,
        A_est=A_est,
        phi_est=float(_wrap(phi_mean)),
        residual=float(np.max(np.abs(A_stripped - A_est))),
        order=0 if t is None else t.order,
        phi_residual=float(np.max(np.abs(phi_stripped - phi_mean))),
    )


@dataclass(frozen=True)
class ScanRow:
    E: float
    A: float
    phi: float
    residual: float
    n_min: int
    n_max: int
    J: int
    error: str = ""


def _scan_point(args) -> ScanRow:
    E, window, t = args
    J = 0 if t is None else t.order
    try:
        fit = extract_constants(E, window[0], window[1], t)
    except (ValueError, ArithmeticError, FloatingPointError) as exc:
        nan = math.nan
        return ScanRow(float(E), nan, nan, nan, window[0], window[1], J, str(exc))
    return ScanRow(fit.energy, fit.A_est, fit.phi_est, fit.residual, window[0], window[1], J)


def spectral_scan(E_grid, window=DEFAULT_WINDOW, t: CorrectionTables | None = None, jobs: int = 1) -> list[ScanRow]:
    """extract_constants over a grid; rows come back in grid order, failures in-row."""
    tasks = [(E, tuple(window), t) for E in E_grid]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_scan_point, tasks))
    return [_scan_point(task) for task in tasks]
