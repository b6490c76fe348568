"""Eigenstates of the Jacobi operator (n+1) psi_{n+1} + n psi_{n-1} = E psi_n.

Floating-point and exact recursion, exact 1/n correction tables, numerical
amplitude/phase constants A(E), phi(E) and finite-N orthogonality checks.
"""
from .asymptotics import AsymptoticFit, extract_constants, local_amplitude_phase, phase_unwrap, spectral_scan
from .bootstrap import CorrectionTables, correction_eval, derive_corrections, residual_check
from .exact import Polynomial, PowerSeries, evaluate_polynomial, psi_polynomial, series_compose_elementary
from .orthogonality import cd_rhs, delta_norm_slope, sinc_model, truncated_inner
from .recursion import diagonalize_step, psi_sequence, transfer_product, transfer_step

__all__ = [
    "AsymptoticFit",
    "CorrectionTables",
    "Polynomial",
    "PowerSeries",
    "cd_rhs",
    "correction_eval",
    "delta_norm_slope",
    "derive_corrections",
    "diagonalize_step",
    "evaluate_polynomial",
    "extract_constants",
    "local_amplitude_phase",
    "phase_unwrap",
    "psi_polynomial",
    "psi_sequence",
    "residual_check",
    "series_compose_elementary",
    "sinc_model",
    "spectral_scan",
    "transfer_product",
    "transfer_step",
    "truncated_inner",
]
