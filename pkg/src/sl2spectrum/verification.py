"""Built-in invariant suite behind ``sl2spectrum verify``."""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import asymptotics, bootstrap, orthogonality, recursion


@dataclass(frozen=True)
class Tolerances:
    recursion_rel: float = 1e-10
    cd_rel: float = 1e-9
    slope_rel: float = 1e-2
    symmetry_abs: float = 1e-10


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


def check_recursion_vs_product(rng, samples: int, N_max: int, tol: Tolerances) -> tuple[bool, str]:
    worst = 0.0
    for _ in range(samples):
        E = rng.uniform(-10, 10)
        N = int(rng.integers(1, N_max + 1))
        psi = recursion.psi_sequence(E, N).values
        prod = recursion.transfer_product(E, N)
        scale = max(abs(psi[N - 1]), abs(psi[N]))
        err = max(abs(prod[0] - psi[N - 1]), abs(prod[1] - psi[N])) / scale
        worst = max(worst, err)
    return worst <= tol.recursion_rel, f"max rel err {worst:.2e} over {samples} samples"


def check_parity(rng, samples: int, N: int) -> tuple[bool, str]:
    sign = (-1.0) ** np.arange(N + 1)
    for _ in range(samples):
        E = rng.uniform(-10, 10)
        a = recursion.psi_sequence(E, N).values
        b = recursion.psi_sequence(-E, N).values
        if not np.array_equal(b, sign * a):
            return False, f"parity broken at E={E!r}"
    return True, f"bit-exact over {samples} energies, N={N}"


def check_cd_identity(rng, samples: int, N_max: int, tol: Tolerances) -> tuple[bool, str]:
    worst = 0.0
    for _ in range(samples):
        E, Ep = rng.uniform(-5, 5, size=2)
        if E == Ep:
            continue
        N = int(rng.integers(1, N_max + 1))
        direct = orthogonality.truncated_inner(E, Ep, N - 1)
        cd = orthogonality.cd_rhs(E, Ep, N)
        worst = max(worst, abs(direct - cd) / (1 + abs(direct)))
    return worst <= tol.cd_rel, f"max scaled err {worst:.2e} over {samples} triples"


def check_bootstrap_vs_paper() -> tuple[bool, str]:
    t = bootstrap.derive_corrections(6)
    rows = bootstrap.compare_with_printed(t)
    bad = [name for name, _, _, ok in rows if not ok]
    if bad:
        return False, "mismatch: " + ", ".join(bad)
    return True, f"{len(rows)} polynomials equal"


def check_bootstrap_residual(J: int) -> tuple[bool, str]:
    t = bootstrap.derive_corrections(J)
    cos_r, sin_r = bootstrap.residual_check(t)
    ok = cos_r.is_zero() and sin_r.is_zero()
    return ok, f"residuals vanish through x^{J + 1}" if ok else "nonzero residual"


def check_slope_vs_fit(energies, N_list, tol: Tolerances) -> tuple[bool, str]:
    t = bootstrap.derive_corrections(asymptotics.DEFAULT_ORDER)
    worst = 0.0
    for E in energies:
        s = orthogonality.delta_norm_slope(E, N_list)
        f = asymptotics.extract_constants(E, t=t)
        worst = max(worst, abs(s.A_from_slope / f.A_est - 1))
    return worst <= tol.slope_rel, f"max rel diff {worst:.2e} at E in {list(energies)}"


def check_amplitude_symmetry(energies, tol: Tolerances) -> tuple[bool, str]:
    t = bootstrap.derive_corrections(asymptotics.DEFAULT_ORDER)
    worst = 0.0
    for E in energies:
        a = asymptotics.extract_constants(E, t=t).A_est
        b = asymptotics.extract_constants(-E, t=t).A_est
        worst = max(worst, abs(a - b))
    return worst <= tol.symmetry_abs, f"max |A(E)-A(-E)| {worst:.2e}"


def run_suite(quick: bool = False, seed: int = 0, tol: Tolerances = Tolerances()) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    if quick:
        plan: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
            ("recursion_vs_product", lambda: check_recursion_vs_product(rng, 20, 10_000, tol)),
            ("parity", lambda: check_parity(rng, 5, 2_000)),
            ("cd_identity", lambda: check_cd_identity(rng, 100, 1_000, tol)),
            ("bootstrap_vs_paper", check_bootstrap_vs_paper),
            ("bootstrap_residual", lambda: check_bootstrap_residual(6)),
            ("slope_vs_fit", lambda: check_slope_vs_fit([0.0], [10**3, 10**4, 10**5], tol)),
            ("amplitude_symmetry", lambda: check_amplitude_symmetry([1.0], tol)),
        ]
    else:
        plan = [
            ("recursion_vs_product", lambda: check_recursion_vs_product(rng, 100, 100_000, tol)),
            ("parity", lambda: check_parity(rng, 20, 10_000)),
            ("cd_identity", lambda: check_cd_identity(rng, 1_000, 10_000, tol)),
            ("bootstrap_vs_paper", check_bootstrap_vs_paper),
            ("bootstrap_residual", lambda: check_bootstrap_residual(8)),
            ("slope_vs_fit", lambda: check_slope_vs_fit([0.0, 1.0, 2.0], [10**3, 10**4, 10**5, 10**6], tol)),
            ("amplitude_symmetry", lambda: check_amplitude_symmetry([0.5, 1.0, 2.0, 3.0], tol)),
        ]
    results = []
    for name, fn in plan:
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(ok), detail, time.perf_counter() - t0))
    return results


def format_results(results: list[CheckResult]) -> str:
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.name:<22} {r.detail}  ({r.seconds:.2f}s)" for r in results
    ]
    n_fail = sum(not r.passed for r in results)
    lines.append(f"{len(results) - n_fail}/{len(results)} checks passed")
    if n_fail:
        lines.append("failed: " + ", ".join(r.name for r in results if not r.passed))
    return "\n".join(lines)


def all_passed(results) -> bool:
    return bool(results) and all(r.passed for r in results)
