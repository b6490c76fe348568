"""Command-line front end.

    sl2spectrum psi --energy 0 --n 4
    sl2spectrum bootstrap --order 6 --check-paper
    sl2spectrum fit --energy 1 --n-min 1000 --n-max 10000 --order 6
    sl2spectrum scan --e-min -2 --e-max 2 --steps 5 --jobs 4
    sl2spectrum kernel --e1 1 --e2 1.5 --n 1000 10000 100000
    sl2spectrum kernel --e1 0 --slope --n 1000 10000 100000
    sl2spectrum verify --quick

Exit codes: 0 ok, 1 verification or runtime failure, 2 usage error.
Without ``--output`` results go to stdout, or to ``$SL2SPECTRUM_OUTDIR``
under a default file name when that variable is set.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import asymptotics, bootstrap, orthogonality, recursion, verification

OUTDIR_ENV = "SL2SPECTRUM_OUTDIR"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    subcommand: str
    fmt: str = "csv"
    output: str | None = None
    energy: float | None = None
    n: list[int] = field(default_factory=list)
    order: int = asymptotics.DEFAULT_ORDER
    n_min: int = asymptotics.DEFAULT_WINDOW[0]
    n_max: int = asymptotics.DEFAULT_WINDOW[1]
    e_min: float | None = None
    e_max: float | None = None
    steps: int = 0
    e1: float | None = None
    e2: float | None = None
    slope: bool = False
    model: bool = True
    check_paper: bool = False
    quick: bool = False
    jobs: int = 1

    def validate(self) -> None:
        """Raise ValueError with a usage message for invalid combinations."""
        for name in ("energy", "e_min", "e_max", "e1", "e2"):
            v = getattr(self, name)
            if v is not None and not math.isfinite(v):
                raise ValueError(f"--{name.replace('_', '-')} must be finite")
        sc = self.subcommand
        if sc == "psi":
            if self.energy is None:
                raise ValueError("psi requires --energy")
            if len(self.n) != 1 or self.n[0] < 0:
                raise ValueError("psi requires a single --n >= 0")
        if sc in ("bootstrap", "fit", "scan") and self.order < 1:
            raise ValueError("--order must be >= 1")
        if sc in ("fit", "scan", "kernel"):
            if self.n_min < 2 or self.n_max < self.n_min:
                raise ValueError("need 2 <= --n-min <= --n-max")
        if sc == "fit" and self.energy is None:
            raise ValueError("fit requires --energy")
        if sc == "scan":
            if self.e_min is None or self.e_max is None or self.e_min > self.e_max:
                raise ValueError("scan requires --e-min <= --e-max")
            if self.steps < 1:
                raise ValueError("--steps must be >= 1")
        if sc == "kernel":
            if self.e1 is None:
                raise ValueError("kernel requires --e1")
            if not self.n or any(k < 1 for k in self.n):
                raise ValueError("kernel requires --n values >= 1")
            if self.slope:
                if self.e2 is not None and self.e2 != self.e1:
                    raise ValueError("--slope is the diagonal E = E'; drop --e2")
                if len(self.n) < 2 or any(b <= a for a, b in zip(self.n, self.n[1:])):
                    raise ValueError("--slope needs an increasing list of at least two --n values")
                if self.n[-1] < 10 * self.n[0]:
                    raise ValueError("--slope needs --n values spanning at least one decade")
            else:
                if self.e2 is None:
                    raise ValueError("kernel requires --e2 (or --slope)")
                if self.e2 == self.e1:
                    raise ValueError("E1 == E2 is the diagonal; use --slope mode")
        if self.jobs < 1:
            raise ValueError("--jobs must be >= 1")


def _num(v) -> str:
    if isinstance(v, (float, np.floating)):
        return repr(float(v) + 0.0)  # + 0.0 turns -0.0 into 0.0
    return str(v)


def render_table(header: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "json":
        out = [{h: (float(v) + 0.0 if isinstance(v, (float, np.floating)) else v) for h, v in zip(header, r)} for r in rows]
        return json.dumps(out, indent=1, allow_nan=True) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_num(v) for v in r])
    return buf.getvalue()


def write_atomic(path: Path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit(cfg: RunConfig, text: str, default_name: str) -> None:
    if cfg.output:
        write_atomic(Path(cfg.output), text)
    elif os.environ.get(OUTDIR_ENV):
        write_atomic(Path(os.environ[OUTDIR_ENV]) / default_name, text)
    else:
        sys.stdout.write(text)


def cmd_psi(cfg: RunConfig) -> int:
    seq = recursion.psi_sequence(cfg.energy, cfg.n[0])
    if cfg.fmt == "json":
        doc = {"energy": seq.energy, "method": seq.method_tag, "psi": [float(v) + 0.0 for v in seq.values]}
        text = json.dumps(doc, indent=1) + "\n"
    else:
        text = render_table(["n", "psi"], [[k, float(v)] for k, v in enumerate(seq.values)], "csv")
    emit(cfg, text, f"psi.{cfg.fmt}")
    return EXIT_OK


def cmd_bootstrap(cfg: RunConfig) -> int:
    t = bootstrap.derive_corrections(cfg.order)
    emit(cfg, json.dumps(t.to_json(), indent=1) + "\n", "corrections.json")
    if not cfg.check_paper:
        return EXIT_OK
    status = EXIT_OK
    # compare against the printed tables; orders beyond 6 have no printed reference
    full = t if t.order >= 6 else bootstrap.derive_corrections(6)
    for name, ours, ref, ok in bootstrap.compare_with_printed(full):
        print(f"{'PASS' if ok else 'FAIL'} {name}", file=sys.stderr)
        if not ok:
            print(f"  derived: {ours!r}\n  printed: {ref!r}", file=sys.stderr)
            status = EXIT_FAIL
    return status


def cmd_fit(cfg: RunConfig) -> int:
    t = bootstrap.derive_corrections(cfg.order)
    f = asymptotics.extract_constants(cfg.energy, cfg.n_min, cfg.n_max, t)
    text = render_table(
        ["E", "A", "phi", "residual", "n_min", "n_max", "J"],
        [[f.energy, f.A_est, f.phi_est, f.residual, cfg.n_min, cfg.n_max, cfg.order]],
        cfg.fmt,
    )
    emit(cfg, text, f"fit.{cfg.fmt}")
    return EXIT_OK


def energy_grid(e_min: float, e_max: float, steps: int) -> list[float]:
    if steps == 1:
        return [float(e_min)]
    grid = [float(v) for v in np.linspace(e_min, e_max, steps)]
    # mirror so that symmetric ranges give exactly symmetric grids
    if e_min == -e_max:
        half = steps // 2
        grid[steps - half :] = [-v for v in reversed(grid[:half])]
        if steps % 2:
            grid[half] = 0.0
    return grid


def cmd_scan(cfg: RunConfig) -> int:
    t = bootstrap.derive_corrections(cfg.order)
    grid = energy_grid(cfg.e_min, cfg.e_max, cfg.steps)
    rows = asymptotics.spectral_scan(grid, (cfg.n_min, cfg.n_max), t, jobs=cfg.jobs)
    header = ["E", "A", "phi", "residual", "n_min", "n_max", "J"]
    body = [[r.E, r.A, r.phi, r.residual, r.n_min, r.n_max, r.J] for r in rows]
    for r in rows:
        if r.error:
            print(f"scan point E={r.E!r} failed: {r.error}", file=sys.stderr)
    emit(cfg, render_table(header, body, cfg.fmt), f"scan.{cfg.fmt}")
    return EXIT_OK


def cmd_kernel(cfg: RunConfig) -> int:
    if cfg.slope:
        s = orthogonality.delta_norm_slope(cfg.e1, cfg.n)
        header = ["E", "N", "diagonal_sum", "slope", "intercept", "A_from_slope"]
        body = [[cfg.e1, int(N), float(S), s.slope, s.intercept, s.A_from_slope] for N, S in zip(s.N, s.sums)]
        emit(cfg, render_table(header, body, cfg.fmt), f"slope.{cfg.fmt}")
        return EXIT_OK
    fit_e = fit_ep = None
    if cfg.model:
        t = bootstrap.derive_corrections(cfg.order)
        fit_e = asymptotics.extract_constants(cfg.e1, cfg.n_min, cfg.n_max, t)
        fit_ep = asymptotics.extract_constants(cfg.e2, cfg.n_min, cfg.n_max, t)
    body = []
    for N in cfg.n:
        k = orthogonality.kernel_sample(cfg.e1, cfg.e2, N, fit_e, fit_ep)
        body.append([k.E, k.E_prime, k.N, k.direct_sum, k.cd_value, k.sinc_model_value])
    header = ["E", "E_prime", "N", "direct", "cd", "sinc_model"]
    emit(cfg, render_table(header, body, cfg.fmt), f"kernel.{cfg.fmt}")
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    results = verification.run_suite(quick=cfg.quick)
    report = verification.format_results(results) + "\n"
    if cfg.output:
        write_atomic(Path(cfg.output), report)
    sys.stdout.write(report)
    return EXIT_OK if verification.all_passed(results) else EXIT_FAIL


COMMANDS = {
    "psi": cmd_psi,
    "bootstrap": cmd_bootstrap,
    "fit": cmd_fit,
    "scan": cmd_scan,
    "kernel": cmd_kernel,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sl2spectrum", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, formats=("csv", "json")):
        p.add_argument("--output", "-o", help="output file (written atomically)")
        p.add_argument("--format", dest="fmt", choices=formats, default=formats[0])

    def window(p):
        p.add_argument("--n-min", type=int, default=asymptotics.DEFAULT_WINDOW[0])
        p.add_argument("--n-max", type=int, default=asymptotics.DEFAULT_WINDOW[1])
        p.add_argument("--order", type=int, default=asymptotics.DEFAULT_ORDER, help="correction order J")

    p = sub.add_parser("psi", help="psi_n(E) for n = 0..N")
    p.add_argument("--energy", type=float)
    p.add_argument("--n", type=int, nargs=1, required=True)
    common(p)

    p = sub.add_parser("bootstrap", help="exact correction tables as JSON")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--check-paper", action="store_true", help="compare orders 1..6 with the published tables")
    common(p, formats=("json",))

    p = sub.add_parser("fit", help="A(E), phi(E) at one energy")
    p.add_argument("--energy", type=float)
    window(p)
    common(p)

    p = sub.add_parser("scan", help="A(E), phi(E) over an energy grid")
    p.add_argument("--e-min", type=float)
    p.add_argument("--e-max", type=float)
    p.add_argument("--steps", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    window(p)
    common(p)

    p = sub.add_parser("kernel", help="truncated inner products, CD values and sinc model")
    p.add_argument("--e1", type=float)
    p.add_argument("--e2", type=float)
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--slope", action="store_true", help="diagonal mode: fit sum psi_n^2 against log N")
    p.add_argument("--no-model", dest="model", action="store_false", help="skip the sinc model column")
    window(p)
    common(p)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--quick", action="store_true", help="reduced sizes, well under 10 s")
    p.add_argument("--output", "-o")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    fields = RunConfig.__dataclass_fields__
    return RunConfig(**{k: v for k, v in vars(ns).items() if k in fields})


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = config_from_args(ns)
    try:
        cfg.validate()
    except ValueError as exc:
        parser.error(str(exc))  # exits with status 2
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
