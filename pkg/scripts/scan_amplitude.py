"""Tabulate A(E) and phi(E) over an energy range and write CSV.

    python scripts/scan_amplitude.py --e-max 6 --steps 121 -o amplitude.csv
"""
import argparse
import csv
import sys

import numpy as np

from sl2spectrum import derive_corrections, spectral_scan


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--e-max", type=float, default=4.0)
    ap.add_argument("--steps", type=int, default=81)
    ap.add_argument("--order", type=int, default=6)
    ap.add_argument("--n-min", type=int, default=1000)
    ap.add_argument("--n-max", type=int, default=10000)
    ap.add_argument("--jobs", type=int, default=4)
    ap.add_argument("-o", "--output")
    args = ap.parse_args()

    t = derive_corrections(args.order)
    grid = np.linspace(-args.e_max, args.e_max, args.steps)
    rows = spectral_scan(grid, (args.n_min, args.n_max), t, jobs=args.jobs)

    out = open(args.output, "w", newline="") if args.output else sys.stdout
    w = csv.writer(out)
    w.writerow(["E", "A", "phi", "A_squared_times_pi", "residual"])
    for r in rows:
        w.writerow([repr(r.E), repr(r.A), repr(r.phi), repr(np.pi * r.A**2), repr(r.residual)])
    worst = max(abs(a.A - b.A) for a, b in zip(rows, reversed(rows)))
    print(f"max |A(E) - A(-E)| = {worst:.2e}", file=sys.stderr)


if __name__ == "__main__":
    main()
