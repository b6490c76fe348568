"""Print the exact correction polynomials delta_j(E), eps_j(E) to a chosen order.

    python scripts/bootstrap_tables.py --order 10
"""
import argparse
import time

from sl2spectrum import derive_corrections


def fmt(p):
    terms = [f"{c}*E^{k}" if k else f"{c}" for k, c in enumerate(p.coeffs) if c]
    return " + ".join(terms) or "0"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=8)
    args = ap.parse_args()
    t0 = time.perf_counter()
    t = derive_corrections(args.order)
    print(f"# derived to order {t.order} in {time.perf_counter() - t0:.2f}s")
    for j, (d, e) in enumerate(zip(t.delta, t.epsilon), start=1):
        print(f"delta_{j} = {fmt(d)}")
        print(f"eps_{j}   = {fmt(e)}")


if __name__ == "__main__":
    main()
