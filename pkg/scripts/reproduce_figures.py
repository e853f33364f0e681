"""Write diagram bitmaps, functional graphs and TPD tables to a directory.

    python scripts/reproduce_figures.py --outdir figures [--primes 1000]

Produces PBM diagrams for x^2+c mod 7, x^2+c mod 71 and x^5+c mod 71, DOT
graphs for the seven maps x^2+c mod 7, and TPD CSVs for n = 2 and n = 12.
Plotting the CSVs is left to an external tool.
"""

import argparse
import time
from pathlib import Path

from monodyn.dynamics import SystemParams
from monodyn.ppd import build_ppd
from monodyn.render import export_graph_dot, export_tpd_csv, render_ppd_pbm
from monodyn.tpd import tpd_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default="figures")
    ap.add_argument("--primes", type=int, default=300, help="TPD sweep length (1000 for the full run)")
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)

    for c in range(7):
        (out / f"graph_x2_c{c}_p7.dot").write_text(export_graph_dot(SystemParams(2, c, 7)))
    for n, p in [(2, 7), (2, 71), (5, 71)]:
        (out / f"ppd_x{n}_p{p}.pbm").write_bytes(render_ppd_pbm(build_ppd(n, p)))

    for n in (2, 12):
        t0 = time.perf_counter()
        recs = tpd_sweep(n, args.primes)
        (out / f"tpd_x{n}_{args.primes}.csv").write_text(export_tpd_csv(recs))
        print(f"n={n}: {args.primes} primes in {time.perf_counter() - t0:.1f} s")
    print(f"wrote {len(list(out.iterdir()))} files to {out}")


if __name__ == "__main__":
    main()
