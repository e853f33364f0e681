"""Command-line entry point.

    monodyn ppd --n 2 --p 71 --format pbm --out ppd71.pbm
    monodyn tpd --n 12 --primes 100 --out tpd12.csv
    monodyn graph --n 2 --c 3 --p 7
    monodyn verify --suite all --max-p 200 --n-min 2 --n-max 13

Exit status: 0 on success, 1 when verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from .dynamics import SystemParams
from .ppd import build_ppd
from .render import export_graph_dot, export_tpd_csv, render_ppd_ascii, render_ppd_pbm
from .tpd import tpd_sweep
from .verify import SUITES, verify_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _write(data: str | bytes, out: str | None):
    if isinstance(data, str):
        data = data.encode("ascii")
    if out is None or out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        with open(out, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise OSError(f"cannot write {out}: {exc.strerror}") from exc


def _set_threads(k: int | None):
    if k is None:
        return
    import numba

    numba.set_num_threads(max(1, min(k, numba.config.NUMBA_NUM_THREADS)))


def cmd_ppd(args) -> int:
    grid = build_ppd(args.n, args.p, method="naive" if args.naive else "fast")
    if args.format == "pbm":
        _write(render_ppd_pbm(grid, invert=args.invert), args.out)
    else:
        if args.invert:
            raise ValueError("--invert only applies to pbm output")
        _write(render_ppd_ascii(grid), args.out)
    return EXIT_OK


def cmd_tpd(args) -> int:
    progress = None
    if args.progress:
        def progress(k, m):
            print(f"\r{k}/{m} primes", end="", file=sys.stderr, flush=True)

    records = tpd_sweep(args.n, args.primes, progress=progress)
    if args.progress:
        print(file=sys.stderr)
    _write(export_tpd_csv(records), args.out)
    return EXIT_OK


def cmd_graph(args) -> int:
    _write(export_graph_dot(SystemParams(args.n, args.c, args.p)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n_min > args.n_max:
        raise ValueError("--n-min exceeds --n-max")
    rep = verify_suite(args.suite, args.max_p, range(args.n_min, args.n_max + 1))
    text = rep.format() if args.verbose else "".join(
        line + "\n" for line in rep.format().splitlines() if not line.startswith(SUITES)
    )
    _write(text, args.out)
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monodyn", description="Periodic points of x^n + c over prime fields."
    )
    parser.add_argument("--threads", type=int, help="worker threads for compiled kernels")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ppd", help="render a periodic point diagram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--format", choices=("pbm", "ascii"), default="pbm")
    p.add_argument("--invert", action="store_true", help="draw marked cells as 0 (white)")
    p.add_argument("--naive", action="store_true", help="use the quadratic reference detector")
    p.add_argument("--out")
    p.set_defaults(func=cmd_ppd)

    p = sub.add_parser("tpd", help="total periodic counts over the first m primes, as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--primes", type=int, required=True, metavar="M")
    p.add_argument("--progress", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_tpd)

    p = sub.add_parser("graph", help="functional graph of one map, as DOT")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run the theorem checks over a range of primes")
    p.add_argument("--suite", choices=SUITES + ("all",), required=True)
    p.add_argument("--max-p", type=int, required=True)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=13)
    p.add_argument("-v", "--verbose", action="store_true", help="list every (n, p) checked")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _set_threads(args.threads)
        return args.func(args)
    except (ValueError, TypeError) as exc:
        print(f"monodyn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"monodyn: error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
