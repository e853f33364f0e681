"""Print the gcd branches of a TPD sweep.

    python scripts/branch_report.py --n 12 --primes 300
"""

import argparse

from monodyn.tpd import branch_partition, possible_branch_values, tpd_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--primes", type=int, default=300)
    args = ap.parse_args()

    recs = [r for r in tpd_sweep(args.n, args.primes) if r.p > 2]
    bp = branch_partition(recs, n=args.n)
    print(f"n={args.n}, odd primes among the first {args.primes}")
    print(f"possible gcd values: {possible_branch_values(args.n)}")
    print(f"occurring branches:  {bp.keys}")
    print(f"{'d':>4} {'size':>5} {'min per/p^2':>12} {'max per/p^2':>12}")
    for s in bp.summary():
        print(f"{s.d:>4} {s.size:>5} {s.min_ratio:>12.5f} {s.max_ratio:>12.5f}")
    over = [r.p for r in recs if r.exceeds_printed_bound]
    print(f"primes above the printed upper bound p(p-1)/d: {over}")


if __name__ == "__main__":
    main()
