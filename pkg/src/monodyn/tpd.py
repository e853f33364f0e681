"""Total periodic counts per prime and their sweeps over the first m primes."""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass

from . import _kernels
from .numtheory import check_exponent, check_prime, first_primes, gcd, power_map


@dataclass(frozen=True)
class TpdRecord:
    p: int
    n: int
    d: int
    per: int
    lower: int
    upper_paper: int
    upper_corrected: int

    @property
    def ratio(self) -> float:
        """``per / p**2``, the fraction of the diagram that is marked."""
        return self.per / (self.p * self.p)

    @property
    def exceeds_printed_bound(self) -> bool:
        return self.per > self.upper_paper

    def within_bounds(self) -> bool:
        return self.lower <= self.per <= self.upper_corrected


@dataclass(frozen=True)
class BranchSummary:
    d: int
    size: int
    min_per: int
    max_per: int
    min_ratio: float
    max_ratio: float


@dataclass
class BranchPartition:
    """TPD records grouped by ``d = gcd(n, p-1)``, keys in ascending order."""

    n: int
    branches: "OrderedDict[int, list[TpdRecord]]"

    @property
    def keys(self) -> list[int]:
        return list(self.branches)

    def __len__(self):
        return len(self.branches)

    def summary(self) -> list[BranchSummary]:
        out = []
        for d, recs in self.branches.items():
            pers = [r.per for r in recs]
            ratios = [r.ratio for r in recs]
            out.append(
                BranchSummary(d, len(recs), min(pers), max(pers), min(ratios), max(ratios))
            )
        return out

    def restrict(self, predicate) -> "BranchPartition":
        """Partition of the records satisfying ``predicate`` (empty branches dropped)."""
        records = [r for recs in self.branches.values() for r in recs if predicate(r)]
        records.sort(key=lambda r: r.p)
        return branch_partition(records, n=self.n)


def per_count(n: int, p: int) -> int:
    """Total number of marked cells in the diagram of ``x**n + c`` over F_p."""
    n, p = check_exponent(n), check_prime(p)
    return int(_kernels.column_counts(power_map(n, p)).sum())


def per_bounds(n: int, p: int) -> tuple[int, int, int]:
    """``(lower, upper_paper, upper_corrected)`` for the total count.

    ``upper_paper = p(p-1)/d`` is the printed estimate, which ignores the zero
    diagonal; ``upper_corrected = p((p-1)/d + 1)`` allots p cells to every
    non-desert diagonal including that one.
    """
    d = gcd(n, p - 1)
    return p, p * (p - 1) // d, p * ((p - 1) // d + 1)


def make_record(n: int, p: int) -> TpdRecord:
    lower, upper_paper, upper_corrected = per_bounds(n, p)
    return TpdRecord(
        p=p,
        n=n,
        d=gcd(n, p - 1),
        per=per_count(n, p),
        lower=lower,
        upper_paper=upper_paper,
        upper_corrected=upper_corrected,
    )


def tpd_sweep(n: int, m: int, progress=None) -> list[TpdRecord]:
    """One record per prime among the first ``m``, in prime order.

    ``progress`` is called as ``progress(k, m)`` after each prime if given.
    """
    n = check_exponent(n)
    records = []
    for k, p in enumerate(first_primes(m), start=1):
        records.append(make_record(n, p))
        if progress is not None:
            progress(k, m)
    return records


def branch_partition(records: list[TpdRecord], n: int | None = None) -> BranchPartition:
    if n is None:
        ns = {r.n for r in records}
        if len(ns) > 1:
            raise ValueError(f"records mix exponents {sorted(ns)}")
        n = ns.pop() if ns else 0
    groups: dict[int, list[TpdRecord]] = {}
    for r in records:
        groups.setdefault(r.d, []).append(r)
    return BranchPartition(n, OrderedDict(sorted(groups.items())))


def possible_branch_values(n: int) -> list[int]:
    """Values ``gcd(n, k)`` over even k, i.e. the gcds open to odd primes p = k + 1.

    Arithmetic possibility only; whether a prime realises each value is not checked.
    """
    n = check_exponent(n)
    return sorted({gcd(n, k) for k in range(2, 2 * n + 1, 2)})
