"""Batch verification of the desert-line, fixed-point, symmetry and bound laws."""

from __future__ import annotations

from dataclasses import dataclass, field

from .dynamics import SystemParams, is_bijective, periodic_points, periodic_points_naive
from .numtheory import gcd, sieve
from .ppd import (
    build_ppd,
    check_odd_symmetry,
    classify_line,
    desert_count,
    desert_offsets,
    diagonal_hits,
    empirical_desert_offsets,
    fixed_points_by_line,
    fixed_points_total,
    LineKind,
)
from .tpd import make_record

SUITES = ("desert", "fixed", "symmetry", "oracle", "bounds")


@dataclass
class Report:
    checks: int = 0
    passes: int = 0
    failures: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, what: str):
        self.checks += 1
        if cond:
            self.passes += 1
        else:
            self.failures.append(what)

    def warn(self, what: str):
        self.warnings.append(what)

    def note(self, line: str):
        self.lines.append(line)

    def format(self) -> str:
        out = list(self.lines)
        out += [f"FAIL {f}" for f in self.failures]
        out += [f"WARN {w}" for w in self.warnings]
        status = "PASS" if self.ok else "FAIL"
        out.append(
            f"{status}: {self.passes}/{self.checks} checks passed, "
            f"{len(self.failures)} failures, {len(self.warnings)} warnings"
        )
        return "\n".join(out) + "\n"


def _desert(n: int, p: int, rep: Report):
    grid = build_ppd(n, p)
    theory = desert_offsets(n, p)
    found = empirical_desert_offsets(grid)
    rep.check(found == theory, f"desert n={n} p={p}: grid {sorted(found)} != theory {sorted(theory)}")
    rep.check(
        len(found) == desert_count(n, p),
        f"desert n={n} p={p}: {len(found)} lines, expected {desert_count(n, p)}",
    )
    hits = diagonal_hits(grid)
    stray = [a for a in theory if hits[a]]
    rep.check(not stray, f"desert n={n} p={p}: marked cells on desert offsets {stray}")
    rep.note(f"desert n={n} p={p}: {len(found)} desert lines")


def _fixed(n: int, p: int, rep: Report):
    total = fixed_points_total(n, p)
    rep.check(total == p, f"fixed n={n} p={p}: {total} fixed points, expected {p}")
    d = gcd(n, p - 1)
    per_line = fixed_points_by_line(n, p)
    for a in range(p):
        cls = classify_line(a, n, p)
        got = int(per_line[a])
        want = {LineKind.ZERO: 1, LineKind.RESIDUE: d, LineKind.DESERT: 0}[cls.kind]
        rep.check(got == want, f"fixed n={n} p={p} a={a}: {got} fixed points, expected {want}")
    rep.note(f"fixed n={n} p={p}: {total} fixed points")


def _symmetry(n: int, p: int, rep: Report):
    if n % 2 == 0:
        return
    ok = check_odd_symmetry(n, p)
    rep.check(ok, f"symmetry n={n} p={p}: reduced diagram not symmetric")
    rep.note(f"symmetry n={n} p={p}: {'ok' if ok else 'broken'}")


def _oracle(n: int, p: int, rep: Report):
    bad = []
    for c in range(p):
        params = SystemParams(n, c, p)
        if periodic_points(params) != periodic_points_naive(params):
            bad.append(c)
    rep.check(not bad, f"oracle n={n} p={p}: fast detector differs at c={bad}")
    rep.note(f"oracle n={n} p={p}: {p} maps compared")


def _bounds(n: int, p: int, rep: Report):
    r = make_record(n, p)
    rep.check(
        r.within_bounds(),
        f"bounds n={n} p={p}: per={r.per} outside [{r.lower}, {r.upper_corrected}]",
    )
    if is_bijective(n, p):
        rep.check(r.per == p * p, f"bounds n={n} p={p}: bijective but per={r.per} != {p * p}")
    if r.exceeds_printed_bound:
        rep.warn(f"bounds n={n} p={p}: per={r.per} exceeds printed upper bound {r.upper_paper}")
    rep.note(f"bounds n={n} p={p}: {r.lower} <= {r.per} <= {r.upper_corrected}")


_RUNNERS = {
    "desert": _desert,
    "fixed": _fixed,
    "symmetry": _symmetry,
    "oracle": _oracle,
    "bounds": _bounds,
}


def verify_suite(suite: str, max_p: int, n_range=range(2, 14)) -> Report:
    """Run one suite (or ``"all"``) over every prime <= ``max_p`` and n in ``n_range``."""
    if suite != "all" and suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    if max_p < 2:
        raise ValueError("max_p must be >= 2")
    names = SUITES if suite == "all" else (suite,)
    rep = Report()
    primes = [int(q) for q in sieve(max_p)]
    for name in names:
        for n in n_range:
            for p in primes:
                _RUNNERS[name](n, p, rep)
    return rep
