"""Periodic Point Diagrams and their diagonal (desert) lines.

A grid cell ``(i, j)`` is marked when the point ``x = j`` is periodic under
the map with parameter ``c = i``. A diagonal line with offset ``a`` is the set
``{(i, (i + a) mod p)}``; it is a desert line when none of its cells is marked.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .dynamics import SystemParams, periodic_points_naive
from .numtheory import (
    ResidueClass,
    check_exponent,
    check_prime,
    classify_power_residue,
    gcd,
    power_map,
)

# Rows handed to the compiled kernel per call; bounds the unpacked working set.
_BLOCK_ROWS = 512


@dataclass(frozen=True, eq=False)
class PpdGrid:
    """Immutable p x p diagram, stored as one bit-packed row per parameter c."""

    n: int
    p: int
    packed: np.ndarray = field(repr=False)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.p, self.p)

    def column(self, c: int) -> np.ndarray:
        """Boolean mask over x for parameter ``c`` (one vertical slice of the plot)."""
        return np.unpackbits(self.packed[c], count=self.p).astype(bool)

    def cell(self, i: int, j: int) -> bool:
        return bool(self.packed[i, j >> 3] & (0x80 >> (j & 7)))

    @property
    def cells(self) -> np.ndarray:
        """Full boolean matrix indexed ``[c, x]``; materialised on every access."""
        return np.unpackbits(self.packed, axis=1, count=self.p).astype(bool)

    def count(self) -> int:
        return int(np.unpackbits(self.packed, axis=1, count=self.p).sum(dtype=np.int64))

    def __eq__(self, other):
        if not isinstance(other, PpdGrid):
            return NotImplemented
        return (self.n, self.p) == (other.n, other.p) and np.array_equal(
            self.packed, other.packed
        )

    @classmethod
    def from_cells(cls, n: int, p: int, cells: np.ndarray) -> "PpdGrid":
        cells = np.asarray(cells, dtype=bool)
        if cells.shape != (p, p):
            raise ValueError(f"expected a {p}x{p} matrix, got {cells.shape}")
        return cls(n, p, np.packbits(cells, axis=1))


class LineKind(enum.Enum):
    DESERT = "desert"
    RESIDUE = "residue"
    ZERO = "zero"


@dataclass(frozen=True)
class LineClass:
    kind: LineKind
    fixed_count: int

    @classmethod
    def desert(cls):
        return cls(LineKind.DESERT, 0)

    @classmethod
    def zero(cls):
        return cls(LineKind.ZERO, 1)

    @classmethod
    def residue(cls, fixed_count: int):
        return cls(LineKind.RESIDUE, fixed_count)


def build_ppd(n: int, p: int, method: str = "fast") -> PpdGrid:
    """Mark every periodic point of every map ``x**n + c`` with c in F_p.

    ``method="naive"`` runs the quadratic reference algorithm per column instead
    of the compiled graph walk; both give identical grids.
    """
    n, p = check_exponent(n), check_prime(p)
    if method == "naive":
        cells = np.stack([periodic_points_naive(SystemParams(n, c, p)).mask for c in range(p)])
        return PpdGrid.from_cells(n, p, cells)
    if method != "fast":
        raise ValueError(f"unknown method {method!r}")
    pw = power_map(n, p)
    packed = np.empty((p, (p + 7) // 8), dtype=np.uint8)
    for start in range(0, p, _BLOCK_ROWS):
        stop = min(start + _BLOCK_ROWS, p)
        packed[start:stop] = np.packbits(_kernels.ppd_block(pw, start, stop), axis=1)
    return PpdGrid(n, p, packed)


def classify_line(a: int, n: int, p: int) -> LineClass:
    """Theoretical class of the diagonal with offset ``a``."""
    cls = classify_power_residue(a, n, p)
    if cls is ResidueClass.ZERO:
        return LineClass.zero()
    if cls is ResidueClass.NON_RESIDUE:
        return LineClass.desert()
    return LineClass.residue(gcd(n, p - 1))


def desert_offsets(n: int, p: int) -> frozenset[int]:
    """Offsets ``a`` whose diagonal must be empty: the n-th power non-residues."""
    n, p = check_exponent(n), check_prime(p)
    return frozenset(
        a for a in range(1, p) if classify_line(a, n, p).kind is LineKind.DESERT
    )


def desert_count(n: int, p: int) -> int:
    """Closed form for the number of desert lines, ``p - 1 - (p-1)/gcd(n, p-1)``."""
    return p - 1 - (p - 1) // gcd(n, p - 1)


def diagonal_hits(grid: PpdGrid) -> np.ndarray:
    """Number of marked cells on each diagonal, indexed by offset ``a``."""
    p = grid.p
    hits = np.zeros(p, dtype=np.int64)
    for c in range(p):
        xs = np.flatnonzero(grid.column(c))
        np.add.at(hits, (xs - c) % p, 1)
    return hits


def empirical_desert_offsets(grid: PpdGrid) -> frozenset[int]:
    """Offsets whose diagonal in the built grid carries no marked cell."""
    return frozenset(int(a) for a in np.flatnonzero(diagonal_hits(grid) == 0))


def fixed_points_on_line(a: int, n: int, p: int) -> int:
    """Number of c with ``h_c(c + a) == c + a``, counted by brute force."""
    pw = power_map(n, p)
    c = np.arange(p)
    x = (c + a) % p
    return int(np.count_nonzero((pw[x] + c) % p == x))


def fixed_points_by_line(n: int, p: int) -> np.ndarray:
    """Fixed-point count on every diagonal at once, indexed by offset ``a``."""
    pw = power_map(n, p)
    c = np.arange(p)[:, None]
    x = np.arange(p)[None, :]
    fixed = (pw[x] + c) % p == x
    cs, xs = np.nonzero(fixed)
    return np.bincount((xs - cs) % p, minlength=p)


def fixed_points_total(n: int, p: int) -> int:
    """Count pairs (c, x) with ``h_c(x) == x`` over the whole grid."""
    n, p = check_exponent(n), check_prime(p)
    pw = power_map(n, p)
    # h_c(x) = x  <=>  c = x - x**n, so each x is fixed for exactly one c;
    # the brute-force double loop below does not lean on that.
    total = 0
    x = np.arange(p)
    for c in range(p):
        total += int(np.count_nonzero((pw + c) % p == x))
    return total


def reduced_ppd(grid: PpdGrid) -> np.ndarray:
    """Cells with the c = 0 column and x = 0 row removed; entry [c-1, x-1]."""
    return grid.cells[1:, 1:]


def check_odd_symmetry(n: int, p: int, grid: PpdGrid | None = None) -> bool:
    """Whether the reduced diagram is invariant under ``(c, x) -> (-c, -x)``.

    Only meaningful for odd ``n``; even exponents are rejected.
    """
    n = check_exponent(n)
    if n % 2 == 0:
        raise ValueError(f"odd-exponent symmetry needs odd n, got {n}")
    if grid is None:
        grid = build_ppd(n, p)
    elif (grid.n, grid.p) != (n, p):
        raise ValueError("grid does not match (n, p)")
    reduced = reduced_ppd(grid)
    # Index k in the reduced grid is residue k+1, and -(k+1) = p-1-k maps to k' = p-2-k.
    return bool(np.array_equal(reduced, reduced[::-1, ::-1]))
