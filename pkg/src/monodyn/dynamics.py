"""Orbits of the perturbed monomial maps ``h_c(x) = x**n + c`` over F_p."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .numtheory import check_exponent, check_prime, gcd, pow_mod, power_map


@dataclass(frozen=True)
class SystemParams:
    """One map ``x -> x**n + c (mod p)``."""

    n: int
    c: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "n", check_exponent(self.n))
        object.__setattr__(self, "p", check_prime(self.p))
        c = int(self.c)
        if not 0 <= c < self.p:
            raise ValueError(f"c must lie in [0, {self.p}), got {c}")
        object.__setattr__(self, "c", c)

    def __str__(self):
        return f"x^{self.n}+{self.c} mod {self.p}"


@dataclass(frozen=True)
class OrbitInfo:
    start: int
    preperiod: int
    period: int

    @property
    def is_periodic(self) -> bool:
        return self.preperiod == 0


@dataclass(frozen=True, eq=False)
class PeriodicSet:
    """The periodic points of one map, as a boolean mask over F_p."""

    params: SystemParams
    mask: np.ndarray = field(repr=False)

    @property
    def members(self) -> frozenset[int]:
        return frozenset(int(x) for x in np.flatnonzero(self.mask))

    def __contains__(self, x) -> bool:
        return 0 <= x < self.params.p and bool(self.mask[x])

    def __len__(self) -> int:
        return int(self.mask.sum())

    def __iter__(self):
        return (int(x) for x in np.flatnonzero(self.mask))

    def __eq__(self, other):
        if not isinstance(other, PeriodicSet):
            return NotImplemented
        return self.params == other.params and np.array_equal(self.mask, other.mask)

    def sorted(self) -> list[int]:
        return list(self)


def _check_point(x: int, params: SystemParams) -> int:
    if not 0 <= x < params.p:
        raise ValueError(f"point {x} outside F_{params.p}")
    return int(x)


def step(x: int, params: SystemParams) -> int:
    """One application of the map."""
    x = _check_point(x, params)
    return (pow_mod(x, params.n, params.p) + params.c) % params.p


def successor_table(params: SystemParams) -> np.ndarray:
    """``h_c(x)`` for every x, as an int64 array."""
    return (power_map(params.n, params.p) + params.c) % params.p


def orbit_info(x: int, params: SystemParams) -> OrbitInfo:
    """Preperiod and period of ``x`` via Floyd's tortoise and hare."""
    x0 = _check_point(x, params)
    n, c, p = params.n, params.c, params.p

    def f(y):
        return (pow_mod(y, n, p) + c) % p

    tortoise, hare = f(x0), f(f(x0))
    while tortoise != hare:
        tortoise, hare = f(tortoise), f(f(hare))

    # The meeting point is a multiple of the period ahead of x0; restarting
    # one pointer from x0 makes them meet at the cycle entrance.
    preperiod = 0
    tortoise = x0
    while tortoise != hare:
        tortoise, hare = f(tortoise), f(hare)
        preperiod += 1

    period = 1
    hare = f(tortoise)
    while tortoise != hare:
        hare = f(hare)
        period += 1
    return OrbitInfo(start=x0, preperiod=preperiod, period=period)


def periodic_points_naive(params: SystemParams) -> PeriodicSet:
    """Reference detector: run every orbit p steps, then keep the next p iterates.

    Quadratic in p; kept as the trusted oracle for the fast detector.
    """
    p = params.p
    mask = np.zeros(p, dtype=bool)
    for x in range(p):
        y = x
        for _ in range(p):
            y = step(y, params)
        for _ in range(p):
            y = step(y, params)
            mask[y] = True
    return PeriodicSet(params, mask)


def periodic_points(params: SystemParams) -> PeriodicSet:
    """Periodic points in O(p) map evaluations by colouring the functional graph."""
    pw = power_map(params.n, params.p)
    return PeriodicSet(params, _kernels.periodic_mask(pw, params.c))


def is_bijective(n: int, p: int) -> bool:
    """Whether every ``h_c`` permutes F_p (then every point is periodic)."""
    return gcd(check_exponent(n), check_prime(p) - 1) == 1


def image_size(params: SystemParams) -> int:
    return int(np.unique(successor_table(params)).size)


def functional_graph(params: SystemParams) -> list[tuple[int, int]]:
    """Edges ``(x, h_c(x))`` in ascending order of x."""
    succ = successor_table(params)
    return [(x, int(y)) for x, y in enumerate(succ)]
