"""Modular arithmetic and n-th power residues over prime fields."""

from __future__ import annotations

import enum
import math

import numpy as np

# Deterministic Miller-Rabin witnesses for every n < 3.18e23 (covers 64-bit).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class ResidueClass(enum.Enum):
    ZERO = "zero"
    RESIDUE = "residue"
    NON_RESIDUE = "non-residue"


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all 64-bit inputs."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_prime(p: int) -> int:
    """Return ``p`` unchanged, raising ``ValueError`` unless it is a prime."""
    if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
        raise TypeError(f"modulus must be an integer, got {type(p).__name__}")
    p = int(p)
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


def check_exponent(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"exponent must be an integer, got {type(n).__name__}")
    n = int(n)
    if n < 2:
        raise ValueError(f"exponent must be >= 2, got {n}")
    return n


def pow_mod(base: int, exp: int, p: int) -> int:
    """``base**exp mod p`` by square-and-multiply (``0**0 == 1``)."""
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    result = 1 % p
    base %= p
    while exp:
        if exp & 1:
            result = result * base % p
        base = base * base % p
        exp >>= 1
    return result


def gcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def sieve(limit: int) -> np.ndarray:
    """All primes <= ``limit`` as an int64 array (sieve of Eratosthenes)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for q in range(2, math.isqrt(limit) + 1):
        if flags[q]:
            flags[q * q :: q] = False
    return np.flatnonzero(flags).astype(np.int64)


def first_primes(m: int) -> list[int]:
    """The first ``m`` primes, starting at 2."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    # Rosser: p_m < m (ln m + ln ln m) for m >= 6.
    if m < 6:
        limit = 13
    else:
        limit = int(m * (math.log(m) + math.log(math.log(m)))) + 1
    return [int(q) for q in sieve(limit)[:m]]


def power_map(n: int, p: int) -> np.ndarray:
    """Vector of ``x**n mod p`` for x = 0..p-1 (int64)."""
    if p >= 1 << 31:
        raise ValueError("vectorised powering needs p < 2**31")
    x = np.arange(p, dtype=np.int64)
    out = np.ones(p, dtype=np.int64) % p
    base = x.copy()
    e = n
    while e:
        if e & 1:
            out = out * base % p
        base = base * base % p
        e >>= 1
    return out


def classify_power_residue(a: int, n: int, p: int) -> ResidueClass:
    """Classify ``a`` as an n-th power residue mod ``p`` by the Euler-type criterion."""
    if not 0 <= a < p:
        raise ValueError(f"{a} is not a residue mod {p}")
    if a == 0:
        return ResidueClass.ZERO
    if pow_mod(a, (p - 1) // gcd(n, p - 1), p) == 1:
        return ResidueClass.RESIDUE
    return ResidueClass.NON_RESIDUE


def count_power_residues(n: int, p: int) -> int:
    """Number of nonzero n-th powers in F_p, ``(p-1)/gcd(n, p-1)``."""
    return (p - 1) // gcd(n, p - 1)


def num_nth_roots(a: int, n: int, p: int) -> int:
    """Number of solutions x in F_p of ``x**n == a``."""
    cls = classify_power_residue(a, n, p)
    if cls is ResidueClass.ZERO:
        return 1
    if cls is ResidueClass.RESIDUE:
        return gcd(n, p - 1)
    return 0
