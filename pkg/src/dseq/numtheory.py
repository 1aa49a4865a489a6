"""Integer primitives: prime enumeration, primality, factorization, multiplicative order.

Everything here is a pure function of its arguments and safe to call from
any number of workers concurrently.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Factorization",
    "sieve_primes",
    "is_prime",
    "pow_mod",
    "factorize",
    "multiplicative_order",
]

# Small primes used both for trial-division shortcuts and as first wheel spokes.
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Fixed witness set giving a deterministic Miller-Rabin answer for all n < 2^64
# (the well-known 7-witness set).
_MR_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer: n = prod(p**e)."""

    n: int
    factors: dict[int, int]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"cannot factorize {self.n}: must be >= 1")
        prod = 1
        for p, e in self.factors.items():
            if e < 1 or not is_prime(p):
                raise ValueError(f"bad factor {p}^{e} for n={self.n}")
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factors multiply to {prod}, not {self.n}")


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit, ascending. Empty for limit < 2."""
    if limit < 2:
        return []
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask).tolist()


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all n < 2^64."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        a %= n
        if a == 0:
            continue
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


def pow_mod(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus, in [0, modulus)."""
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    if base < 0 or exp < 0:
        raise ValueError("base and exp must be nonnegative")
    return pow(base, exp, modulus)


def factorize(n: int) -> Factorization:
    """Factor n >= 1 by wheel trial division (fine up to ~10^12)."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}: must be >= 1")
    remaining = n
    factors: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while remaining % p == 0:
            factors[p] = factors.get(p, 0) + 1
            remaining //= p
    # 2/3/5-wheel over the residues coprime to 30, aligned to start at 41.
    increments = (2, 4, 2, 4, 6, 2, 6, 4)
    d, i = 41, 0
    while d * d <= remaining:
        if remaining % d == 0:
            e = 0
            while remaining % d == 0:
                e += 1
                remaining //= d
            factors[d] = e
        d += increments[i]
        i = (i + 1) % 8
    if remaining > 1:
        factors[remaining] = factors.get(remaining, 0) + 1
    return Factorization(n, factors)


def _totient(m: int) -> int:
    phi = 1
    for p, e in factorize(m).factors.items():
        phi *= p ** (e - 1) * (p - 1)
    return phi


def multiplicative_order(a: int, m: int) -> int:
    """Smallest T >= 1 with a**T == 1 (mod m).

    The group order (m-1 for prime m, Euler phi otherwise) is factored and
    its prime factors are stripped while the power stays 1; no brute-force
    iteration, so large moduli stay cheap.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not invertible mod {m}")
    group = m - 1 if is_prime(m) else _totient(m)
    t = group
    for q in factorize(group).factors:
        while t % q == 0 and pow(a, t // q, m) == 1:
            t //= q
    return t
