"""Digit generation for base-10 prime reciprocals (d-sequences).

The i-th decimal digit of 1/p (i >= 1) is ``(l * (10**i mod p)) % 10`` where
l is the single digit with ``l*p = 9 (mod 10)``.  Streams use the constant
work-per-digit recurrence ``r <- 10*r mod p``; a schoolbook long-division
generator is kept alongside as an independent oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .numtheory import is_prime, multiplicative_order

__all__ = [
    "PRIME_CAP",
    "ReciprocalSpec",
    "DigitHistogram",
    "l_multiplier",
    "digit_at",
    "digit_stream",
    "digit_prefix",
    "long_division_digits",
    "histogram",
]

# Largest admissible prime.  Keeps every intermediate product in the
# vectorized histogram path below 2^62, i.e. exactly representable in uint64.
PRIME_CAP = 2**31 - 1

# l by last digit of p: the unique digit with l*p = 9 (mod 10).
_L_FOR_LSD = {1: 9, 3: 3, 7: 7, 9: 1}

# Vector path pays off only past a few hundred digits.
_SCALAR_CUTOFF = 512


def _check_prime(p: int) -> None:
    if p in (2, 5):
        raise ValueError(f"10 is not invertible mod {p}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p > PRIME_CAP:
        raise ValueError(f"{p} exceeds the supported cap {PRIME_CAP}")


def l_multiplier(p: int) -> int:
    """The digit l with l*p = 9 (mod 10), for odd primes p != 5."""
    _check_prime(p)
    return _L_FOR_LSD[p % 10]


@dataclass(frozen=True)
class ReciprocalSpec:
    """A prime p with its multiplier digit l and period T = ord_p(10)."""

    p: int
    l: int
    period: int

    def __post_init__(self) -> None:
        if self.p in (2, 5) or self.p > PRIME_CAP:
            raise ValueError(f"unsupported prime {self.p}")
        if self.l * self.p % 10 != 9:
            raise ValueError(f"l={self.l} does not invert -{self.p} mod 10")
        if self.period < 1 or (self.p - 1) % self.period != 0:
            raise ValueError(f"period {self.period} does not divide {self.p} - 1")

    @classmethod
    def for_prime(cls, p: int) -> "ReciprocalSpec":
        return cls(p, l_multiplier(p), multiplicative_order(10, p))


@dataclass(frozen=True)
class DigitHistogram:
    """Counts of the digits 0-9 over some stretch of a reciprocal sequence."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != 10 or any(c < 0 for c in self.counts):
            raise ValueError(f"need 10 nonnegative counts, got {self.counts}")

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __add__(self, other: "DigitHistogram") -> "DigitHistogram":
        return DigitHistogram(tuple(a + b for a, b in zip(self.counts, other.counts)))

    @classmethod
    def zero(cls) -> "DigitHistogram":
        return cls((0,) * 10)


def digit_at(spec: ReciprocalSpec, i: int) -> int:
    """The i-th digit (1-based) of the expansion of 1/p."""
    if i < 1:
        raise ValueError(f"digit index must be >= 1, got {i}")
    return spec.l * pow(10, i, spec.p) % 10


def digit_stream(spec: ReciprocalSpec) -> Iterator[int]:
    """One full period of digits, i = 1..T."""
    yield from digit_prefix(spec, spec.period)


def digit_prefix(spec: ReciprocalSpec, n: int) -> Iterator[int]:
    """The first n digits of 1/p (continues past the period)."""
    if n < 0:
        raise ValueError(f"digit count must be >= 0, got {n}")
    p, l, r = spec.p, spec.l, 1
    for _ in range(n):
        r = 10 * r % p
        yield l * r % 10


def long_division_digits(p: int, n: int) -> list[int]:
    """First n digits of 1/p by schoolbook long division (independent oracle)."""
    _check_prime(p)
    if n < 0:
        raise ValueError(f"digit count must be >= 0, got {n}")
    digits = []
    r = 1
    for _ in range(n):
        r *= 10
        digits.append(r // p)
        r %= p
    return digits


def _period_residues(p: int, length: int) -> np.ndarray:
    """residues[i] = 10**(i+1) mod p, built by doubling blocks of the recurrence."""
    r = np.empty(length, dtype=np.uint64)
    r[0] = 10 % p
    k = 1
    while k < length:
        step = min(k, length - k)
        # r[k-1] is 10**k mod p; shifting a whole block by it extends the
        # recurrence `r <- 10*r mod p` in one vector operation.
        np.multiply(r[:step], r[k - 1], out=r[k : k + step])
        np.mod(r[k : k + step], p, out=r[k : k + step])
        k += step
    return r


def histogram(spec: ReciprocalSpec) -> DigitHistogram:
    """Digit counts over one full period of 1/p; total equals the period."""
    p, l, period = spec.p, spec.l, spec.period
    if period <= _SCALAR_CUTOFF:
        counts = [0] * 10
        r = 1
        for _ in range(period):
            r = 10 * r % p
            counts[l * r % 10] += 1
        return DigitHistogram(tuple(counts))
    residues = _period_residues(p, period)
    np.multiply(residues, np.uint64(l), out=residues)
    np.mod(residues, 10, out=residues)
    counts = np.bincount(residues.astype(np.int64, copy=False), minlength=10)
    return DigitHistogram(tuple(int(c) for c in counts))
