"""Factorization and the multiplicative functions the closed forms use."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod

import numpy as np


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    """Trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    m = n
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            out.append((p, a))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return Factorization(n, tuple(out))


def euler_phi(n: int) -> int:
    return prod(p ** (a - 1) * (p - 1) for p, a in factorize(n))


def jordan_totient(s: int, n: int) -> int:
    """J_s(n) = n^s prod_{p | n} (1 - p^-s)."""
    if s < 1:
        raise ValueError(f"jordan_totient needs s >= 1, got {s}")
    return prod(p ** (s * (a - 1)) * (p**s - 1) for p, a in factorize(n))


def mobius(n: int) -> int:
    f = factorize(n)
    if any(a > 1 for _, a in f):
        return 0
    return -1 if len(f.factors) % 2 else 1


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, a in factorize(n):
        divs = [d * p**e for d in divs for e in range(a + 1)]
    return sorted(divs)


def radical_product(n: int, e: int) -> int:
    """prod_{p | n} (1 - p^e), the value of sum_{d | n} d^e mu(d)."""
    return prod(1 - p**e for p in factorize(n).primes)


def phi4_closed(n: int) -> int:
    """Fourth-power sum of the reduced residues mod n, from its closed form.

    Evaluated in exact rationals; a non-integer result means the formula was
    mistranscribed, so it raises instead of rounding.  The three-term form
    holds for n >= 2; the Mobius inversion also leaves (n^4/2) sum_{d|n}
    mu(n/d), which is 1/2 at n = 1 and 0 otherwise, so it is kept here.
    """
    value = (
        Fraction(n**4 * euler_phi(n), 5)
        + Fraction(n**3 * radical_product(n, 1), 3)
        - Fraction(n * radical_product(n, 3), 30)
        + (Fraction(1, 2) if n == 1 else 0)
    )
    if value.denominator != 1:
        raise ArithmeticError(f"phi_4({n}) closed form is not an integer: {value}")
    return value.numerator


def power_coprime_sum_direct(e: int, n: int) -> int:
    """sum of j^e over 1 <= j <= n with gcd(j, n) = 1, by direct summation."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if e < 0:
        raise ValueError(f"e must be nonnegative, got {e}")
    if n**e < 2**62 and n**(e + 1) < 2**94 and n < 2**29:
        j = np.arange(1, n + 1, dtype=np.int64)
        terms = j[np.gcd(j, n) == 1] ** e
        # split each term so both partial sums stay exact in int64
        lo = terms & 0xFFFFFFFF
        hi = terms >> 32
        return (int(hi.sum()) << 32) + int(lo.sum())
    return sum(j**e for j in range(1, n + 1) if gcd(j, n) == 1)
