"""Gauss and Ramanujan sums, S(m, chi), and the j^r-weighted geometric sums.

Every numeric sum goes through :func:`csum` (``math.fsum`` on each part) or
numpy's pairwise reduction; exponentials are built from reduced fractions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

import numpy as np

from .characters import DirichletCharacter, turn
from .exact_arith import bernoulli
from .multiplicative import divisors, euler_phi, jordan_totient, mobius

ComplexVal = complex


def check_finite(z: complex) -> complex:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite complex value {z!r}")
    return z


def csum(values) -> complex:
    """Compensated complex sum."""
    vals = list(values)
    return complex(math.fsum(v.real for v in vals), math.fsum(v.imag for v in vals))


def reduced_residues(k: int) -> list[int]:
    return [m for m in range(1, k + 1) if gcd(m, k) == 1]


# -- Gauss sums ---------------------------------------------------------------


def gauss_sum(z: int, chi: DirichletCharacter) -> complex:
    """G(z, chi) = sum_{m=1}^{k} chi(m) exp(2 pi i m z / k)."""
    k, e = chi.k, chi.exponent
    ex = chi.exponents
    # chi(m) e(mz/k) = exp(2 pi i (a k + m z e) / (e k)), summed exactly-reduced
    terms = (turn(ex[m % k] * k + m * z * e, e * k) for m in range(1, k + 1) if ex[m % k] is not None)
    return check_finite(csum(terms))


def gauss_sum_vector(chi: DirichletCharacter) -> np.ndarray:
    """G(j, chi) for j = 1..k as a complex array (index j-1)."""
    return _gauss_vector_cached(chi.k, chi.index)


@lru_cache(maxsize=8192)
def _gauss_vector_cached(k: int, index: tuple[int, ...]) -> np.ndarray:
    chi = DirichletCharacter(k, index)
    e = chi.exponent
    ms = np.array([m for m in range(1, k + 1) if chi.exponents[m % k] is not None], dtype=np.int64)
    a = np.array([chi.exponents[m % k] for m in ms], dtype=np.int64)
    j = np.arange(1, k + 1, dtype=np.int64)
    num = (a[None, :] * k + np.outer(j, ms) * e) % (e * k)
    phase = _phases(num, e * k)
    out = phase.sum(axis=1)
    out.setflags(write=False)
    return out


def _phases(num: np.ndarray, den: int) -> np.ndarray:
    """exp(2 pi i num/den) for integer arrays, reduced to [-den/2, den/2)."""
    r = np.where(2 * num >= den, num - den, num)
    return np.exp(2j * np.pi * (r / den))


# -- Ramanujan sums -------------------------------------------------------------


def ramanujan_sum(k: int, z: int) -> int:
    """R_k(z) = phi(k) mu(k/(k,z)) / phi(k/(k,z))."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    q = k // gcd(k, z)
    num = euler_phi(k) * mobius(q)
    assert num % euler_phi(q) == 0
    return num // euler_phi(q)


def ramanujan_sum_numeric(k: int, z: int) -> complex:
    return csum(turn(m * z, k) for m in reduced_residues(k))


def ramanujan_sum_kluyver(k: int, z: int) -> int:
    """R_k(z) = sum_{d | (k, z)} d mu(k/d); independent of the phi/mu formula."""
    return sum(d * mobius(k // d) for d in divisors(gcd(k, z)))


def weighted_ramanujan(e: int, k: int) -> int:
    """sum_{j=1}^{k-1} j^e R_k(j) from its closed form, e in {2, 4}."""
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    phi = euler_phi(k)
    j2 = jordan_totient(2, k)
    if e == 2:
        value = Fraction(-(k**2) * phi, 2) + Fraction(k * j2, 6)
    elif e == 4:
        value = (
            Fraction(-(k**4) * phi, 2)
            + Fraction(k**3 * j2, 3)
            - Fraction(k * jordan_totient(4, k), 30)
        )
    else:
        raise ValueError(f"weighted Ramanujan closed form exists for e in (2, 4), got {e}")
    if value.denominator != 1:
        raise ArithmeticError(f"weighted Ramanujan sum ({e}, {k}) is not an integer: {value}")
    return value.numerator


def weighted_ramanujan_direct(e: int, k: int) -> int:
    """sum_{j<k} j^e R_k(j) with R_k from the Kluyver divisor sum."""
    by_gcd: dict[int, int] = {}
    total = 0
    for j in range(1, k):
        g = gcd(j, k)
        if g not in by_gcd:
            by_gcd[g] = ramanujan_sum_kluyver(k, g)
        total += j**e * by_gcd[g]
    return total


# -- S(m, chi) ----------------------------------------------------------------


def s_weighted(m: int, chi: DirichletCharacter) -> complex:
    """S(m, chi) = sum_{j=1}^{k} (j/k)^m G(j, chi)."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    k = chi.k
    g = gauss_sum_vector(chi)
    w = (np.arange(1, k + 1) / k) ** m
    return check_finite(csum(w * g))


def bernoulli_gauss_combination(r: int, chi: DirichletCharacter) -> complex:
    """sum_{q=0}^{2 floor(r/2)} C(r, q) B_q S(r - q, chi)."""
    return csum(
        float(comb(r, q) * bernoulli(q)) * s_weighted(r - q, chi) for q in range(0, 2 * (r // 2) + 1)
    )


# -- sum_{j=1}^{k-1} j^r alpha^{+-j} ---------------------------------------------


def alpha_minus_one(m: int, k: int) -> complex:
    """exp(2 pi i m/k) - 1 without cancellation: 2i sin(pi m/k) exp(i pi m/k)."""
    return 2j * sin_pi_frac(m, k) * turn(m, 2 * k)


def sin_pi_frac(m: int, k: int) -> float:
    """sin(pi m / k) from the reduced angle."""
    r = m % (2 * k)
    sign = 1.0
    if r >= k:
        r -= k
        sign = -1.0
    r = min(r, k - r)
    return sign * math.sin(math.pi * r / k)


def jr_alpha_sum_closed(r: int, m: int, k: int, sign: int = 1) -> complex:
    """Closed rational function of alpha = e(m/k) for sum_{j<k} j^r alpha^(sign j)."""
    if gcd(m, k) != 1 or m % k == 0:
        raise ValueError(f"m={m} must be a unit mod k={k} (alpha = 1 is a pole)")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    a = turn(m, k)
    b = alpha_minus_one(m, k)
    if r == 1:
        v = k / b
        return v if sign > 0 else -k - v
    if r == 2:
        tail = -2 * k * a / b**2
        return k**2 / b + tail if sign > 0 else -(k**2) - k**2 / b + tail
    if r == 3:
        mid = -3 * k**2 * a / b**2
        cubic = (3 * k * a + 3 * k * a**2) / b**3
        if sign > 0:
            return k**3 / b + mid + cubic
        return -(k**3) * a / b + mid - cubic
    if r == 4:
        quad = -4 * k**3 * a / b**2
        cubic = (6 * k**2 * a + 6 * k**2 * a**2) / b**3
        quart = -(4 * k * a + 16 * k * a**2 + 4 * k * a**3) / b**4
        if sign > 0:
            return k**4 / b + quad + cubic + quart
        return -(k**4) * a / b + quad - cubic + quart
    raise ValueError(f"closed forms exist for r in 1..4, got {r}")


def jr_alpha_sum_direct(r: int, m: int, k: int, sign: int = 1) -> complex:
    return csum(j**r * turn(sign * m * j, k) for j in range(1, k))


def power_phase_sums(k: int, max_r: int = 4) -> tuple[np.ndarray, np.ndarray]:
    """Direct sums P_r(m) = sum_{j=1}^{k-1} j^r e(mj/k) for every reduced m.

    Returns ``(ms, P)`` with ``P[r, i]`` the sum for ``ms[i]``.
    """
    ms = np.array(reduced_residues(k), dtype=np.int64)
    j = np.arange(1, k, dtype=np.int64)
    phase = _phases(np.outer(ms, j) % k, k)
    jf = j.astype(float)
    P = np.stack([(phase * jf**r).sum(axis=1) for r in range(max_r + 1)])
    return ms, P
