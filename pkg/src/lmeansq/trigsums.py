"""Cosecant power sums over reduced residues, and vanishing cotangent sums.

``sum_{(m,k)=1} sin(pi m/k)^(-2r)`` has an exact value in Jordan totients
for r = 1..4; beyond that no closed form is provided.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .expsums import reduced_residues
from .multiplicative import jordan_totient


@dataclass(frozen=True)
class CscClosedForm:
    """Coefficients on (J_2, J_4, J_6, J_8)."""

    r: int
    coefficients: tuple[Fraction, Fraction, Fraction, Fraction]

    def evaluate(self, k: int) -> Fraction:
        return sum(
            (c * jordan_totient(2 * (i + 1), k) for i, c in enumerate(self.coefficients) if c),
            Fraction(0),
        )


_F = Fraction
CSC_CLOSED_FORMS = {
    1: CscClosedForm(1, (_F(1, 3), _F(0), _F(0), _F(0))),
    2: CscClosedForm(2, (_F(2, 9), _F(1, 45), _F(0), _F(0))),
    3: CscClosedForm(3, (_F(8, 45), _F(1, 45), _F(2, 945), _F(0))),
    4: CscClosedForm(4, (_F(16, 105), _F(14, 675), _F(8, 2835), _F(1, 4725))),
}


def _check_k(k: int) -> None:
    if k < 3:
        raise ValueError(f"cosecant sums need k >= 3, got {k}")


def _sin_cos(k: int) -> tuple[np.ndarray, np.ndarray]:
    """sin and cos of pi m/k over reduced m, both from reduced angles."""
    m = np.array(reduced_residues(k), dtype=np.int64)
    s = np.sin(np.pi * np.minimum(m, k - m) / k)
    # cos(pi m/k) = sin(pi (k - 2m)/2k), accurate near m = k/2; the sign is
    # split off because vectorized sin is not exactly odd
    n = k - 2 * m
    c = np.sign(n) * np.sin(np.pi * np.abs(n) / (2 * k))
    return s, c


def csc_power_sum_numeric(r: int, k: int) -> float:
    _check_k(k)
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    s, _ = _sin_cos(k)
    return math.fsum(s ** (-2 * r))


def csc_power_sum_closed(r: int, k: int) -> Fraction:
    _check_k(k)
    try:
        form = CSC_CLOSED_FORMS[r]
    except KeyError:
        raise ValueError(f"closed form known only for r in 1..4, got {r}") from None
    return form.evaluate(k)


def cot_odd_power_sum(p: int, k: int) -> float:
    """sum over reduced m of cot(pi m/k)^p; zero by m <-> k - m antisymmetry."""
    _check_k(k)
    if p < 1 or p % 2 == 0:
        raise ValueError(f"p must be an odd positive integer, got {p}")
    s, c = _sin_cos(k)
    t = c / s
    return math.fsum(np.sign(t) * np.abs(t) ** p)


def cos_sin_power_sum(a: int, b: int, k: int) -> float:
    """sum over reduced m of cos^a / sin^b at pi m/k; zero for odd a."""
    _check_k(k)
    s, c = _sin_cos(k)
    return math.fsum(np.sign(c) ** a * np.abs(c) ** a / s**b)


_PRINCIPAL_DENOMINATORS = {2: 6, 4: 90, 6: 945}


def l_principal(s: int, k: int) -> Fraction:
    """(k/pi)^s L(s, chi_0) as an exact rational: J_s(k) / {6, 90, 945}."""
    try:
        den = _PRINCIPAL_DENOMINATORS[s]
    except KeyError:
        raise ValueError(f"s must be one of 2, 4, 6, got {s}") from None
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return Fraction(jordan_totient(s, k), den)


def principal_from_csc(s: int, k: int) -> Fraction:
    """(k/pi)^s L(s, chi_0) rebuilt from the cosecant closed forms:
    csc(2)/2 - csc(1)/3 for s = 4, csc(3)/2 - csc(2)/2 + csc(1)/15 for s = 6."""
    c = {r: csc_power_sum_closed(r, k) for r in (1, 2, 3)}
    if s == 4:
        return c[2] / 2 - c[1] / 3
    if s == 6:
        return c[3] / 2 - c[2] / 2 + c[1] / 15
    raise ValueError(f"s must be 4 or 6, got {s}")


def l4_principal_trig_numeric(k: int) -> float:
    """(k/pi)^4 L(4, chi_0) as (2/3) sum csc^2 + (1/2) sum cos(2x)/sin^4 x."""
    _check_k(k)
    s, _ = _sin_cos(k)
    return math.fsum(2 / (3 * s * s) + (1 - 2 * s * s) / (2 * s**4))


def l6_principal_trig_numeric(k: int) -> float:
    """(k/pi)^6 L(6, chi_0) from its four-term cosecant/cosine expansion."""
    _check_k(k)
    s, c = _sin_cos(k)
    c2 = 1 - 2 * s * s
    c4 = 2 * c2 * c2 - 1
    s3 = s * (3 - 4 * s * s)
    return math.fsum(-14 / (15 * s**2) - 2.5 * c2 / s**4 + 2 * s3 / s**5 + 0.5 * c4 / s**6)
