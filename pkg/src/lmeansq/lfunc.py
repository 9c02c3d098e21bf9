"""L(r, chi) by truncated series and by finite Gauss-sum forms, and the
mean squares of |L(3, chi)| over odd and |L(4, chi)| over even characters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .characters import DirichletCharacter, characters_of_parity, parity
from .exact_arith import format_rational
from .expsums import bernoulli_gauss_combination, check_finite, gauss_sum_vector, s_weighted
from .multiplicative import euler_phi, jordan_totient
from .records import DEFAULT_TOLERANCE, Tolerance
from .trigsums import l_principal


@dataclass(frozen=True)
class LSeriesConfig:
    """Truncate the Dirichlet series at n = N."""

    N: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"N must be positive, got {self.N}")

    def tail_bound(self, r: int) -> float:
        """Upper bound on |sum_{n > N} chi(n) n^-r| when |chi| <= 1."""
        if r < 2:
            raise ValueError("tail bound needs r >= 2")
        return self.N ** (1 - r) / (r - 1)


def default_config(r: int, k: int) -> LSeriesConfig:
    if r == 3:
        return LSeriesConfig(max(10**5, k * k))
    if r == 4:
        return LSeriesConfig(max(10**4, k * k))
    return LSeriesConfig(max(10**5, k * k))


@lru_cache(maxsize=16)
def _power_weights(r: int, N: int) -> np.ndarray:
    n = np.arange(1, N + 1, dtype=float)
    return n ** (-float(r))


@lru_cache(maxsize=512)
def _class_sums(k: int, r: int, N: int) -> np.ndarray:
    """c[a] = sum_{n <= N, n = a mod k} n^-r, for a = 0..k-1."""
    w = _power_weights(r, N)
    rows = -(-N // k)
    padded = np.zeros(rows * k)
    padded[:N] = w
    # column a-1 holds n = a, a+k, ...; roll so index matches the residue
    return np.roll(padded.reshape(rows, k).sum(axis=0), 1)


def _series_sum(r: int, chi: DirichletCharacter, N: int) -> complex:
    c = _class_sums(chi.k, r, N)
    vals = np.array([chi.value(a) for a in range(chi.k)])
    return check_finite(complex((vals * c).sum()))


def l_series(r: int, chi: DirichletCharacter, cfg: LSeriesConfig | None = None) -> complex:
    """sum_{n=1}^{N} chi(n) n^-r; error at most ``cfg.tail_bound(r)``."""
    if r < 2:
        raise ValueError(f"series oracle needs r >= 2 for a usable tail bound, got {r}")
    cfg = cfg or default_config(r, chi.k)
    return _series_sum(r, chi, cfg.N)


def _require(chi: DirichletCharacter, want: str) -> None:
    if chi.k < 3:
        raise ValueError(f"need k >= 3, got {chi.k}")
    if chi.is_principal:
        raise ValueError("character must be nonprincipal")
    if parity(chi) != want:
        raise ValueError(f"character {chi.label()} mod {chi.k} is not {want}")


def _moment(p: int, g: np.ndarray) -> complex:
    """sum_{j=1}^{k-1} j^p G(j)."""
    j = np.arange(1, len(g), dtype=float)
    return complex((j**p * g[:-1]).sum())


def l3_closed(chi: DirichletCharacter) -> complex:
    """L(3, chi) for odd nonprincipal chi, from Gauss sums in O(k^2)."""
    _require(chi, "odd")
    k = chi.k
    g = gauss_sum_vector(chi)
    inner = _moment(3, g) / k**2 - _moment(1, g)
    return check_finite(-2j * math.pi**3 / (3 * k**2) * inner)


def l3_bernoulli_form(chi: DirichletCharacter) -> complex:
    """L(3, chi) through S(3) - (3/2) S(2) + (1/2) S(1), before using S(2) = S(1)."""
    _require(chi, "odd")
    k = chi.k
    inner = s_weighted(3, chi) - 1.5 * s_weighted(2, chi) + 0.5 * s_weighted(1, chi)
    return check_finite(-2j * math.pi**3 / (3 * k) * inner)


def l4_closed(chi: DirichletCharacter) -> complex:
    """L(4, chi) for even nonprincipal chi."""
    _require(chi, "even")
    k = chi.k
    g = gauss_sum_vector(chi)
    inner = _moment(4, g) / k**2 - 2 * _moment(2, g)
    return check_finite(-(math.pi**4) / (3 * k**3) * inner)


# -- general r -------------------------------------------------------------------

# Characters used to fix the global sign of the general form.  The mod 5
# character (2,) is the real even one.
_SIGN_REFERENCE = {"odd": DirichletCharacter(3, (1,)), "even": DirichletCharacter(5, (2,))}


def _unsigned_finite_form(r: int, chi: DirichletCharacter) -> complex:
    pref = (1j**r) * 2 ** (r - 1) * math.pi**r / (chi.k * math.factorial(r))
    return pref * bernoulli_gauss_combination(r, chi)


@lru_cache(maxsize=None)
def finite_form_sign(r: int) -> int:
    """Global sign of the general finite form for this r, found by
    comparison with a long partial sum on a reference character."""
    if not 1 <= r <= 6:
        raise ValueError(f"r must be in 1..6, got {r}")
    chi = _SIGN_REFERENCE["odd" if r % 2 else "even"]
    # for r = 1 the partial sum converges like 1/N; enough to tell +-1 apart
    ref = _series_sum(r, chi, 10**6 if r == 1 else 10**5)
    base = _unsigned_finite_form(r, chi)
    return 1 if abs(base - ref) < abs(base + ref) else -1


def general_finite_form(r: int, chi: DirichletCharacter) -> complex:
    """L(r, chi) for 1 <= r <= 6 and chi nonprincipal of the parity of r."""
    if not 1 <= r <= 6:
        raise ValueError(f"r must be in 1..6, got {r}")
    _require(chi, "odd" if r % 2 else "even")
    return check_finite(finite_form_sign(r) * _unsigned_finite_form(r, chi))


# -- mean squares ----------------------------------------------------------------------


def _check_r_k(r: int, k: int) -> None:
    if r not in (3, 4):
        raise ValueError(f"r must be 3 or 4, got {r}")
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")


def mean_square_rational(r: int, k: int) -> Fraction:
    """R with sum |L(r, chi)|^2 = R pi^(2r), over chi of the parity of r."""
    _check_r_k(r, k)
    phi = euler_phi(k)
    if r == 3:
        bracket = Fraction(jordan_totient(6, k), 21) - jordan_totient(2, k)
        return phi * bracket / (90 * Fraction(k) ** 6)
    bracket = (
        Fraction(jordan_totient(8, k), 700)
        + Fraction(jordan_totient(4, k), 150)
        + Fraction(2 * jordan_totient(2, k), 21)
    )
    return phi * bracket / (27 * Fraction(k) ** 8)


def mean_square_closed(r: int, k: int) -> float:
    return float(mean_square_rational(r, k)) * math.pi ** (2 * r)


def table_rational(r: int, k: int) -> Fraction:
    """The exact part reported by the tables: (90 k^6/pi^6) sum for r = 3,
    (27 k^8/pi^8) sum for r = 4."""
    scale = 90 * Fraction(k) ** 6 if r == 3 else 27 * Fraction(k) ** 8
    return mean_square_rational(r, k) * scale


def _abs2(z: complex) -> float:
    return z.real * z.real + z.imag * z.imag


def squared_values(r: int, k: int, oracle: str = "finite") -> list[float]:
    """|L(r, chi)|^2 for each character of the parity of r, in enumeration order."""
    _check_r_k(r, k)
    if oracle not in ("finite", "series"):
        raise ValueError(f"oracle must be 'finite' or 'series', got {oracle!r}")
    which = "odd" if r == 3 else "even"
    out = []
    for chi in characters_of_parity(k, which):
        if chi.is_principal:
            if oracle == "series":
                out.append(_abs2(l_series(r, chi)))
            else:
                out.append((float(l_principal(4, k)) * math.pi**4 / k**4) ** 2)
        elif oracle == "series":
            out.append(_abs2(l_series(r, chi)))
        else:
            out.append(_abs2(l3_closed(chi) if r == 3 else l4_closed(chi)))
    return out


def mean_square_brute(r: int, k: int, oracle: str = "finite") -> float:
    """sum |L(r, chi)|^2 by enumerating characters.

    ``oracle="finite"`` uses the Gauss-sum closed forms (and the exact
    principal value for r = 4), ``"series"`` the truncated series throughout.
    """
    return math.fsum(squared_values(r, k, oracle))


def mean_value(r: int, k: int) -> float:
    """Average of |L(r, chi)|^2 over the phi(k)/2 characters of the parity of r."""
    return mean_square_closed(r, k) * 2 / euler_phi(k)


@dataclass(frozen=True)
class MeanSquareResult:
    k: int
    parity: str
    r: int
    closed_exact: Fraction
    closed: float
    brute: float
    abs_err: float
    rel_err: float
    passed: bool

    @property
    def closed_exact_str(self) -> str:
        return format_rational(self.closed_exact)


def check_mean_square(
    r: int, k: int, oracle: str = "series", tol: Tolerance = DEFAULT_TOLERANCE
) -> MeanSquareResult:
    exact = mean_square_rational(r, k)
    closed = mean_square_closed(r, k)
    brute = mean_square_brute(r, k, oracle)
    err = abs(closed - brute)
    return MeanSquareResult(
        k=k,
        parity="odd" if r == 3 else "even",
        r=r,
        closed_exact=exact,
        closed=closed,
        brute=brute,
        abs_err=err,
        rel_err=err / abs(closed),
        passed=tol.accepts(err, closed, k),
    )

