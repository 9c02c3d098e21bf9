"""The alpha-ratio identities behind the two mean-square formulas.

With alpha = e(m/k), the derivations reduce everything to sums over
reduced residues m of ``alpha^t / (alpha - 1)^d``.  Three kinds of
identity are checked here:

``ratio``
    single ratio sums against Jordan-totient closed forms;
``expansion``
    the products ``P_p(alpha) P_q(alpha^{+-1})`` of the weighted geometric
    sums P_r(alpha) = sum_{j<k} j^r alpha^j, expanded into ratios;
``term``
    the same products summed over m, against their closed brackets, plus
    the principal-character part of the even case.

Left sides are numeric and computed directly; right sides are exact where
the identity is exact.  Seven entries also keep a near-miss variant of the
right side in ``variant_rhs`` (one wrong coefficient or dropped factor);
the variant must fail, which keeps the table from drifting back to it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .expsums import _phases, power_phase_sums, sin_pi_frac
from .expsums import weighted_ramanujan_direct
from .records import DEFAULT_TOLERANCE, Tolerance, VerificationRecord, make_record
from .multiplicative import euler_phi, jordan_totient
from .trigsums import csc_power_sum_closed

SUITE = "alpha"


@dataclass(frozen=True)
class Ratio:
    """coef * k^kpow * alpha^t / (alpha - 1)^d."""

    coef: int
    kpow: int
    t: int
    d: int


@dataclass(frozen=True)
class Basis:
    """coef * k^kpow * basis(k)."""

    coef: Fraction
    kpow: int
    basis: str


@dataclass(frozen=True)
class Product:
    """sum over m of P_p(alpha) P_q(alpha^-1) (``minus``), P_p P_q (``plus``),
    their difference (``diff``) or their sum (``sum``)."""

    p: int
    q: int
    mode: str


@dataclass(frozen=True)
class AlphaIdentity:
    id: str
    group: str
    lhs: object
    rhs: tuple
    scale: tuple[Fraction, int] = (Fraction(1), 0)
    variant_rhs: tuple | None = None
    note: str = ""

    @property
    def has_variant(self) -> bool:
        return self.variant_rhs is not None


def _b(*terms) -> tuple[Basis, ...]:
    return tuple(Basis(Fraction(c), kp, name) for c, kp, name in terms)


def _r(*terms) -> tuple[Ratio, ...]:
    return tuple(Ratio(*t) for t in terms)


F = Fraction

_SIN6_1 = _b((F(9, 32), 2, "csc6"), (F(-1, 80), 2, "J4"), (F(-1, 8), 2, "J2"))
_SIN8_2 = _b((F(1, 8), 2, "csc8"), (F(-2, 945), 2, "J6"), (F(2, 45), 2, "J2"))
_SIN8_2_VARIANT = _b((F(1, 8), 2, "csc8"), (F(-2, 945), 2, "J6"), (F(2, 45), 0, "J2"))
_SIN8_3 = _b((1, 2, "csc8"), (F(-4, 945), 2, "J6"), (F(-2, 45), 2, "J4"), (F(-16, 45), 2, "J2"))

RATIO_IDENTITIES = (
    AlphaIdentity("1/(a-1)^2", "ratio", Ratio(-1, 6, 0, 2), _b((F(1, 12), 6, "J2"), (F(-1, 2), 6, "phi"))),
    AlphaIdentity("a/(a-1)^2", "ratio", Ratio(-1, 6, 1, 2), _b((F(1, 12), 6, "J2"))),
    AlphaIdentity("a^2/(a-1)^3", "ratio", Ratio(3, 5, 2, 3), _b((F(-1, 8), 5, "J2"))),
    AlphaIdentity("a/(a-1)^3", "ratio", Ratio(3, 5, 1, 3), _b((F(1, 8), 5, "J2"))),
    AlphaIdentity("a^3/(a-1)^4", "ratio", Ratio(-3, 4, 3, 4), _b((F(-1, 240), 4, "J4"), (F(1, 12), 4, "J2"))),
    AlphaIdentity("a^2/(a-1)^4", "ratio", Ratio(-12, 4, 2, 4), _b((F(-1, 60), 4, "J4"), (F(-1, 6), 4, "J2"))),
    AlphaIdentity("a/(a-1)^4", "ratio", Ratio(-9, 4, 1, 4), _b((F(-1, 80), 4, "J4"), (F(1, 4), 4, "J2"))),
    AlphaIdentity("a^3/(a-1)^5", "ratio", Ratio(18, 3, 3, 5), _b((F(1, 80), 3, "J4"), (F(1, 8), 3, "J2"))),
    AlphaIdentity("a^2/(a-1)^5", "ratio", Ratio(18, 3, 2, 5), _b((F(-1, 80), 3, "J4"), (F(-1, 8), 3, "J2"))),
    AlphaIdentity("a^4/(a-1)^6", "ratio", Ratio(-18, 2, 4, 6), _SIN6_1),
    AlphaIdentity("a^3/(a-1)^6", "ratio", Ratio(-36, 2, 3, 6), _b((F(9, 16), 2, "csc6"))),
    AlphaIdentity("a^2/(a-1)^6", "ratio", Ratio(-18, 2, 2, 6), _SIN6_1),
    AlphaIdentity("1/(a-1)", "ratio", Ratio(-1, 4, 0, 1), _b((F(1, 2), 4, "phi"))),
    # even case
    AlphaIdentity("a/(a-1)^5", "ratio", Ratio(-12, 5, 1, 5), _b((F(1, 40), 5, "J4"), (F(-1, 4), 5, "J2"))),
    AlphaIdentity("a^4/(a-1)^5", "ratio", Ratio(4, 5, 4, 5), _b((F(1, 120), 5, "J4"), (F(-1, 12), 5, "J2"))),
    AlphaIdentity(
        "a^2/(a-1)^7",
        "ratio",
        Ratio(-48, 3, 2, 7),
        _b((F(-1, 420), 3, "J6"), (F(1, 120), 3, "J4"), (F(2, 15), 3, "J2")),
        variant_rhs=_b((F(-1, 420), 3, "J6"), (F(1, 720), 3, "J4"), (F(2, 15), 3, "J2")),
        note="variant has J4 coefficient 1/720; the bracket gives 1/120",
    ),
    AlphaIdentity(
        "a^3/(a-1)^7", "ratio", Ratio(-240, 3, 3, 7), _b((F(-1, 252), 3, "J6"), (F(-1, 24), 3, "J4"), (F(-1, 3), 3, "J2"))
    ),
    AlphaIdentity(
        "a^4/(a-1)^7", "ratio", Ratio(-240, 3, 4, 7), _b((F(1, 252), 3, "J6"), (F(1, 24), 3, "J4"), (F(1, 3), 3, "J2"))
    ),
    AlphaIdentity(
        "a^5/(a-1)^7",
        "ratio",
        Ratio(-48, 3, 5, 7),
        _b((F(1, 420), 3, "J6"), (F(-1, 120), 3, "J4"), (F(-2, 15), 3, "J2")),
        variant_rhs=_b((F(1, 420), 3, "J6"), (F(-1, 720), 3, "J4"), (F(-2, 15), 3, "J2")),
        note="variant has J4 coefficient -1/720; correct value -1/120",
    ),
    AlphaIdentity(
        "a^2/(a-1)^8",
        "ratio",
        Ratio(32, 2, 2, 8),
        _SIN8_2,
        variant_rhs=_SIN8_2_VARIANT,
        note="variant drops the k^2 on the J2 term",
    ),
    AlphaIdentity("a^3/(a-1)^8", "ratio", Ratio(256, 2, 3, 8), _SIN8_3),
    AlphaIdentity(
        "a^4/(a-1)^8",
        "ratio",
        Ratio(576, 2, 4, 8),
        _b((F(9, 4), 2, "csc8")),
        variant_rhs=_b((F(9, 8), 2, "csc8")),
        note="alpha^4/(alpha-1)^8 = csc^8/256 exactly, so 576/256 = 9/4; variant 9/8",
    ),
    AlphaIdentity("a^5/(a-1)^8", "ratio", Ratio(256, 2, 5, 8), _SIN8_3),
    AlphaIdentity(
        "a^6/(a-1)^8",
        "ratio",
        Ratio(32, 2, 6, 8),
        _SIN8_2,
        variant_rhs=_SIN8_2_VARIANT,
        note="variant drops the k^2 on the J2 term",
    ),
)


_E42P = (
    (1, 6, 0, 2), (-6, 5, 1, 3), (6, 4, 1, 4), (14, 4, 2, 4), (-4, 3, 1, 5),
    (-28, 3, 2, 5), (-16, 3, 3, 5), (8, 2, 2, 6), (32, 2, 3, 6), (8, 2, 4, 6),
)

EXPANSION_IDENTITIES = (
    AlphaIdentity("j3s3:minus", "expansion", Product(3, 3, "minus"), _r(
        (-1, 6, 1, 2), (3, 5, 2, 3), (-3, 5, 1, 3), (-3, 4, 3, 4), (3, 4, 2, 4), (-3, 4, 1, 4),
        (-9, 2, 4, 6), (-9, 2, 2, 6), (-18, 2, 3, 6))),
    AlphaIdentity("j3s3:plus", "expansion", Product(3, 3, "plus"), _r(
        (1, 6, 0, 2), (-6, 5, 1, 3), (15, 4, 2, 4), (6, 4, 1, 4), (-18, 3, 3, 5), (-18, 3, 2, 5),
        (9, 2, 4, 6), (9, 2, 2, 6), (18, 2, 3, 6))),
    AlphaIdentity("j3s3:diff", "expansion", Product(3, 3, "diff"), _r(
        (-1, 6, 0, 2), (-1, 6, 1, 2), (3, 5, 2, 3), (3, 5, 1, 3), (-3, 4, 3, 4), (-12, 4, 2, 4),
        (-9, 4, 1, 4), (18, 3, 3, 5), (18, 3, 2, 5), (-18, 2, 4, 6), (-36, 2, 3, 6), (-18, 2, 2, 6))),
    AlphaIdentity("j3s:minus", "expansion", Product(3, 1, "minus"), _r(
        (-1, 4, 0, 1), (-1, 4, 0, 2), (3, 3, 1, 2), (3, 3, 1, 3), (-3, 2, 2, 3), (-3, 2, 1, 3),
        (-3, 2, 2, 4), (-3, 2, 1, 4))),
    AlphaIdentity("j3s:plus", "expansion", Product(3, 1, "plus"), _r(
        (1, 4, 0, 2), (-3, 3, 1, 3), (3, 2, 2, 4), (3, 2, 1, 4)),
        note="the 3k^2 alpha^2 term carries no extra grouping"),
    AlphaIdentity("j3s:diff", "expansion", Product(3, 1, "diff"), _r(
        (-1, 4, 0, 1), (-2, 4, 0, 2), (3, 3, 1, 2), (6, 3, 1, 3), (-3, 2, 1, 3), (-3, 2, 2, 3),
        (-6, 2, 1, 4), (-6, 2, 2, 4))),
    AlphaIdentity("js:minus", "expansion", Product(1, 1, "minus"), _r((-1, 2, 0, 1), (-1, 2, 0, 2))),
    AlphaIdentity("js:plus", "expansion", Product(1, 1, "plus"), _r((1, 2, 0, 2))),
    AlphaIdentity("js:diff", "expansion", Product(1, 1, "diff"), _r((-1, 2, 0, 1), (-2, 2, 0, 2))),
    AlphaIdentity("j4s4:minus", "expansion", Product(4, 4, "minus"), _r(
        (-1, 8, 1, 2), (-4, 7, 1, 3), (4, 7, 2, 3), (-6, 6, 1, 4), (4, 6, 2, 4), (-6, 6, 3, 4),
        (-4, 5, 1, 5), (-12, 5, 2, 5), (12, 5, 3, 5), (4, 5, 4, 5), (-4, 4, 2, 6), (56, 4, 3, 6),
        (-4, 4, 4, 6), (16, 2, 2, 8), (128, 2, 3, 8), (288, 2, 4, 8), (128, 2, 5, 8), (16, 2, 6, 8))),
    AlphaIdentity("j4s4:plus", "expansion", Product(4, 4, "plus"), _r(
        (1, 8, 0, 2), (-8, 7, 1, 3), (12, 6, 1, 4), (28, 6, 2, 4), (-8, 5, 1, 5), (-80, 5, 2, 5),
        (-56, 5, 3, 5), (68, 4, 2, 6), (200, 4, 3, 6), (68, 4, 4, 6), (-48, 3, 2, 7), (-240, 3, 3, 7),
        (-240, 3, 4, 7), (-48, 3, 5, 7), (16, 2, 2, 8), (256, 2, 4, 8), (16, 2, 6, 8), (32, 2, 4, 8),
        (128, 2, 3, 8), (128, 2, 5, 8))),
    AlphaIdentity("j4s4:sum", "expansion", Product(4, 4, "sum"), _r(
        (1, 8, 0, 2), (-1, 8, 1, 2), (-12, 7, 1, 3), (4, 7, 2, 3), (6, 6, 1, 4), (32, 6, 2, 4),
        (-6, 6, 3, 4), (-12, 5, 1, 5), (-92, 5, 2, 5), (-44, 5, 3, 5), (4, 5, 4, 5), (64, 4, 2, 6),
        (256, 4, 3, 6), (64, 4, 4, 6), (-48, 3, 2, 7), (-240, 3, 3, 7), (-240, 3, 4, 7),
        (-48, 3, 5, 7), (32, 2, 2, 8), (256, 2, 3, 8), (576, 2, 4, 8), (256, 2, 5, 8),
        (32, 2, 6, 8))),
    AlphaIdentity("j4s2:minus", "expansion", Product(4, 2, "minus"), _r(
        (-1, 6, 0, 1), (-1, 6, 0, 2), (4, 5, 1, 2), (2, 5, 1, 3), (-6, 4, 1, 3), (-6, 4, 2, 3),
        (-6, 4, 1, 4), (2, 4, 2, 4), (4, 3, 1, 4), (16, 3, 2, 4), (4, 3, 3, 4), (4, 3, 1, 5),
        (4, 3, 2, 5), (-8, 3, 3, 5), (8, 2, 2, 6), (32, 2, 3, 6), (8, 2, 4, 6))),
    AlphaIdentity(
        "j4s2:plus", "expansion", Product(4, 2, "plus"), _r(*_E42P),
        variant_rhs=_r(*((-6, 4, 1, 4) if t == (6, 4, 1, 4) else t for t in _E42P)),
        note="variant has -6 on k^4 alpha/(alpha-1)^4; the product gives +6",
    ),
    AlphaIdentity("j4s2:sum", "expansion", Product(4, 2, "sum"), _r(
        (-1, 6, 0, 1), (4, 5, 1, 2), (-4, 5, 1, 3), (-6, 4, 1, 3), (-6, 4, 2, 3), (16, 4, 2, 4),
        (4, 3, 1, 4), (16, 3, 2, 4), (4, 3, 3, 4), (-24, 3, 2, 5), (-24, 3, 3, 5), (16, 2, 2, 6),
        (64, 2, 3, 6), (16, 2, 4, 6))),
    AlphaIdentity("j2s2:minus", "expansion", Product(2, 2, "minus"), _r(
        (-1, 4, 0, 1), (-1, 4, 0, 2), (2, 3, 1, 2), (4, 2, 2, 4))),
    AlphaIdentity("j2s2:plus", "expansion", Product(2, 2, "plus"), _r(
        (1, 4, 0, 2), (-4, 3, 1, 3), (4, 2, 2, 4))),
    AlphaIdentity("j2s2:sum", "expansion", Product(2, 2, "sum"), _r(
        (-1, 4, 0, 1), (2, 3, 1, 2), (-4, 3, 1, 3), (8, 2, 2, 4))),
)


def _combo(*parts) -> tuple:
    return tuple((Fraction(c), kp, Product(p, q, mode)) for c, kp, p, q, mode in parts)


_J4S2_BRACKET = _b(
    (F(1, 18), 6, "phi"), (F(-1, 18), 5, "J2"), (F(1, 405), 4, "J4"), (F(2, 81), 4, "J2"),
    (F(1, 270), 3, "J4"), (F(-1, 2835), 2, "J6"), (F(-1, 810), 2, "J4"), (F(-2, 405), 2, "J2"),
)
_J3S_BRACKET = _b((F(-1, 2), 4, "phi"), (F(1, 6), 4, "J2"), (F(-1, 60), 2, "J4"), (F(1, 12), 2, "J2"))

TERM_IDENTITIES = (
    AlphaIdentity("j3s3:bracket", "term", _combo((1, 0, 3, 3, "diff")), _b(
        (F(-1, 2), 4, "phi"), (F(1, 6), 4, "J2"), (F(-1, 30), 2, "J4"), (F(1, 6), 2, "J2"),
        (F(-1, 20), 0, "J2"), (F(1, 420), 0, "J6")), scale=(F(1), 2)),
    AlphaIdentity("j3s:bracket", "term", _combo((1, 0, 3, 1, "diff")), _J3S_BRACKET),
    AlphaIdentity("js3:bracket", "term", _combo((1, 0, 1, 3, "diff")), _J3S_BRACKET),
    AlphaIdentity("js:bracket", "term", _combo((1, 0, 1, 1, "diff")), _b(
        (F(-1, 2), 4, "phi"), (F(1, 6), 4, "J2")), scale=(F(1), -2)),
    AlphaIdentity("odd:assembly", "term", _combo(
        (1, 0, 3, 3, "diff"), (-1, 2, 3, 1, "diff"), (-1, 2, 1, 3, "diff"), (1, 4, 1, 1, "diff")),
        _b((F(1, 420), 0, "J6"), (F(-1, 20), 0, "J2")), scale=(F(1), 2)),
    AlphaIdentity("j4s4:bracket", "term", _combo((1, 0, 4, 4, "sum")), _b(
        (F(1, 36), 6, "phi"), (F(-1, 27), 5, "J2"), (F(1, 405), 4, "J4"), (F(2, 81), 4, "J2"),
        (F(1, 270), 3, "J4"), (F(-2, 2835), 2, "J6"), (F(-1, 405), 2, "J4"), (F(-4, 405), 2, "J2"),
        (F(1, 18900), 0, "J8"), (F(1, 4050), 0, "J4"), (F(2, 567), 0, "J2")), scale=(F(18), 2)),
    AlphaIdentity("j4s2:bracket", "term", _combo((1, 0, 4, 2, "sum")), _J4S2_BRACKET, scale=(F(9), 0)),
    AlphaIdentity("j2s4:bracket", "term", _combo((1, 0, 2, 4, "sum")), _J4S2_BRACKET, scale=(F(9), 0),
                  note="the sum of the two products, not their difference"),
    AlphaIdentity("j2s2:bracket", "term", _combo((1, 0, 2, 2, "sum")), _b(
        (F(1, 9), 6, "phi"), (F(-2, 27), 5, "J2"), (F(1, 405), 4, "J4"), (F(2, 81), 4, "J2")),
        scale=(F(9, 2), -2)),
    AlphaIdentity("even:assembly", "term", _combo(
        (1, 0, 4, 4, "sum"), (-2, 2, 4, 2, "sum"), (-2, 2, 2, 4, "sum"), (4, 4, 2, 2, "sum")),
        _b((F(1, 36), 6, "phi"), (F(1, 18900), 0, "J8"), (F(1, 4050), 0, "J4"), (F(2, 567), 0, "J2"),
           (F(-1, 270), 3, "J4")), scale=(F(18), 2)),
    AlphaIdentity("chi0:inner", "principal", "inner", _b((F(1, 2), 3, "phi"), (F(-1, 30), 0, "J4")),
                  scale=(F(1), -1)),
    AlphaIdentity(
        "chi0:square", "principal", "square",
        _b((F(1, 36), 6, "phi^2"), (F(-1, 270), 3, "phi*J4"), (F(1, 8100), 0, "J4^2")),
        scale=(F(9), -2),
        variant_rhs=_b((F(1, 36), 6, "phi^2"), (F(-1, 270), 3, "phi^2*J4"), (F(1, 8100), 0, "J4^2")),
        note="variant has an extra phi(k) on the middle term",
    ),
)

ALL_IDENTITIES = RATIO_IDENTITIES + EXPANSION_IDENTITIES + TERM_IDENTITIES
IDENTITIES_BY_ID = {ident.id: ident for ident in ALL_IDENTITIES}
VARIANTS = tuple(ident for ident in ALL_IDENTITIES if ident.has_variant)
assert len(IDENTITIES_BY_ID) == len(ALL_IDENTITIES)


# -- evaluation -------------------------------------------------------------------


def basis_value(name: str, k: int) -> Fraction:
    phi = euler_phi(k)
    if name == "phi":
        return Fraction(phi)
    if name in ("J2", "J4", "J6", "J8"):
        return Fraction(jordan_totient(int(name[1]), k))
    if name == "csc6":
        return csc_power_sum_closed(3, k)
    if name == "csc8":
        return csc_power_sum_closed(4, k)
    j4 = jordan_totient(4, k)
    if name == "phi^2":
        return Fraction(phi * phi)
    if name == "phi*J4":
        return Fraction(phi * j4)
    if name == "phi^2*J4":
        return Fraction(phi * phi * j4)
    if name == "J4^2":
        return Fraction(j4 * j4)
    raise KeyError(name)


def closed_value(ident: AlphaIdentity, k: int, variant: bool = False) -> Fraction:
    terms = ident.variant_rhs if variant and ident.variant_rhs is not None else ident.rhs
    total = sum((t.coef * Fraction(k) ** t.kpow * basis_value(t.basis, k) for t in terms), Fraction(0))
    c, kp = ident.scale
    return c * Fraction(k) ** kp * total


class AlphaContext:
    """Per-modulus numeric data: reduced residues, sin(pi m/k), and the
    direct weighted sums P_r(alpha) for r <= 4."""

    def __init__(self, k: int):
        self.k = k
        self.ms, self.P = power_phase_sums(k, 4)
        self.sin = np.array([sin_pi_frac(int(m), k) for m in self.ms])
        self._ratio_cache: dict[tuple[int, int], np.ndarray] = {}

    def ratio(self, t: int, d: int) -> np.ndarray:
        """alpha^t/(alpha-1)^d per residue, as e(m(2t-d)/2k)/((2i)^d sin^d)."""
        key = (t, d)
        if key not in self._ratio_cache:
            k = self.k
            phase = _phases((self.ms * (2 * t - d)) % (2 * k), 2 * k)
            self._ratio_cache[key] = phase / ((2j) ** d * self.sin**d)
        return self._ratio_cache[key]

    def ratio_poly(self, terms) -> np.ndarray:
        k = self.k
        return sum(float(r.coef * k**r.kpow) * self.ratio(r.t, r.d) for r in terms)

    def product(self, prod: Product) -> np.ndarray:
        pp, pq = self.P[prod.p], self.P[prod.q]
        minus = pp * np.conj(pq)
        plus = pp * pq
        return {"minus": minus, "plus": plus, "diff": minus - plus, "sum": minus + plus}[prod.mode]


def _fsum_complex(arr: np.ndarray) -> complex:
    return complex(math.fsum(arr.real), math.fsum(arr.imag))


def lhs_value(ident: AlphaIdentity, ctx: AlphaContext) -> complex | Fraction:
    if ident.group == "ratio":
        return _fsum_complex(ctx.ratio_poly([ident.lhs]))
    if ident.group == "expansion":
        return _fsum_complex(ctx.product(ident.lhs))
    if ident.group == "term":
        k = ctx.k
        return sum(float(c * k**kp) * _fsum_complex(ctx.product(prod)) for c, kp, prod in ident.lhs)
    if ident.group == "principal":
        k = ctx.k
        inner = Fraction(weighted_ramanujan_direct(4, k), k * k) - 2 * weighted_ramanujan_direct(2, k)
        return inner if ident.lhs == "inner" else inner * inner
    raise ValueError(ident.group)


def rhs_value(ident: AlphaIdentity, ctx: AlphaContext, variant: bool = False) -> complex | Fraction:
    if ident.group == "expansion":
        terms = ident.variant_rhs if variant and ident.variant_rhs is not None else ident.rhs
        return _fsum_complex(ctx.ratio_poly(terms))
    return closed_value(ident, ctx.k, variant)


@lru_cache(maxsize=4)
def _context(k: int) -> AlphaContext:
    return AlphaContext(k)


def check_identity(
    ident: AlphaIdentity, k: int, tol: Tolerance = DEFAULT_TOLERANCE, variant: bool = False
) -> VerificationRecord:
    ctx = _context(k)
    lhs = lhs_value(ident, ctx)
    rhs = rhs_value(ident, ctx, variant)
    return make_record(SUITE, ident.id, k, rhs, lhs, tol)


def alpha_identity_suite(
    k: int,
    tol: Tolerance = DEFAULT_TOLERANCE,
    groups: tuple[str, ...] | None = None,
    variant: bool = False,
) -> list[VerificationRecord]:
    """Check every alpha identity at modulus k (k >= 3).

    ``variant=True`` swaps in the near-miss right sides, which then fail.
    """
    if k < 3:
        raise ValueError(f"alpha identities need k >= 3, got {k}")
    return [
        check_identity(ident, k, tol, variant)
        for ident in ALL_IDENTITIES
        if groups is None or ident.group in groups
    ]


def cot_sum_record(k: int, tol: Tolerance = DEFAULT_TOLERANCE) -> VerificationRecord:
    """The companion fact sum_{(m,k)=1} cot(pi m/k) = 0."""
    from .trigsums import cot_odd_power_sum

    return make_record(SUITE, "cot:sum", k, 0.0, cot_odd_power_sum(1, k), tol)
