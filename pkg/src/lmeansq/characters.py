"""Dirichlet characters mod k with exact root-of-unity values.

The unit group (Z/k)^* is split over prime powers by CRT: odd p^a is cyclic
on its smallest primitive root, 4 is cyclic of order 2 on -1, and 2^a with
a >= 3 is C2 x C_{2^(a-2)} on (-1, 5).  A character is an index vector
``c`` with ``chi(g_i) = exp(2 pi i c_i / ord_i)``.

Values are exponents modulo the group exponent ``e`` and only become
floating point inside numeric sums.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator

from .multiplicative import euler_phi, factorize


@dataclass(frozen=True)
class RootOfUnity:
    """``exp(2 pi i a / e)`` kept in lowest terms with ``0 <= a < e``.

    ``e == 0`` is reserved for the zero value (``chi(m)`` with gcd(m, k) > 1).
    """

    a: int
    e: int

    def __post_init__(self):
        if self.e < 0:
            raise ValueError("order must be nonnegative")
        if self.e == 0:
            if self.a != 0:
                raise ValueError("zero value must be RootOfUnity(0, 0)")
            return
        t = Fraction(self.a, self.e) % 1
        object.__setattr__(self, "a", t.numerator)
        object.__setattr__(self, "e", t.denominator)

    @property
    def is_zero(self) -> bool:
        return self.e == 0

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        if self.is_zero or other.is_zero:
            return ZERO
        t = Fraction(self.a, self.e) + Fraction(other.a, other.e)
        return RootOfUnity(t.numerator, t.denominator)

    def conjugate(self) -> "RootOfUnity":
        if self.is_zero:
            return ZERO
        return RootOfUnity(-self.a, self.e)

    def __complex__(self) -> complex:
        if self.is_zero:
            return 0j
        return turn(self.a, self.e)

    def __str__(self) -> str:
        return "0" if self.is_zero else f"{self.a}/{self.e}"


ZERO = RootOfUnity(0, 0)
ONE = RootOfUnity(0, 1)


def turn(num: int, den: int) -> complex:
    """exp(2 pi i num/den), reducing the fraction before any trig call."""
    r = num % den
    if 2 * r > den:
        r -= den
    if r == 0:
        return 1 + 0j
    if 2 * r == den:
        return -1 + 0j
    if 4 * r == den:
        return 1j
    if 4 * r == -den:
        return -1j
    return cmath.exp(2j * math.pi * r / den)


@dataclass(frozen=True, eq=False)
class UnitGroupStructure:
    k: int
    components: tuple[tuple[int, int], ...]  # (generator mod k, order)
    exponent: int
    dlog: dict[int, tuple[int, ...]] = field(repr=False)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(o for _, o in self.components)

    @property
    def order(self) -> int:
        return math.prod(self.orders)


def _multiplicative_order(g: int, n: int) -> int:
    x, o = g % n, 1
    while x != 1:
        x = x * g % n
        o += 1
    return o


def smallest_primitive_root(n: int) -> int:
    """Smallest generator of (Z/n)^* for n an odd prime power (or 2, 4)."""
    if n in (1, 2):
        return 1
    phi = euler_phi(n)
    qs = factorize(phi).primes
    for g in range(2, n):
        if math.gcd(g, n) == 1 and all(pow(g, phi // q, n) != 1 for q in qs):
            return g
    raise ValueError(f"(Z/{n})^* is not cyclic")


def _crt_lift(residue: int, modulus: int, k: int) -> int:
    """The x mod k with x = residue mod ``modulus`` and x = 1 mod k/modulus."""
    other = k // modulus
    if other == 1:
        return residue % k
    # x = 1 + other * t, need 1 + other*t = residue (mod modulus)
    t = (residue - 1) * pow(other, -1, modulus) % modulus
    return (1 + other * t) % k


@lru_cache(maxsize=4096)
def unit_group(k: int) -> UnitGroupStructure:
    if k < 1:
        raise ValueError(f"modulus must be >= 1, got {k}")
    comps: list[tuple[int, int]] = []
    for p, a in factorize(k):
        q = p**a
        if p == 2:
            if a == 2:
                comps.append((_crt_lift(-1, q, k), 2))
            elif a >= 3:
                comps.append((_crt_lift(-1, q, k), 2))
                comps.append((_crt_lift(5, q, k), 2 ** (a - 2)))
        else:
            g = smallest_primitive_root(q)
            comps.append((_crt_lift(g, q, k), (p - 1) * p ** (a - 1)))
    exponent = math.lcm(*(o for _, o in comps)) if comps else 1
    dlog: dict[int, tuple[int, ...]] = {}
    for vec in itertools.product(*(range(o) for _, o in comps)):
        x = 1
        for (g, _), c in zip(comps, vec):
            x = x * pow(g, c, k) % k
        dlog[x % k] = vec
    if k == 1:
        dlog = {0: ()}
    assert len(dlog) == euler_phi(k)
    return UnitGroupStructure(k, tuple(comps), exponent, dlog)


@dataclass(frozen=True)
class DirichletCharacter:
    k: int
    index: tuple[int, ...]

    @property
    def group(self) -> UnitGroupStructure:
        return unit_group(self.k)

    @property
    def exponent(self) -> int:
        return self.group.exponent

    @cached_property
    def exponents(self) -> tuple[int | None, ...]:
        """Value exponents over ``self.exponent`` for m = 0..k-1 (None = zero)."""
        grp = self.group
        e = grp.exponent
        weights = [c * (e // o) for c, o in zip(self.index, grp.orders)]
        out: list[int | None] = [None] * self.k
        for m, vec in grp.dlog.items():
            out[m] = sum(w * v for w, v in zip(weights, vec)) % e
        return tuple(out)

    def eval(self, m: int) -> RootOfUnity:
        a = self.exponents[m % self.k]
        return ZERO if a is None else RootOfUnity(a, self.exponent)

    __call__ = eval

    def value(self, m: int) -> complex:
        a = self.exponents[m % self.k]
        return 0j if a is None else turn(a, self.exponent)

    @property
    def is_principal(self) -> bool:
        return not any(self.index)

    @property
    def is_odd(self) -> bool:
        return parity(self) == "odd"

    @property
    def order(self) -> int:
        return math.lcm(1, *(o // math.gcd(c, o) for c, o in zip(self.index, self.group.orders)))

    def conjugate(self) -> "DirichletCharacter":
        return conjugate(self)

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        if other.k != self.k:
            raise ValueError("characters have different moduli")
        orders = self.group.orders
        return DirichletCharacter(
            self.k, tuple((a + b) % o for a, b, o in zip(self.index, other.index, orders))
        )

    def label(self) -> str:
        return ".".join(map(str, self.index)) or "-"


def characters(k: int) -> list[DirichletCharacter]:
    """All phi(k) characters, index vectors in lexicographic order."""
    orders = unit_group(k).orders
    return [DirichletCharacter(k, vec) for vec in itertools.product(*(range(o) for o in orders))]


def characters_of_parity(k: int, which: str) -> Iterator[DirichletCharacter]:
    return (chi for chi in characters(k) if parity(chi) == which)


def principal_character(k: int) -> DirichletCharacter:
    return DirichletCharacter(k, (0,) * len(unit_group(k).components))


def parity(chi: DirichletCharacter) -> str:
    """'odd' iff chi(-1) = -1."""
    v = chi.eval(chi.k - 1)
    return "odd" if (v.a, v.e) == (1, 2) else "even"


def conjugate(chi: DirichletCharacter) -> DirichletCharacter:
    orders = chi.group.orders
    return DirichletCharacter(chi.k, tuple((-c) % o for c, o in zip(chi.index, orders)))


# -- exact sums of roots of unity -------------------------------------------


@lru_cache(maxsize=256)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        q[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    assert not any(num), "non-exact polynomial division"
    return q


def root_sum_is(counts: list[int], target: list[int]) -> bool:
    """Decide exactly whether sum_j counts[j] z^j == sum_j target[j] z^j,
    z a primitive e-th root of unity, e = len(counts).

    Equal iff the difference polynomial is divisible by Phi_e.
    """
    e = len(counts)
    diff = [a - b for a, b in zip(counts, target)]
    phi_e = cyclotomic_polynomial(e)
    deg = len(phi_e) - 1
    for i in range(e - 1, deg - 1, -1):
        c = diff[i]
        if c:
            for j, pj in enumerate(phi_e):
                diff[i - deg + j] -= c * pj
    return not any(diff[:deg])
