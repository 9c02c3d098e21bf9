"""Per-modulus verification suites.  Each runner maps (k, tol) to records."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

import numpy as np

from . import alpha, lfunc
from .characters import characters, characters_of_parity, principal_character, root_sum_is
from .expsums import (
    bernoulli_gauss_combination,
    gauss_sum,
    ramanujan_sum,
    ramanujan_sum_kluyver,
    ramanujan_sum_numeric,
    s_weighted,
    weighted_ramanujan,
    weighted_ramanujan_direct,
)
from .multiplicative import (
    divisors,
    euler_phi,
    mobius,
    phi4_closed,
    power_coprime_sum_direct,
    radical_product,
)
from .records import DEFAULT_TOLERANCE, Tolerance, VerificationRecord, make_record
from .trigsums import (
    cos_sin_power_sum,
    cot_odd_power_sum,
    csc_power_sum_closed,
    csc_power_sum_numeric,
    l4_principal_trig_numeric,
    l6_principal_trig_numeric,
    l_principal,
    principal_from_csc,
)

Runner = Callable[[int, Tolerance], list[VerificationRecord]]

# numeric Ramanujan and chi_0 Gauss checks are O(k^2); run them up to here
NUMERIC_RAMANUJAN_MAX_K = 200


def _mean_square(r: int, k: int, tol: Tolerance) -> list[VerificationRecord]:
    suite = f"theorem{r}"
    exact = lfunc.table_rational(r, k)
    closed = lfunc.mean_square_closed(r, k)
    out = [
        make_record(suite, f"meansq{r}:{oracle}", k, closed, lfunc.mean_square_brute(r, k, oracle), tol, exact)
        for oracle in ("finite", "series")
    ]
    if r == 3:
        out.append(make_record(suite, "meansq3:positive", k, 1, int(exact > 0), tol))
    return out


def run_theorem3(k: int, tol: Tolerance = DEFAULT_TOLERANCE) -> list[VerificationRecord]:
    return _mean_square(3, k, tol)


def run_theorem4(k: int, tol: Tolerance = DEFAULT_TOLERANCE) -> list[VerificationRecord]:
    return _mean_square(4, k, tol)


def run_trig(k: int, tol: Tolerance = DEFAULT_TOLERANCE) -> list[VerificationRecord]:
    rec = lambda ident, closed, oracle: make_record("trig", ident, k, closed, oracle, tol)  # noqa: E731
    out = [rec(f"csc{2 * r}", csc_power_sum_closed(r, k), csc_power_sum_numeric(r, k)) for r in range(1, 5)]
    out += [rec(f"cot{p}", 0.0, cot_odd_power_sum(p, k)) for p in (1, 3, 5, 7)]
    out.append(rec("cos3/sin5", 0.0, cos_sin_power_sum(3, 5, k)))
    out.append(rec("cos/sin5", 0.0, cos_sin_power_sum(1, 5, k)))
    for s, numeric in ((4, l4_principal_trig_numeric), (6, l6_principal_trig_numeric)):
        out.append(rec(f"chi0-L{s}:csc-chain", l_principal(s, k), principal_from_csc(s, k)))
        out.append(rec(f"chi0-L{s}:trig", l_principal(s, k), numeric(k)))
    return out


def run_alpha(k: int, tol: Tolerance = DEFAULT_TOLERANCE) -> list[VerificationRecord]:
    return alpha.alpha_identity_suite(k, tol) + [alpha.cot_sum_record(k, tol)]


def _exponent_counts(exps, e: int) -> list[int]:
    counts = [0] * e
    for a in exps:
        counts[a % e] += 1
    return counts


def run_charproperties(k: int, tol: Tolerance = DEFAULT_TOLERANCE) -> list[VerificationRecord]:
    rec = lambda ident, closed, oracle: make_record("charproperties", ident, k, closed, oracle, tol)  # noqa: E731
    chars = characters(k)
    phi = euler_phi(k)
    units = [m for m in range(1, k + 1) if chars[0].exponents[m % k] is not None]
    e = chars[0].exponent
    odd = [c for c in chars if c.is_odd]
    out = [
        rec("count:total", phi, len(chars)),
        rec("count:odd", Fraction(phi, 2), len(odd)),
        rec("count:even", Fraction(phi, 2), len(chars) - len(odd)),
        rec("chi(1)=1", 0, sum(c.exponents[1 % k] != 0 for c in chars)),
    ]

    bad_mult = 0
    for c in chars:
        ex = c.exponents
        bad_mult += sum((ex[m] + ex[n] - ex[m * n % k]) % e != 0 for m in units for n in units)
    out.append(rec("multiplicative", 0, bad_mult))

    # sum_m chi(m) conj(psi(m)) = phi [chi = psi], decided exactly
    bad_orth = 0
    for i, c in enumerate(chars):
        for j, d in enumerate(chars):
            counts = _exponent_counts((c.exponents[m % k] - d.exponents[m % k] for m in units), e)
            target = [phi if i == j else 0] + [0] * (e - 1)
            bad_orth += not root_sum_is(counts, target)
    out.append(rec("orthogonality:exact", 0, bad_orth))
    V = np.array([[c.value(m) for m in units] for c in chars])
    gram = V @ V.conj().T
    out.append(rec("orthogonality:numeric", 0.0, float(np.abs(gram - phi * np.eye(len(chars))).max())))

    # sum over one parity of chi(u): +-phi/2 at u = +-1, else 0
    even = [c for c in chars if not c.is_odd]
    half = phi // 2
    for name, group, minus in (("odd", odd, -half), ("even", even, half)):
        bad = 0
        for u in units:
            counts = _exponent_counts((c.exponents[u % k] for c in group), e)
            want = half if u % k == 1 % k else (minus if u % k == k - 1 else 0)
            if want >= 0:
                target = [want] + [0] * (e - 1)
            else:
                # -phi/2 = (phi/2) exp(i pi); e is even whenever an odd character exists
                target = [0] * e
                target[e // 2] = -want
            bad += not root_sum_is(counts, target)
        out.append(rec(f"orthogonality:{name}", 0, bad))
    return out


def run_phi4(k: int, tol: Tolerance = DEFAULT_TOLERANCE) -> list[VerificationRecord]:
    n = k
    rec = lambda ident, closed, oracle: make_record("phi4", ident, n, closed, oracle, tol)  # noqa: E731
    return [
        rec("phi4", phi4_closed(n), power_coprime_sum_direct(4, n)),
        rec(
            "phi4:divisor-sum",
            Fraction(sum(j**4 for j in range(1, n + 1)), n**4),
            sum((Fraction(phi4_closed(d), d**4) for d in divisors(n)), Fraction(0)),
        ),
        rec("mobius:d-mu", euler_phi(n), sum(d * mobius(n // d) for d in divisors(n))),
        rec("mobius:d3-mu", radical_product(n, 3), sum(d**3 * mobius(d) for d in divisors(n))),
    ]


def run_ramanujan(k: int, tol: Tolerance = DEFAULT_TOLERANCE) -> list[VerificationRecord]:
    rec = lambda ident, closed, oracle: make_record("ramanujan", ident, k, closed, oracle, tol)  # noqa: E731
    out = [
        rec("kluyver", 0, sum(ramanujan_sum(k, z) != ramanujan_sum_kluyver(k, z) for z in range(1, k + 1))),
        rec("weighted2", weighted_ramanujan(2, k), weighted_ramanujan_direct(2, k)),
        rec("weighted4", weighted_ramanujan(4, k), weighted_ramanujan_direct(4, k)),
    ]
    if k <= NUMERIC_RAMANUJAN_MAX_K:
        chi0 = principal_character(k)
        err_num = max(abs(ramanujan_sum_numeric(k, z) - ramanujan_sum(k, z)) for z in range(1, k + 1))
        err_g = max(abs(gauss_sum(z, chi0) - ramanujan_sum(k, z)) for z in range(1, k + 1))
        out.append(rec("numeric", 0.0, err_num))
        out.append(rec("gauss-chi0", 0.0, err_g))
    return out


def run_finiteform(k: int, tol: Tolerance = DEFAULT_TOLERANCE) -> list[VerificationRecord]:
    rec = lambda ident, closed, oracle: make_record("finiteform", ident, k, closed, oracle, tol)  # noqa: E731
    out = []
    for chi in characters(k):
        if chi.is_principal:
            continue
        lab = chi.label()
        odd = chi.is_odd
        r0 = 3 if odd else 4
        series = abs(lfunc.l_series(r0, chi))
        closed = lfunc.l3_closed(chi) if odd else lfunc.l4_closed(chi)
        out.append(rec(f"l{r0}-closed:{lab}", abs(closed), series))
        for r in (r0, r0 + 2):
            out.append(rec(f"general{r}:{lab}", abs(lfunc.general_finite_form(r, chi)), abs(lfunc.l_series(r, chi))))
        if odd:
            out.append(rec(f"l3-bernoulli:{lab}", lfunc.l3_bernoulli_form(chi), closed))
            out.append(rec(f"S2=S1:{lab}", s_weighted(1, chi), s_weighted(2, chi)))
        else:
            out.append(rec(f"S3=1.5*S2:{lab}", 1.5 * s_weighted(2, chi), s_weighted(3, chi)))
        out.append(rec(f"S0=0:{lab}", 0.0, s_weighted(0, chi)))
        for r in (1, 2, 3, 4):
            if (r % 2 == 1) != odd:
                out.append(rec(f"vanish{r}:{lab}", 0.0, bernoulli_gauss_combination(r, chi)))
    return out


SUITES: dict[str, Runner] = {
    "theorem3": run_theorem3,
    "theorem4": run_theorem4,
    "trig": run_trig,
    "alpha": run_alpha,
    "charproperties": run_charproperties,
    "phi4": run_phi4,
    "ramanujan": run_ramanujan,
    "finiteform": run_finiteform,
}


def run_suite(name: str, k: int, tol: Tolerance = DEFAULT_TOLERANCE) -> list[VerificationRecord]:
    try:
        runner = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    if k < 3:
        raise ValueError(f"suites need k >= 3, got {k}")
    return runner(k, tol)
