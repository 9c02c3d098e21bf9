"""Acceptance criteria, one pass/fail line each.

Run with pytest (lines appear in the terminal summary) or directly:
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction

import pytest

from lmeansq import alpha, lfunc, suites
from lmeansq.characters import characters
from lmeansq.expsums import weighted_ramanujan, weighted_ramanujan_direct
from lmeansq.multiplicative import divisors, euler_phi, phi4_closed, power_coprime_sum_direct
from lmeansq.trigsums import csc_power_sum_closed, csc_power_sum_numeric

LINES: list[str] = []


def _line(tag: str, ok: bool, text: str) -> bool:
    LINES.append(f"[{'PASS' if ok else 'FAIL'}] {tag}: {text}")
    return ok


def _mean_square_criterion(r: int, tag: str) -> bool:
    t0 = time.perf_counter()
    worst, bad = 0.0, []
    for k in range(3, 61):
        res = lfunc.check_mean_square(r, k, oracle="series")
        worst = max(worst, res.rel_err)
        if not res.rel_err < 1e-8:
            bad.append(k)
    dt = time.perf_counter() - t0
    return _line(
        tag,
        not bad,
        f"mean square r={r}, series oracle vs closed form, k=3..60, max rel err {worst:.2e} "
        f"(bound 1e-8), {dt:.1f}s" + (f", failing k {bad}" if bad else ""),
    )


def test_criterion_1_odd_mean_square():
    assert _mean_square_criterion(3, "1")


def test_criterion_2_even_mean_square():
    assert _mean_square_criterion(4, "2")


def _spot(tag, name, value, stated):
    # the stated six-digit value, read as |value - stated| <= 5e-7
    ok = abs(value - stated) <= 5e-7
    return _line(tag, ok, f"{name} = {value:.7f}; stated spot value {stated}")


@pytest.mark.xfail(strict=True, reason="stated spot value disagrees with the exact formula in its 6th digit")
def test_criterion_1_spot_value():
    assert _spot("1-spot", "mean square r=3, k=3", lfunc.mean_square_brute(3, 3, "series"), 0.781502)


@pytest.mark.xfail(strict=True, reason="stated spot value disagrees with the exact formula in its 6th digit")
def test_criterion_2_spot_value():
    assert _spot("2-spot", "mean square r=4, k=3", lfunc.mean_square_brute(4, 3, "series"), 1.142675)


def test_spot_values_true_digits():
    # what both oracles and the closed forms give
    assert lfunc.mean_square_brute(3, 3, "series") == pytest.approx(0.7814981, abs=1e-7)
    assert lfunc.mean_square_brute(4, 3, "series") == pytest.approx(1.1426781, abs=1e-7)
    assert lfunc.mean_square_closed(3, 3) == pytest.approx(math.pi**6 * Fraction(160, 3) / 65610, rel=1e-15)


def test_criterion_3_cosecant():
    worst, bad = 0.0, []
    for k in range(3, 2001):
        for r in range(1, 5):
            exact = float(csc_power_sum_closed(r, k))
            rel = abs(csc_power_sum_numeric(r, k) - exact) / exact
            worst = max(worst, rel)
            if not rel < 1e-9:
                bad.append((r, k))
    assert _line("3", not bad, f"csc^(2r) sums, r=1..4, k=3..2000, max rel err {worst:.2e} (bound 1e-9)")


def test_criterion_4_alpha_identities():
    n = 0
    bad = []
    worst = 0.0
    for k in range(3, 501):
        for rec in alpha.alpha_identity_suite(k):
            n += 1
            if abs(rec.closed_value) > 1e-8 * k:
                worst = max(worst, rec.rel_err)
            if not rec.passed:
                bad.append((k, rec.identity))
    assert _line(
        "4",
        not bad,
        f"{len(alpha.ALL_IDENTITIES)} alpha identities (corrected coefficients), k=3..500, "
        f"{n - len(bad)}/{n} records pass rtol 1e-9 atol 1e-8*k, max rel err {worst:.2e} "
        "where |closed| > atol",
    )


@pytest.mark.xfail(strict=True, reason="the seven near-miss variants are false")
def test_criterion_4_variants():
    failing = set()
    n = bad = 0
    for k in range(3, 501):
        for rec in alpha.alpha_identity_suite(k, variant=True):
            n += 1
            if not rec.passed:
                bad += 1
                failing.add(rec.identity)
    assert _line(
        "4-variants",
        bad == 0,
        f"same suite with the near-miss variant coefficients: {n - bad}/{n} pass; failing {sorted(failing)}",
    )


def test_criterion_5_exact_integers():
    phi4_bad = [n for n in range(1, 10001) if phi4_closed(n) != power_coprime_sum_direct(4, n)]
    wr_bad = [
        (e, k) for k in range(3, 2001) for e in (2, 4) if weighted_ramanujan(e, k) != weighted_ramanujan_direct(e, k)
    ]
    div_bad = [
        n
        for n in range(1, 501)
        if sum((Fraction(phi4_closed(d), d**4) for d in divisors(n)), Fraction(0))
        != Fraction(sum(j**4 for j in range(1, n + 1)), n**4)
    ]
    ok = not (phi4_bad or wr_bad or div_bad)
    assert _line(
        "5",
        ok,
        f"phi4 closed = direct for n<=10^4 ({len(phi4_bad)} mismatches); weighted Ramanujan e=2,4 "
        f"for k<=2000 ({len(wr_bad)}); divisor-sum identity n<=500 ({len(div_bad)}); all exact",
    )


def test_criterion_6_characters():
    count_bad = []
    for k in range(1, 201):
        chars = characters(k)
        odd = sum(c.is_odd for c in chars)
        if len(chars) != euler_phi(k) or (k >= 3 and 2 * odd != len(chars)):
            count_bad.append(k)
    orth_bad = []
    for k in range(3, 41):
        for rec in suites.run_charproperties(k):
            if not rec.passed:
                orth_bad.append((k, rec.identity))
    assert _line(
        "6",
        not (count_bad or orth_bad),
        f"counts phi(k) and phi(k)/2 per parity for k<=200 ({len(count_bad)} bad); full and "
        f"parity-restricted orthogonality exact for k<=40 ({len(orth_bad)} bad)",
    )


def test_criterion_7_finite_forms():
    worst, bad, vanish_bad, n = 0.0, [], [], 0
    for k in range(3, 61):
        for rec in suites.run_finiteform(k):
            ident = rec.identity.split(":")[0]
            if ident.startswith(("l3-closed", "l4-closed", "general")):
                n += 1
                worst = max(worst, rec.rel_err)
                if not rec.rel_err < 1e-8:
                    bad.append((k, rec.identity))
            elif ident.startswith("vanish") and k <= 40 and not rec.passed:
                vanish_bad.append((k, rec.identity))
    assert _line(
        "7",
        not (bad or vanish_bad),
        f"|l3|, |l4|, |general r=3..6| vs |series|, k<=60: {n} comparisons, max rel err {worst:.2e} "
        f"(bound 1e-8); opposite-parity vanishing r<=4, k<=40: {len(vanish_bad)} failures",
    )


def test_criterion_8_summary():
    # the eighth item claims every criterion above is reproducible; it holds iff they do
    ok = all(line.startswith("[PASS]") for line in LINES if line.split("]")[1].strip()[0] in "1234567"
             and "-" not in line.split(":")[0])
    assert _line("8", ok, "criteria 1-7 all reproduced (spot values and variant lines reported separately)")


if __name__ == "__main__":
    tests = [
        test_criterion_1_odd_mean_square,
        test_criterion_1_spot_value,
        test_criterion_2_even_mean_square,
        test_criterion_2_spot_value,
        test_criterion_3_cosecant,
        test_criterion_4_alpha_identities,
        test_criterion_4_variants,
        test_criterion_5_exact_integers,
        test_criterion_6_characters,
        test_criterion_7_finite_forms,
        test_criterion_8_summary,
    ]
    for t in tests:
        try:
            t()
        except AssertionError:
            pass
    print("\n".join(LINES))
