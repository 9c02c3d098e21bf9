from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lmeansq.multiplicative import jordan_totient
from lmeansq.trigsums import (
    cos_sin_power_sum,
    cot_odd_power_sum,
    csc_power_sum_closed,
    csc_power_sum_numeric,
    l4_principal_trig_numeric,
    l6_principal_trig_numeric,
    l_principal,
    principal_from_csc,
)


def test_csc_examples():
    assert csc_power_sum_numeric(1, 3) == pytest.approx(8 / 3, rel=1e-14)
    assert csc_power_sum_numeric(1, 4) == pytest.approx(4, rel=1e-14)
    assert csc_power_sum_numeric(2, 3) == pytest.approx(32 / 9, rel=1e-14)
    assert csc_power_sum_closed(1, 3) == Fraction(8, 3)
    assert csc_power_sum_closed(2, 3) == Fraction(32, 9)
    assert csc_power_sum_closed(4, 12) == 99328


def test_csc_rejects():
    for bad in (1, 2):
        with pytest.raises(ValueError):
            csc_power_sum_numeric(1, bad)
    with pytest.raises(ValueError):
        csc_power_sum_closed(5, 7)


@given(st.integers(3, 2000), st.integers(1, 4))
def test_csc_closed_vs_numeric(k, r):
    exact = float(csc_power_sum_closed(r, k))
    assert abs(csc_power_sum_numeric(r, k) - exact) < 1e-9 * exact


@given(st.integers(3, 2000), st.sampled_from([1, 3, 5, 7]))
def test_cot_vanish(k, p):
    assert abs(cot_odd_power_sum(p, k)) < 1e-9 * k


@given(st.integers(3, 2000))
def test_cos_odd_over_sin5_vanish(k):
    assert abs(cos_sin_power_sum(3, 5, k)) < 1e-9 * k
    assert abs(cos_sin_power_sum(1, 5, k)) < 1e-9 * k


def test_cot_rejects_even():
    with pytest.raises(ValueError):
        cot_odd_power_sum(2, 7)


def test_l_principal_examples():
    assert l_principal(4, 3) == Fraction(8, 9)
    assert l_principal(6, 5) == Fraction(15624, 945)
    assert l_principal(2, 1) == Fraction(1, 6)
    with pytest.raises(ValueError):
        l_principal(3, 5)


@given(st.integers(3, 3000))
def test_derivation_chain_exact(k):
    assert principal_from_csc(4, k) == Fraction(jordan_totient(4, k), 90)
    assert principal_from_csc(6, k) == Fraction(jordan_totient(6, k), 945)


@given(st.integers(3, 1000))
def test_principal_trig_expansions(k):
    assert l4_principal_trig_numeric(k) == pytest.approx(float(l_principal(4, k)), rel=1e-10)
    assert l6_principal_trig_numeric(k) == pytest.approx(float(l_principal(6, k)), rel=1e-10)
