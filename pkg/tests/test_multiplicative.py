from math import gcd, prod

import pytest
from hypothesis import given, strategies as st

from lmeansq.multiplicative import (
    divisors,
    euler_phi,
    factorize,
    jordan_totient,
    mobius,
    phi4_closed,
    power_coprime_sum_direct,
    radical_product,
)


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert tuple(factorize(12)) == ((2, 2), (3, 1))
    assert tuple(factorize(9973)) == ((9973, 1),)
    with pytest.raises(ValueError):
        factorize(0)


@given(st.integers(min_value=1, max_value=10**6))
def test_factorization_invariants(n):
    f = factorize(n)
    ps = [p for p, _ in f]
    assert ps == sorted(set(ps))
    assert all(a >= 1 for _, a in f)
    assert prod(p**a for p, a in f) == n


def test_totients():
    assert [jordan_totient(2, n) for n in range(1, 6)] == [1, 3, 8, 12, 24]
    assert euler_phi(1) == 1 and euler_phi(12) == 4
    assert jordan_totient(6, 3) == 728
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


@given(st.integers(1, 100), st.integers(1, 100))
def test_multiplicativity(m, n):
    if gcd(m, n) != 1:
        return
    for s in (1, 2, 4, 6, 8):
        assert jordan_totient(s, m * n) == jordan_totient(s, m) * jordan_totient(s, n)
    assert mobius(m * n) == mobius(m) * mobius(n)


@given(st.integers(1, 3000))
def test_divisor_identities(n):
    ds = divisors(n)
    assert ds == sorted(ds) and all(n % d == 0 for d in ds)
    assert sum(d * mobius(n // d) for d in ds) == euler_phi(n)
    assert sum(d**3 * mobius(d) for d in ds) == radical_product(n, 3)
    # J_s(n) = sum_{d|n} d^s mu(n/d)
    assert sum(d**2 * mobius(n // d) for d in ds) == jordan_totient(2, n)


def test_phi4_examples():
    assert phi4_closed(1) == 1
    assert phi4_closed(5) == 354
    assert phi4_closed(6) == 626
    assert power_coprime_sum_direct(4, 5) == 354
    assert power_coprime_sum_direct(0, 12) == 4
    assert power_coprime_sum_direct(1, 1) == 1


@given(st.integers(1, 5000))
def test_phi4_matches_direct(n):
    assert phi4_closed(n) == power_coprime_sum_direct(4, n)


def test_direct_sum_large_n_exact():
    # exceeds the int64 fast path's single-sum range
    n = 30011
    assert power_coprime_sum_direct(4, n) == sum(j**4 for j in range(1, n + 1) if gcd(j, n) == 1)
    n = 10**6 + 3
    assert power_coprime_sum_direct(4, n) == phi4_closed(n)
