"""Exact rationals and Bernoulli numbers.

Rationals are :class:`fractions.Fraction`, which already keeps lowest terms
with a positive denominator, so equality is structural.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

BigRational = Fraction

_BERNOULLI_HEADROOM = 32
_bernoulli_table: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def _extend_bernoulli(q: int) -> None:
    with _bernoulli_lock:
        table = _bernoulli_table
        for m in range(len(table), q + 1):
            # sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m
            acc = sum((math.comb(m + 1, j) * table[j] for j in range(m)), Fraction(0))
            table.append(-acc / (m + 1))


def bernoulli(q: int) -> Fraction:
    """Return the Bernoulli number B_q with the convention B_1 = -1/2."""
    if q < 0:
        raise ValueError(f"bernoulli index must be nonnegative, got {q}")
    if q >= len(_bernoulli_table):
        _extend_bernoulli(max(q, _BERNOULLI_HEADROOM))
    return _bernoulli_table[q]


def rational_to_float(x: Fraction) -> float:
    """Nearest double to ``x``; magnitudes beyond double range give +-inf."""
    try:
        return float(x)
    except OverflowError:
        return math.inf if x > 0 else -math.inf


def format_rational(x: Fraction | int) -> str:
    """Render as ``"p/q"`` always, including integers (``"5/1"``)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
