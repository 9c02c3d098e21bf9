"""Verification records and the tolerance model shared by every suite."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

from .exact_arith import format_rational

RECORD_FIELDS = (
    "suite",
    "identity",
    "k",
    "closed_exact",
    "closed_value",
    "oracle_value",
    "abs_err",
    "rel_err",
    "passed",
)


@dataclass(frozen=True)
class Tolerance:
    """pass iff |closed - oracle| < atol + rtol |closed|.

    ``atol`` of None means the k-scaled default ``atol_per_k * k``.
    """

    rtol: float = 1e-9
    atol: float | None = None
    atol_per_k: float = 1e-8

    def atol_for(self, k: int) -> float:
        return self.atol if self.atol is not None else self.atol_per_k * k

    def accepts(self, abs_err: float, closed: float, k: int) -> bool:
        return abs_err < self.atol_for(k) + self.rtol * abs(closed)


DEFAULT_TOLERANCE = Tolerance()


@dataclass(frozen=True)
class VerificationRecord:
    suite: str
    identity: str
    k: int
    closed_exact: str
    closed_value: float
    oracle_value: float
    abs_err: float
    rel_err: float
    passed: bool

    def as_dict(self) -> dict:
        return asdict(self)

    @property
    def sort_key(self):
        return (self.suite, self.k, self.identity)


def make_record(
    suite: str,
    identity: str,
    k: int,
    closed: float | complex | Fraction | int,
    oracle: float | complex | int,
    tol: Tolerance = DEFAULT_TOLERANCE,
    exact: Fraction | int | None = None,
) -> VerificationRecord:
    """Build a record; complex values are compared by modulus of the difference
    and reported by their real parts."""
    if isinstance(closed, (Fraction, int)) and exact is None:
        exact = closed
    if isinstance(closed, Fraction):
        closed_c = complex(float(closed))
    else:
        closed_c = complex(closed)
    exact_oracle = isinstance(oracle, (int, Fraction)) and not isinstance(oracle, bool)
    oracle_c = complex(float(oracle)) if isinstance(oracle, Fraction) else complex(oracle)
    if exact is not None and exact_oracle:
        # exact against exact: no floating error on either side
        diff = Fraction(exact) - oracle
        abs_err = abs(float(diff)) if diff else 0.0
    else:
        abs_err = abs(closed_c - oracle_c)
    mag = abs(closed_c)
    rel_err = abs_err / mag if mag > 0 else (0.0 if abs_err == 0 else math.inf)
    passed = tol.accepts(abs_err, mag, k)
    if exact is not None and exact_oracle:
        passed = Fraction(exact) == oracle
    return VerificationRecord(
        suite=suite,
        identity=identity,
        k=k,
        closed_exact=format_rational(exact) if exact is not None else "",
        closed_value=closed_c.real,
        oracle_value=oracle_c.real,
        abs_err=abs_err,
        rel_err=rel_err,
        passed=bool(passed),
    )
