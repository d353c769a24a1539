"""Palette-budget arithmetic for r-regular linear hypergraphs of size n.

The central quantity is the smallest palette size m for which the
greedy-with-recolor procedure provably cannot abort:

    m * (m - A) > (r - 1) * A * n      with A = floor((n-1)/(r-1)).

Everything that decides the budget runs in exact integer arithmetic
(math.isqrt bracketing); floats appear only in reported thresholds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParameters


def _check_domain(n: int, r: int) -> None:
    if n < 1:
        raise InvalidParameters(f"n must be >= 1, got {n}")
    if r < 3:
        raise InvalidParameters(f"r must be >= 3, got {r}")


def coefficient_A(n: int, r: int) -> int:
    """floor((n-1)/(r-1)): the largest rank a linear r-regular instance allows."""
    _check_domain(n, r)
    return (n - 1) // (r - 1)


def color_budget(n: int, r: int) -> int:
    """Smallest positive m with m*(m - A) > (r-1)*A*n, in exact arithmetic.

    Closed-form isqrt bracketing lands on the candidate; the verification
    loops keep the result independent of any rounding subtlety.
    """
    a = coefficient_A(n, r)
    rhs = (r - 1) * a * n
    s = math.isqrt(a * a + 4 * rhs)
    m = (a + s) // 2 + 1
    while m > 1 and (m - 1) * (m - 1 - a) > rhs:
        m -= 1
    while m * (m - a) <= rhs:
        m += 1
    return m


def beta_threshold(n: int, r: int) -> tuple[float, float]:
    """Both abort-threshold roots (floored A variant, continuous A variant).

    The floored variant uses A = floor((n-1)/(r-1)); the continuous variant
    substitutes (n-1)/(r-1) exactly, which turns the discriminant into
    A'^2 + 4n(n-1).
    """
    a = coefficient_A(n, r)
    floored = (a + math.sqrt(a * a + 4 * (r - 1) * a * n)) / (2 * n)
    a_cont = (n - 1) / (r - 1)
    continuous = (a_cont + math.sqrt(a_cont * a_cont + 4 * n * (n - 1))) / (2 * n)
    return floored, continuous


def beta_envelope(r: int) -> float:
    """Upper envelope of the threshold over all n: (B + sqrt(B^2+4))/2, B = 1/(r-1)."""
    if r < 3:
        raise InvalidParameters(f"r must be >= 3, got {r}")
    b = 1.0 / (r - 1)
    return (b + math.sqrt(b * b + 4.0)) / 2.0


def case_limit(r: int) -> float:
    """Published ratio cap for the budget: 1.281 at r = 3, 1.181 for r >= 4."""
    if r < 3:
        raise InvalidParameters(f"r must be >= 3, got {r}")
    return 1.281 if r == 3 else 1.181


@dataclass(frozen=True)
class BoundReport:
    """All budget quantities for one (n, r) pair."""

    n: int
    r: int
    a: int
    b: Fraction
    beta_floored: float
    beta_continuous: float
    budget_m: int
    case_limit: float


def bound_report(n: int, r: int) -> BoundReport:
    floored, continuous = beta_threshold(n, r)
    return BoundReport(
        n=n,
        r=r,
        a=coefficient_A(n, r),
        b=Fraction(1, r - 1),
        beta_floored=floored,
        beta_continuous=continuous,
        budget_m=color_budget(n, r),
        case_limit=case_limit(r),
    )
