"""Exact expansion coefficients and truncated-series evaluation.

The counting companion u admits an expansion in the fractional powers
(n/2)^(1/2), (n/2)^(1/4), (n/2)^(1/8), ... with exact rational
coefficients; the b-series is the same thing shifted by n, and the
a-series follows by summing (integrating) the u-series term by term,
which multiplies coefficient k by 2^(k+1) / (2^k + 1) and raises its
power to 1 + 1/2^k on top of the leading n^2/2.

Coefficients are kept as Fractions so truncations of any order agree
digit for digit across runs.  Evaluation is ordinary double precision:
the fractional powers come from repeated square roots, which keeps every
intermediate in range and loses well under 1e-12 relative accuracy for
arguments up to 1e18.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "MAX_ORDER",
    "a_coeff",
    "eval_a_series",
    "eval_b_series",
    "eval_u_series",
    "root_pow",
    "u_coeff",
]

# Beyond 64 halvings the exponent 1/2^k is below double-precision ulp, so
# every further term is numerically constant; orders stop here.
MAX_ORDER = 64


def _check_index(n: int) -> None:
    if n < 1:
        raise ValueError("sequence index must be >= 1")


def _check_position(k: int) -> None:
    if k < 1:
        raise ValueError("coefficient position must be >= 1")


def _check_order(order: int) -> None:
    if not 1 <= order <= MAX_ORDER:
        raise ValueError(f"series order must be in 1..{MAX_ORDER}")


@lru_cache(maxsize=None)
def u_coeff(k: int) -> Fraction:
    """Exact coefficient of (n/2)^(1/2^k) in the u-series.

    Signs alternate starting positive: 2, -4/3, 16/15, -128/135, ...
    Successive magnitudes shrink by 2^k / (2^k + 1) and settle toward a
    limit just below 0.84.
    """
    _check_position(k)
    denominator = math.prod(2**j + 1 for j in range(1, k))
    return Fraction((-1) ** (k + 1) * 2 ** (1 + (k - 1) * k // 2), denominator)


@lru_cache(maxsize=None)
def a_coeff(k: int) -> Fraction:
    """Exact coefficient of (n/2)^(1 + 1/2^k) in the a-series.

    Term-by-term summation of the u-series scales position k by
    2^(k+1) / (2^k + 1), giving 8/3, -32/15, 256/135, ...
    """
    _check_position(k)
    return u_coeff(k) * Fraction(2 ** (k + 1), 2**k + 1)


def root_pow(x: float, k: int) -> float:
    """x^(1/2^k) by k successive square roots (x >= 0, 1 <= k <= 64)."""
    if x < 0:
        raise ValueError("root_pow needs a non-negative argument")
    _check_order(k)
    for _ in range(k):
        x = math.sqrt(x)
    return x


@lru_cache(maxsize=None)
def _u_coeff_float(k: int) -> float:
    return float(u_coeff(k))


@lru_cache(maxsize=None)
def _a_coeff_float(k: int) -> float:
    return float(a_coeff(k))


def eval_u_series(n: int, order: int) -> float:
    """Truncated u-series at index n, positions 1..order summed in order."""
    _check_index(n)
    _check_order(order)
    root = n / 2
    total = 0.0
    for k in range(1, order + 1):
        root = math.sqrt(root)  # (n/2)^(1/2^k), same ops as root_pow
        total += _u_coeff_float(k) * root
    return total


def eval_b_series(n: int, order: int) -> float:
    """Truncated b-series at index n: exactly n plus the u-series value."""
    return n + eval_u_series(n, order)


def _a_tail(n: int, order: int) -> float:
    # Each power 1 + 1/2^k is split as (n/2) * (n/2)^(1/2^k) so no
    # intermediate ever exceeds n.
    half = n / 2
    root = half
    total = 0.0
    for k in range(1, order + 1):
        root = math.sqrt(root)
        total += _a_coeff_float(k) * root * half
    return total


def eval_a_series(n: int, order: int) -> float:
    """Truncated a-series at index n: n^2/2 plus the summed tail."""
    _check_index(n)
    _check_order(order)
    return n * n / 2 + _a_tail(n, order)
