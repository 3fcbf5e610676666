"""Exact integer and rational primitives shared by every module.

All probabilities, polynomial values, and character ratios in this package
are ``fractions.Fraction`` values (or plain ints); floating point enters only
when a final bound is assembled from square and fourth roots.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


def binomial(m: int, r: int) -> int:
    """Binomial coefficient with the convention C(m, r) = 0 for r < 0 or r > m.

    The out-of-range zeros matter: several summation identities here rely on
    silently vanishing terms instead of explicit range bookkeeping.
    """
    if r < 0 or r > m:
        return 0
    return math.comb(m, r)


def falling_factorial(n: int, k: int) -> int:
    """Product n(n-1)...(n-k+1); equals 1 when k = 0.  Requires 0 <= k <= n."""
    if k < 0 or k > n:
        raise ValueError(f"falling_factorial needs 0 <= k <= n, got n={n}, k={k}")
    return math.perm(n, k)


def to_real(x: Fraction | int) -> float:
    """Nearest double to an exact rational."""
    return float(x)
