"""Shared assembly of the normal-approximation error bound.

For an exchangeable pair (W, W') with E[W'|W] = (1-a)W, 0 < a < 1, EW = 0 and
EW^2 = 1, the Kolmogorov distance from W to the standard normal is at most

    sqrt(Var(E[(W'-W)^2 | W])) / a  +  [ E(W'-W)^4 / (pi a) ]^{1/4}.

Each concrete family below reduces both summands to exact rationals before
the only two irrational operations (one square root, one fourth root) are
applied, so the reports carry the exact radicands alongside the floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class DegenerateMixingError(ValueError):
    """Linearity constant a fell outside (0, 1); the bound is not defined."""


@dataclass(frozen=True)
class SteinBoundReport:
    """Decomposed bound value.

    variance_sq is the exact square of the variance term and
    moment_quartic_pi the exact value of pi * moment_term**4, so equality
    of two bounds can be decided without tolerances.  per_level_detail maps
    each contributing level (or conjugacy class) to the exact ratio
    (eigenvalue - 1) / a, the only quantity through which the underlying
    chain enters the bound.  theorem_valid records whether a is in (0, 1);
    the expression itself is well defined for any a > 0.
    """

    a: Fraction
    variance_sq: Fraction
    moment_quartic_pi: Fraction
    per_level_detail: dict
    variance_term: float
    moment_term: float
    total: float
    theorem_valid: bool = True


def assemble_report(
    a: Fraction,
    variance_sq: Fraction,
    moment_quartic_pi: Fraction,
    per_level_detail: dict,
    theorem_valid: bool = True,
) -> SteinBoundReport:
    if variance_sq < 0 or moment_quartic_pi < 0:
        raise ArithmeticError("negative radicand in bound assembly")
    variance_term = math.sqrt(variance_sq)
    moment_term = (float(moment_quartic_pi) / math.pi) ** 0.25
    total = variance_term + moment_term
    if not math.isfinite(total):
        raise ArithmeticError("non-finite bound assembly")
    return SteinBoundReport(
        a=a,
        variance_sq=variance_sq,
        moment_quartic_pi=moment_quartic_pi,
        per_level_detail=per_level_detail,
        variance_term=variance_term,
        moment_term=moment_term,
        total=total,
        theorem_valid=theorem_valid,
    )
