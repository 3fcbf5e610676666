"""Eigenvalue views of the step-size chains.

Both chain families are diagonalized by closed forms: the level chain by
lam_s = sum_t b_t K_s(t)/v_s with eigenvectors (K_s(j))_j, and the
representation chain by the character ratios themselves.  The error bounds
are monotone increasing in (lam_2 - 1)/(1 - lam_1) (levels) and in each of
(lam_K - 1)/(1 - lam_(2)) (classes K = three-cycle, double transposition),
which ties bound quality to the spectrum.  No floating-point eigensolver is
involved anywhere; eigenvectors are verified by exact residuals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hamming import HammingModel, transition_mixed
from .krawtchouk import krawtchouk, multiplicity
from .sn_plancherel import ConjugacyClassTag, Partition, character_ratio
from .stein import DegenerateMixingError


@dataclass(frozen=True)
class HammingSpectrumReport:
    """Eigenvalues by level plus the bound functional (lam_2 - 1)/(1 - lam_1).

    moduli_condition_met is only defined when the mixing is supported on
    {0, 1}: it records whether the bound-relevant eigenvalues are also the
    largest in modulus below 1, i.e. b_1 <= 2n(q-1)/(q(n+2)).  For other
    mixings it is None.
    """

    eigenvalues: tuple[Fraction, ...]
    bound_functional: Fraction
    moduli_condition_met: bool | None


@dataclass(frozen=True)
class GroupSpectrumReport:
    """Eigenvalues by conjugacy class plus one functional per relevant class."""

    eigenvalues: dict[ConjugacyClassTag, Fraction]
    bound_functionals: dict[ConjugacyClassTag, Fraction]


def hamming_spectrum(model: HammingModel) -> HammingSpectrumReport:
    ctx = model.ctx
    n, q = ctx.n, ctx.q
    if n < 2:
        raise ValueError("the bound functional needs levels 0..2, so n >= 2")
    eigenvalues = []
    for s in range(n + 1):
        acc = sum(b * krawtchouk(ctx, s, t) for t, b in enumerate(model.mixing.weights))
        eigenvalues.append(Fraction(acc, multiplicity(ctx, s)))
    if eigenvalues[1] == 1:
        raise DegenerateMixingError("lam_1 = 1: bound functional undefined")
    functional = (eigenvalues[2] - 1) / (1 - eigenvalues[1])
    weights = model.mixing.weights
    condition: bool | None = None
    if weights[0] + weights[1] == 1:
        condition = weights[1] <= Fraction(2 * n * (q - 1), q * (n + 2))
    return HammingSpectrumReport(
        eigenvalues=tuple(eigenvalues),
        bound_functional=functional,
        moduli_condition_met=condition,
    )


def group_spectrum(
    tau: Partition, classes: tuple[ConjugacyClassTag, ...] = tuple(ConjugacyClassTag)
) -> GroupSpectrumReport:
    if tau.is_trivial:
        raise ValueError("trivial representation excluded")
    eigenvalues = {tag: character_ratio(tau, tag) for tag in classes}
    lam2 = character_ratio(tau, ConjugacyClassTag.TRANSPOSITION)
    if lam2 == 1:
        raise DegenerateMixingError("transposition eigenvalue 1: functional undefined")
    functionals = {
        tag: (eigenvalues[tag] - 1) / (1 - lam2)
        for tag in classes
        if tag in (ConjugacyClassTag.THREE_CYCLE, ConjugacyClassTag.TWO_TWO)
    }
    return GroupSpectrumReport(eigenvalues=eigenvalues, bound_functionals=functionals)


def verify_spectrum_against_matrix(model: HammingModel) -> bool:
    """Exact check that (K_s(j))_j is an eigenvector of the mixed kernel
    with eigenvalue lam_s, for every level s."""
    ctx = model.ctx
    n = ctx.n
    kernel = transition_mixed(model)
    for s in range(n + 1):
        vec = [Fraction(krawtchouk(ctx, s, j)) for j in range(n + 1)]
        lam = sum(
            b * krawtchouk(ctx, s, t) for t, b in enumerate(model.mixing.weights)
        ) / Fraction(multiplicity(ctx, s))
        if kernel.apply(vec) != tuple(lam * v for v in vec):
            return False
    return True
