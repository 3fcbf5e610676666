"""Random-step-size chains on Hamming-scheme levels and their normal bounds.

States are the levels {0..n} weighted by the scheme's spectral measure
v_i / q^n (equivalently: the number of ones in a Binomial(n, (q-1)/q)
word).  A chain step first draws a step size T = t with probability b_t and
then moves by the fixed-size kernel

    L_t(i, j) = (v_j / q^n) * sum_r K_r(i) K_r(t) K_r(j) / v_r^2,

which is reversible with respect to the level measure.  The same kernel has
a sampling description: choose t coordinates of a word with i ones, turn
every chosen zero into a one, and independently turn each chosen one into a
zero with probability 1/(q-1).  Both constructions are implemented and must
agree entry for entry.

The statistic of interest is W(i) = K_1(i)/sqrt(v_1), the standardized
level, and the bounds below control its Kolmogorov distance to the normal
as an explicit function of the mixing (b_0, ..., b_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .exact import binomial
from .krawtchouk import KrawtchoukContext, krawtchouk, multiplicity
from .stein import DegenerateMixingError, SteinBoundReport, assemble_report


@dataclass(frozen=True)
class MixingDistribution:
    """Step-size law (b_0, ..., b_n): nonnegative, sums to 1, b_0 != 1."""

    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.weights) < 2:
            raise ValueError("a mixing needs weights b_0..b_n with n >= 1")
        if any(w < 0 for w in self.weights):
            raise ValueError("mixing weights must be nonnegative")
        if sum(self.weights) != 1:
            raise ValueError("mixing weights must sum to exactly 1")
        if self.weights[0] == 1:
            raise ValueError("the pure-hold mixing b_0 = 1 is excluded")

    @classmethod
    def of(cls, values: Iterable) -> "MixingDistribution":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def point_mass(cls, n: int, t: int) -> "MixingDistribution":
        if not 1 <= t <= n:
            raise ValueError(f"point mass needs 1 <= t <= n, got t={t}")
        return cls(tuple(Fraction(1) if s == t else Fraction(0) for s in range(n + 1)))

    @classmethod
    def uniform_over(cls, n: int, steps: Sequence[int]) -> "MixingDistribution":
        steps = list(steps)
        if not steps:
            raise ValueError("empty support")
        share = Fraction(1, len(steps))
        weights = [Fraction(0)] * (n + 1)
        for t in steps:
            weights[t] += share
        return cls(tuple(weights))

    @property
    def n(self) -> int:
        return len(self.weights) - 1

    def label(self) -> str:
        """Compact reproducible rendering, e.g. '0,1/2,1/2'."""
        return ",".join(str(w) for w in self.weights)


@dataclass(frozen=True)
class HammingModel:
    ctx: KrawtchoukContext
    mixing: MixingDistribution

    def __post_init__(self) -> None:
        if self.mixing.n != self.ctx.n:
            raise ValueError(
                f"mixing has {self.mixing.n + 1} weights but the scheme needs {self.ctx.n + 1}"
            )


@dataclass(frozen=True)
class TransitionMatrix:
    """Dense row-stochastic matrix of exact rationals."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        dim = len(self.entries)
        for row in self.entries:
            if len(row) != dim:
                raise ValueError("transition matrix must be square")
            if any(p < 0 for p in row):
                raise ValueError("negative transition probability")
            if sum(row) != 1:
                raise ValueError("row does not sum to exactly 1")

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def apply(self, vector: Sequence) -> tuple[Fraction, ...]:
        """Right action M @ v."""
        return tuple(sum(p * v for p, v in zip(row, vector)) for row in self.entries)

    def left_apply(self, pmf: Sequence) -> tuple[Fraction, ...]:
        """Left action pmf @ M."""
        dim = self.dimension
        return tuple(sum(pmf[i] * self.entries[i][j] for i in range(dim)) for j in range(dim))


def plancherel_pmf(ctx: KrawtchoukContext) -> tuple[Fraction, ...]:
    """Level weights (v_0, ..., v_n) / q^n; sums to exactly 1."""
    size = ctx.size
    return tuple(Fraction(multiplicity(ctx, i), size) for i in range(ctx.n + 1))


def transition_spectral(ctx: KrawtchoukContext, t: int) -> TransitionMatrix:
    """Fixed-step kernel L_t from the spectral sum over all levels r."""
    ctx._check_index("t", t)
    n = ctx.n
    size = ctx.size
    kt = [krawtchouk(ctx, r, t) for r in range(n + 1)]
    vsq = [multiplicity(ctx, r) ** 2 for r in range(n + 1)]
    rows = []
    for i in range(n + 1):
        ki = [krawtchouk(ctx, r, i) for r in range(n + 1)]
        row = []
        for j in range(n + 1):
            acc = sum(
                Fraction(ki[r] * kt[r] * krawtchouk(ctx, r, j), vsq[r]) for r in range(n + 1)
            )
            row.append(Fraction(multiplicity(ctx, j), size) * acc)
        rows.append(tuple(row))
    return TransitionMatrix(tuple(rows))


def transition_combinatorial(ctx: KrawtchoukContext, t: int) -> TransitionMatrix:
    """Fixed-step kernel by direct sampling counts.

    From a word with i ones, pick t coordinates uniformly without
    replacement; chosen zeros all become ones, each chosen one becomes a
    zero with probability 1/(q-1) and stays a one otherwise.  Summing over
    k = number of zeros among the chosen coordinates gives the exact entry.
    """
    ctx._check_index("t", t)
    n, q = ctx.n, ctx.q
    choose_t = binomial(n, t)
    rows = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            l = j - i
            acc = Fraction(0)
            for k in range(t + 1):
                ways = binomial(t - k, k - l)
                if ways == 0:
                    continue
                picks = binomial(n - i, k) * binomial(i, t - k)
                if picks == 0:
                    continue
                acc += (
                    ways
                    * picks
                    * Fraction((q - 2) ** (t - 2 * k + l), (q - 1) ** (t - k))
                )
            row.append(acc / choose_t)
        rows.append(tuple(row))
    return TransitionMatrix(tuple(rows))


def transition_mixed(model: HammingModel) -> TransitionMatrix:
    """Mixture kernel sum_t b_t L_t, assembled in one spectral pass."""
    ctx = model.ctx
    n, size = ctx.n, ctx.size
    mixed_kt = [
        sum(b * krawtchouk(ctx, r, t) for t, b in enumerate(model.mixing.weights))
        for r in range(n + 1)
    ]
    vsq = [multiplicity(ctx, r) ** 2 for r in range(n + 1)]
    rows = []
    for i in range(n + 1):
        ki = [krawtchouk(ctx, r, i) for r in range(n + 1)]
        row = []
        for j in range(n + 1):
            acc = sum(
                ki[r] * mixed_kt[r] * krawtchouk(ctx, r, j) / vsq[r] for r in range(n + 1)
            )
            row.append(Fraction(multiplicity(ctx, j), size) * acc)
        rows.append(tuple(row))
    return TransitionMatrix(tuple(rows))


def level_ratio(model: HammingModel, j: int) -> Fraction:
    """Mixture eigenvalue at level j: sum_t b_t K_j(t) / v_j."""
    ctx = model.ctx
    acc = sum(b * krawtchouk(ctx, j, t) for t, b in enumerate(model.mixing.weights))
    return Fraction(acc, multiplicity(ctx, j))


def linearity_constant(model: HammingModel) -> Fraction:
    """The a of E[W'|W] = (1-a)W; equals sum_t b_t * q t / (n(q-1)).

    Raises DegenerateMixingError when a falls outside (0, 1), where the
    normal bound is not defined.
    """
    a = 1 - level_ratio(model, 1)
    if not 0 < a < 1:
        raise DegenerateMixingError(f"linearity constant {a} outside (0, 1)")
    return a


def p2_hamming(ctx: KrawtchoukContext, j: int) -> Fraction:
    """Two-step distance law of the single-coordinate replacement walk.

    Replace one uniformly chosen coordinate by a uniformly chosen different
    value, twice; p2(j) is the chance of ending at distance j from the
    start.  Only j <= 2 is reachable.
    """
    ctx._check_index("j", j)
    n, q = ctx.n, ctx.q
    if j == 0:
        return Fraction(1, n * (q - 1))
    if j == 1:
        return Fraction(q - 2, n * (q - 1))
    if j == 2:
        return Fraction(n - 1, n)
    return Fraction(0)


def stein_bound_hamming(model: HammingModel) -> SteinBoundReport:
    """Normal-approximation bound for the standardized level statistic.

    Exact ingredients: a, the mixture eigenvalues at levels 0..2, and the
    two-step law p2.  Only levels j <= 2 contribute because p2 vanishes
    beyond distance two.
    """
    ctx = model.ctx
    n = ctx.n
    a = linearity_constant(model)
    levels = range(min(n, 2) + 1)
    detail = {j: (level_ratio(model, j) - 1) / a for j in levels}
    v1 = multiplicity(ctx, 1)
    variance_sq = v1**2 * sum(
        p2_hamming(ctx, j) ** 2 / multiplicity(ctx, j) * (detail[j] + 2) ** 2
        for j in levels
        if j >= 1
    )
    moment_quartic_pi = v1**2 * sum(
        (8 + 6 * detail[j]) * p2_hamming(ctx, j) ** 2 / multiplicity(ctx, j) for j in levels
    )
    return assemble_report(a, variance_sq, moment_quartic_pi, detail)


def stein_bound_binomial_half(n: int, mixing: MixingDistribution) -> SteinBoundReport:
    """Normal bound for the standardized Binomial(n, 1/2) under the q = 2 walk.

    With A = sum_t (t/n) b_t and B = sum_t t(t-1)/(n(n-1)) b_t the bound is

        sqrt(8 (n-1)/n) * (B/A)  +  [ (8/n)(1 + 3(n-1) B/A) / pi ]^{1/4},

    and a = 2A.  The mixing enters only through B/A.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if mixing.n != n:
        raise ValueError(f"mixing has {mixing.n + 1} weights but n={n} needs {n + 1}")
    weights = mixing.weights
    A = sum(Fraction(t, n) * b for t, b in enumerate(weights))
    if A == 0:
        raise DegenerateMixingError("mixing is a point mass at 0")
    B = (
        sum(Fraction(t * (t - 1), n * (n - 1)) * b for t, b in enumerate(weights))
        if n >= 2
        else Fraction(0)
    )
    a = 2 * A
    if not 0 < a < 1:
        raise DegenerateMixingError(f"linearity constant {a} outside (0, 1)")
    ratio = B / A
    variance_sq = 8 * Fraction(n - 1, n) * ratio**2
    moment_quartic_pi = Fraction(8, n) * (1 + 3 * (n - 1) * ratio)
    detail = {0: Fraction(0), 1: Fraction(-1)}
    if n >= 2:
        detail[2] = 2 * ratio - 2
    return assemble_report(a, variance_sq, moment_quartic_pi, detail)


@dataclass(frozen=True)
class SweepResult:
    """Grid evaluation: rankable rows plus mixings the bound rejected."""

    ranked: tuple[tuple[MixingDistribution, SteinBoundReport], ...]
    skipped: tuple[tuple[MixingDistribution, str], ...]


def _rank_key(item: tuple[MixingDistribution, SteinBoundReport]):
    mixing, report = item
    # Within one (n, q) family the total is a strictly increasing function
    # of the level-2 detail, so this key sorts exactly by total with the
    # documented tie-breaks (smaller a, then lexicographic weights).
    return (report.per_level_detail.get(2, Fraction(-2)), report.a, mixing.weights)


def rank_mixings(
    bound_fn: Callable[[MixingDistribution], SteinBoundReport],
    grid: Iterable[MixingDistribution],
) -> SweepResult:
    ranked = []
    skipped = []
    for mixing in grid:
        try:
            ranked.append((mixing, bound_fn(mixing)))
        except DegenerateMixingError as exc:
            skipped.append((mixing, str(exc)))
    ranked.sort(key=_rank_key)
    skipped.sort(key=lambda item: item[0].weights)
    return SweepResult(ranked=tuple(ranked), skipped=tuple(skipped))


def optimal_mixing_sweep(
    ctx: KrawtchoukContext, grid: Iterable[MixingDistribution]
) -> SweepResult:
    """Rank mixings by the Hamming-scheme bound, ascending."""
    return rank_mixings(lambda m: stein_bound_hamming(HammingModel(ctx, m)), grid)


def binomial_half_sweep(n: int, grid: Iterable[MixingDistribution]) -> SweepResult:
    """Rank mixings by the Binomial(n, 1/2) bound, ascending."""
    return rank_mixings(lambda m: stein_bound_binomial_half(n, m), grid)


def canonical_grid(
    n: int, extra: Iterable[MixingDistribution] = ()
) -> tuple[MixingDistribution, ...]:
    """Default sweep grid: every point mass b_t = 1 (t = 1..n), uniform
    mixtures over {1..m} for m in {2, 3, n}, and any caller-supplied rows."""
    grid: list[MixingDistribution] = [MixingDistribution.point_mass(n, t) for t in range(1, n + 1)]
    for m in (2, 3, n):
        if 1 <= m <= n:
            grid.append(MixingDistribution.uniform_over(n, range(1, m + 1)))
    grid.extend(extra)
    seen = set()
    unique = []
    for mixing in grid:
        if mixing.weights not in seen:
            seen.add(mixing.weights)
            unique.append(mixing)
    return tuple(unique)
