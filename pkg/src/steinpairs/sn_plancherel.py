"""Plancherel measure of the symmetric group and the transposition walk.

Irreducible representations of S_n are indexed by partitions of n.  Under
the Plancherel measure (probability dim^2 / n!) the standardized character
ratio at transpositions,

    W(lam) = sqrt(C(n,2)) * chi^lam(2) / dim(lam),

is approximately normal, and the error bound for the walk driven by the
representation tau depends on tau only through the exact rationals

    T_K(tau) = (chi^tau(K)/dim(tau) - 1) / a_tau,    a_tau = 1 - chi^tau(2)/dim(tau),

for the four classes K reachable in two transposition steps.  Character
ratios at those classes are polynomial in the content sums of the diagram,
so everything here is exact integer/rational arithmetic.

The module also implements the succession order on partitions (move boxes
from the first row to the last row or to a new row).  Both T functionals
are monotone along succession, which pins the minimal bound at (n-1, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping

from .exact import binomial
from .stein import SteinBoundReport, assemble_report


class ConjugacyClassTag(Enum):
    """The classes with nonzero two-step probability for the transposition walk."""

    ID = "id"
    TRANSPOSITION = "2"
    THREE_CYCLE = "3"
    TWO_TWO = "2,2"

    def __str__(self) -> str:  # compact labels for tables
        return self.value


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive parts; indexes an irreducible representation."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("empty partition")
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {self.parts}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "Partition":
        parts = [int(v) for v in values]
        while parts and parts[-1] == 0:
            parts.pop()
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def is_trivial(self) -> bool:
        return len(self.parts) == 1

    def label(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def contents(self) -> "ContentStats":
        s1, s2 = content_sums(self.parts)
        return ContentStats(sum1=s1, sum2=s2)


@dataclass(frozen=True)
class ContentStats:
    """Sums of box contents (column - row) and their squares."""

    sum1: int
    sum2: int


def content_sums(parts: Iterable[int]) -> tuple[int, int]:
    """(sum of contents, sum of squared contents); zero parts are skipped.

    Row r (1-indexed) of length m contributes sum_{j=1..m} (j - r).
    """
    s1 = 0
    s2 = 0
    for r, m in enumerate(parts, start=1):
        s1 += m * (m + 1) // 2 - r * m
        s2 += sum((j - r) ** 2 for j in range(1, m + 1))
    return s1, s2


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n in descending lexicographic order."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def gen(remaining: int, cap: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from gen(remaining - part, part, prefix + (part,))

    for parts in gen(n, n, ()):
        yield Partition(parts)


def character_ratio(lam: Partition, tag: ConjugacyClassTag) -> Fraction:
    """chi^lam(K) / dim(lam) at the two-step-reachable classes.

    Each ratio is a polynomial in the content sums:
      id:      1
      (2):     2 S1 / (n(n-1))
      (3):     3 (S2 - C(n,2)) / (n(n-1)(n-2))
      (2,2):   (S1^2 - 3 S2 + n(n-1)) / (6 C(n,4))
    """
    n = lam.n
    if tag is ConjugacyClassTag.ID:
        return Fraction(1)
    stats = lam.contents()
    if tag is ConjugacyClassTag.TRANSPOSITION:
        if n < 2:
            raise ValueError("transposition class needs n >= 2")
        return Fraction(2 * stats.sum1, n * (n - 1))
    if tag is ConjugacyClassTag.THREE_CYCLE:
        if n < 3:
            raise ValueError("three-cycle class needs n >= 3")
        return Fraction(3 * (stats.sum2 - binomial(n, 2)), n * (n - 1) * (n - 2))
    if tag is ConjugacyClassTag.TWO_TWO:
        if n < 4:
            raise ValueError("double-transposition class needs n >= 4")
        return Fraction(
            stats.sum1**2 - 3 * stats.sum2 + n * (n - 1), 6 * binomial(n, 4)
        )
    raise ValueError(f"unknown class {tag!r}")


def a_lambda(lam: Partition) -> Fraction:
    """1 - chi^lam(2)/dim(lam); positive for every nontrivial partition."""
    if lam.is_trivial:
        raise ValueError("the one-row partition gives a = 0")
    return 1 - character_ratio(lam, ConjugacyClassTag.TRANSPOSITION)


def t_functional(lam: Partition, tag: ConjugacyClassTag) -> Fraction:
    """(chi^lam(K)/dim - 1) / a_lam; constant 0 at id and -1 at transpositions."""
    return (character_ratio(lam, tag) - 1) / a_lambda(lam)


def class_size(tag: ConjugacyClassTag, n: int) -> int:
    """|K| from the cycle type: 1, C(n,2), 2 C(n,3), 3 C(n,4)."""
    if tag is ConjugacyClassTag.ID:
        return 1
    if tag is ConjugacyClassTag.TRANSPOSITION:
        return binomial(n, 2)
    if tag is ConjugacyClassTag.THREE_CYCLE:
        return 2 * binomial(n, 3)
    if tag is ConjugacyClassTag.TWO_TWO:
        return 3 * binomial(n, 4)
    raise ValueError(f"unknown class {tag!r}")


def p2_transpositions(n: int) -> dict[ConjugacyClassTag, Fraction]:
    """Law of the product of two uniform transpositions, by class.

    Equal transpositions give the identity, a shared point gives a
    three-cycle, disjoint supports give a (2,2); the transposition class
    itself is unreachable by parity.
    """
    if n < 4:
        raise ValueError("two transposition steps need n >= 4 to reach all classes")
    pairs = binomial(n, 2)
    law = {
        ConjugacyClassTag.ID: Fraction(1, pairs),
        ConjugacyClassTag.THREE_CYCLE: Fraction(2 * (n - 2), pairs),
        ConjugacyClassTag.TWO_TWO: Fraction(binomial(n - 2, 2), pairs),
    }
    assert sum(law.values()) == 1
    return law


# --- succession order -------------------------------------------------------


def succeeds(lam: Partition, mu: Partition) -> bool:
    """Whether lam precedes mu in the box-moving order (lam "succeeds" mu).

    With k the number of rows of lam (a one-row partition acts as if padded
    with a zero row), the relation holds iff lam_1 >= mu_1, the middle rows
    2..k-1 agree exactly, and lam_k <= mu_k, missing parts reading as 0.
    Equivalently mu is reachable from lam by repeatedly moving a box from
    the current first row to the current last row or to a new row.
    """
    if lam.n != mu.n:
        raise ValueError("partitions must have the same size")
    lp = lam.parts if len(lam.parts) >= 2 else lam.parts + (0,)
    k = len(lp)

    def mu_at(i: int) -> int:
        return mu.parts[i - 1] if i <= len(mu.parts) else 0

    if lp[0] < mu_at(1):
        return False
    for i in range(2, k):
        if lp[i - 1] != mu_at(i):
            return False
    return lp[k - 1] <= mu_at(k)


def _effective_parts(lam: Partition, new_row: bool) -> tuple[int, ...]:
    if len(lam.parts) == 1:
        new_row = True
    return lam.parts + (0,) if new_row else lam.parts


def succession_step(lam: Partition, new_row: bool = False) -> Partition:
    """One canonical move: (lam_1 - 1, lam_2, ..., lam_k + 1).

    With new_row=True the move targets a fresh (virtual zero) row, which is
    the only legal move from a one-row partition.  Raises if the result is
    not weakly decreasing.
    """
    eff = _effective_parts(lam, new_row)
    cand = (eff[0] - 1,) + eff[1:-1] + (eff[-1] + 1,)
    if any(cand[i] < cand[i + 1] for i in range(len(cand) - 1)) or cand[0] < 1:
        raise ValueError(f"move from {lam.parts} (new_row={new_row}) breaks weak decrease")
    return Partition.of(cand)


def _joint_content_sums(eff: tuple[int, ...]) -> tuple[int, int]:
    # Shared diagram of lam and its step image: first row shortened by one.
    return content_sums((eff[0] - 1,) + eff[1:])


def _check_step_shape(eff: tuple[int, ...]) -> None:
    if len(eff) < 2 or eff[0] <= eff[1] or eff[-1] >= eff[-2]:
        raise ValueError(
            f"criterion needs first row strictly longest and last row strictly shortest: {eff}"
        )


def f_criterion(lam: Partition, new_row: bool = False) -> int:
    """Sign witness for the three-cycle functional across one move.

    For mu = succession_step(lam), T_3(mu) - T_3(lam) and f(lam) have the
    same sign; f is an integer polynomial in the joint diagram's content
    sums, so the comparison is exact.
    """
    eff = _effective_parts(lam, new_row)
    _check_step_shape(eff)
    n = lam.n
    k = len(eff)
    lam1, lamk = eff[0], eff[-1]
    s1, s2 = _joint_content_sums(eff)
    return (
        (lam1 + lamk - k) * (s1 - binomial(n, 2))
        + (lam1 - 1) * (lamk + 1 - k)
        - s2
        + binomial(n, 2)
        + 2 * binomial(n, 3)
    )


def h_criterion(lam: Partition, new_row: bool = False) -> int:
    """Sign witness for the double-transposition functional across one move."""
    eff = _effective_parts(lam, new_row)
    _check_step_shape(eff)
    n = lam.n
    k = len(eff)
    lam1, lamk = eff[0], eff[-1]
    s1, s2 = _joint_content_sums(eff)
    return (
        2 * (lam1 + lamk - k) * (binomial(n, 2) - s1)
        - 2 * (lam1 - 1) * (lamk + 1 - k)
        - 2 * binomial(n, 2) * s1
        + s1**2
        + 3 * s2
        + 6 * binomial(n, 4)
        - 2 * binomial(n, 2)
    )


def succession_moves(lam: Partition) -> Iterator[tuple[bool, Partition]]:
    """All legal canonical moves from lam as (new_row, image) pairs."""
    for new_row in (False, True):
        if new_row is False and len(lam.parts) == 1:
            continue  # identical to the new_row move; avoid double counting
        try:
            yield new_row, succession_step(lam, new_row=new_row)
        except ValueError:
            continue


# --- the group bound --------------------------------------------------------


@dataclass(frozen=True)
class GroupBoundInput:
    """Data of a conjugacy-class walk feeding the normal bound.

    class_size is |C| for the generating class; p2 the two-step class law;
    class_sizes the |K| for every class p2 charges; ratio_provider returns
    chi^tau(K)/dim(tau) for a representation tau and class tag.
    """

    class_size: int
    p2: Mapping[ConjugacyClassTag, Fraction]
    class_sizes: Mapping[ConjugacyClassTag, int]
    ratio_provider: Callable[[Partition, ConjugacyClassTag], Fraction]
    generator: ConjugacyClassTag = ConjugacyClassTag.TRANSPOSITION

    def __post_init__(self) -> None:
        if sum(self.p2.values()) != 1:
            raise ValueError("two-step class law must sum to 1")
        missing = [tag for tag in self.p2 if tag not in self.class_sizes]
        if missing:
            raise ValueError(f"class sizes unavailable for {missing}")

    @classmethod
    def sn_transpositions(cls, n: int) -> "GroupBoundInput":
        """The shipped instance: S_n driven by the transposition class."""
        p2 = p2_transpositions(n)
        sizes = {tag: class_size(tag, n) for tag in p2}
        return cls(
            class_size=class_size(ConjugacyClassTag.TRANSPOSITION, n),
            p2=p2,
            class_sizes=sizes,
            ratio_provider=character_ratio,
        )


def stein_bound_group(inp: GroupBoundInput, tau: Partition) -> SteinBoundReport:
    """Normal bound for the standardized character-ratio statistic.

    variance term: |C| sqrt( sum_{K != id} p2(K)^2/|K| (T_K + 2)^2 )
    moment term:   [ |C|^2/pi sum_K p2(K)^2/|K| (8 + 6 T_K) ]^{1/4}

    The expression is well defined for every nontrivial tau (a_tau > 0);
    theorem_valid on the report records whether a_tau < 1 as the underlying
    theorem requires, since e.g. diagrams with nonpositive content sum give
    a_tau >= 1.
    """
    if tau.is_trivial:
        raise ValueError("trivial representation excluded (a would be 0)")
    a = 1 - inp.ratio_provider(tau, inp.generator)
    if a <= 0:
        raise ValueError(f"nonpositive linearity constant {a}")
    detail = {tag: (inp.ratio_provider(tau, tag) - 1) / a for tag in inp.p2}
    csq = Fraction(inp.class_size) ** 2
    variance_sq = csq * sum(
        inp.p2[tag] ** 2 / inp.class_sizes[tag] * (detail[tag] + 2) ** 2
        for tag in inp.p2
        if tag is not ConjugacyClassTag.ID
    )
    moment_quartic_pi = csq * sum(
        inp.p2[tag] ** 2 / inp.class_sizes[tag] * (8 + 6 * detail[tag]) for tag in inp.p2
    )
    return assemble_report(a, variance_sq, moment_quartic_pi, detail, theorem_valid=0 < a < 1)


def sn_bound_table(n: int) -> tuple[tuple[Partition, SteinBoundReport], ...]:
    """Bounds for every nontrivial partition of n, sorted ascending by total.

    Ties in the float total are broken by the exact functional pair
    (T_3, T_2,2) and then by the partition itself.
    """
    inp = GroupBoundInput.sn_transpositions(n)
    rows = [
        (lam, stein_bound_group(inp, lam)) for lam in partitions_of(n) if not lam.is_trivial
    ]
    rows.sort(
        key=lambda row: (
            row[1].total,
            row[1].per_level_detail[ConjugacyClassTag.THREE_CYCLE],
            row[1].per_level_detail[ConjugacyClassTag.TWO_TWO],
            row[0].parts,
        )
    )
    return tuple(rows)
