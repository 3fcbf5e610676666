"""q-Krawtchouk polynomials of the Hamming scheme H(n, q), exactly.

For the scheme on q-ary n-tuples, level i (Hamming distance i from a fixed
vertex) contains v_i = (q-1)^i C(n,i) points, and

    K_j(i) = sum_{l=0}^{j} (-1)^l (q-1)^{j-l} C(i,l) C(n-i,j-l)

is the j-th Krawtchouk polynomial evaluated at i.  Products of two such
polynomials expand back in the Krawtchouk basis with nonnegative
coefficients whenever q >= 2; those coefficients drive the combinatorial
chain in :mod:`steinpairs.hamming`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exact import binomial

DEFAULT_CONTEXT_CAP = 64


@dataclass(frozen=True)
class KrawtchoukContext:
    """Scheme parameters: tuple length n >= 1 and alphabet size q >= 2.

    q < 2 is rejected outright (no meaning is assigned to it), and n is
    capped because exact binomials grow quickly.
    """

    n: int
    q: int
    cap: int = field(default=DEFAULT_CONTEXT_CAP, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.q < 2:
            raise ValueError(f"q must be >= 2, got {self.q}")
        if self.n > self.cap:
            raise ValueError(f"n={self.n} exceeds the context cap {self.cap}")

    @property
    def size(self) -> int:
        """Number of vertices |X| = q**n."""
        return self.q**self.n

    def _check_index(self, name: str, value: int) -> None:
        if not 0 <= value <= self.n:
            raise ValueError(f"{name}={value} outside 0..{self.n}")


@lru_cache(maxsize=None)
def _kraw(n: int, q: int, j: int, i: int) -> int:
    return sum(
        (-1) ** l * (q - 1) ** (j - l) * binomial(i, l) * binomial(n - i, j - l)
        for l in range(j + 1)
    )


def krawtchouk(ctx: KrawtchoukContext, j: int, i: int) -> int:
    """Exact value K_j(i); evaluated from the defining alternating sum."""
    ctx._check_index("j", j)
    ctx._check_index("i", i)
    return _kraw(ctx.n, ctx.q, j, i)


def multiplicity(ctx: KrawtchoukContext, i: int) -> int:
    """Level size v_i = (q-1)^i C(n, i)."""
    ctx._check_index("i", i)
    return (ctx.q - 1) ** i * binomial(ctx.n, i)


@dataclass(frozen=True)
class LinearizationTable:
    """Expansion K_i(r) K_j(r) = sum_m coefficients[m] * K_m(r).

    Target degrees m = i + l with l in [-j, j]; degrees falling outside
    0..n are omitted (their binomial factors vanish), so absent keys read
    as zero.
    """

    i: int
    j: int
    coefficients: dict[int, Fraction]

    def coefficient(self, m: int) -> Fraction:
        return self.coefficients.get(m, Fraction(0))


def linearization(ctx: KrawtchoukContext, i: int, j: int) -> LinearizationTable:
    """Product-expansion coefficients of K_i * K_j in the Krawtchouk basis.

    All coefficients are nonnegative for q >= 2, which is what lets the
    expansion define transition probabilities.
    """
    ctx._check_index("i", i)
    ctx._check_index("j", j)
    n, q = ctx.n, ctx.q
    coeffs: dict[int, Fraction] = {}
    for l in range(-j, j + 1):
        target = i + l
        if not 0 <= target <= n:
            continue
        acc = 0
        for k in range(j + 1):
            c_strip = binomial(j - k, k - l)
            if c_strip == 0:
                continue
            c_zeros = binomial(n - i, k)
            c_ones = binomial(i, j - k)
            if c_zeros == 0 or c_ones == 0:
                continue
            # c_strip != 0 forces j - 2k + l >= 0 and k - l >= 0.
            acc += c_strip * c_zeros * c_ones * (q - 2) ** (j - 2 * k + l) * (q - 1) ** (k - l)
        coeffs[target] = Fraction(binomial(n, i) * acc, binomial(n, target))
    return LinearizationTable(i=i, j=j, coefficients=coeffs)
