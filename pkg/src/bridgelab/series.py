"""Exact counting sequences for trees and forests, and the ratios built on them.

Everything inside the recurrences is integer arithmetic; decimals appear only
when a :class:`Ratio` is rendered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

from bridgelab.errors import CapabilityError

TREE_CAP = 1000
LABELLED_CAP = 400
FRAG_CAP = 60
DECIMAL_DIGITS = 20


@dataclass(frozen=True)
class Sequence:
    """Values indexed from n = 1."""

    name: str
    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        if n < 1:
            raise IndexError(n)
        return self.values[n - 1]

    def __len__(self) -> int:
        return len(self.values)

    def bfile(self) -> str:
        return "".join(f"{n} {v}\n" for n, v in enumerate(self.values, start=1))


@dataclass(frozen=True)
class Ratio:
    numerator: int
    denominator: int

    @classmethod
    def of(cls, value: Fraction | int) -> Ratio:
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def decimal(self, digits: int = DECIMAL_DIGITS) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits
            return Decimal(self.numerator) / Decimal(self.denominator)

    @property
    def dec(self) -> str:
        return str(self.decimal())

    def __float__(self) -> float:
        return self.numerator / self.denominator

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"

    def as_dict(self) -> dict:
        return {"num": str(self.numerator), "den": str(self.denominator), "dec": self.dec}


def _cap(value: int, cap: int, what: str) -> None:
    if value > cap:
        raise CapabilityError(f"{what} is capped at {cap}, got {value}")


@lru_cache(maxsize=None)
def _rooted(nmax: int) -> tuple[int, ...]:
    r = [0, 1]
    # s[j] = sum over divisors d of j of d * r(d)
    s = [0, 1]
    for n in range(2, nmax + 1):
        total = sum(s[j] * r[n - j] for j in range(1, n))
        q, rem = divmod(total, n - 1)
        assert rem == 0
        r.append(q)
        s.append(sum(d * r[d] for d in range(1, n + 1) if n % d == 0))
    return tuple(r[1 : nmax + 1])


def rooted_trees_seq(nmax: int) -> Sequence:
    _cap(nmax, TREE_CAP, "rooted tree sequence")
    return Sequence("rooted-trees", _rooted(max(nmax, 1))[:nmax])


@lru_cache(maxsize=None)
def _otter(nmax: int) -> tuple[int, ...]:
    r = (0,) + _rooted(nmax)
    out = []
    for n in range(1, nmax + 1):
        pairs = sum(r[i] * r[n - i] for i in range(1, n))
        half = r[n // 2] if n % 2 == 0 else 0
        q, rem = divmod(2 * r[n] - pairs + half, 2)
        assert rem == 0
        out.append(q)
    return tuple(out)


def otter_trees_seq(nmax: int) -> Sequence:
    """Unlabelled (free) trees from rooted trees by Otter's dissimilarity formula."""
    _cap(nmax, TREE_CAP, "tree sequence")
    return Sequence("trees", _otter(max(nmax, 1))[:nmax])


def euler_transform(t: Sequence, name: str | None = None) -> Sequence:
    """Multiset transform: coefficients of prod_j (1 - x^j)^(-t(j))."""
    nmax = len(t)
    c = [0] * (nmax + 1)
    for d in range(1, nmax + 1):
        for m in range(d, nmax + 1, d):
            c[m] += d * t[d]
    f = [1] + [0] * nmax
    for n in range(1, nmax + 1):
        total = c[n] + sum(c[k] * f[n - k] for k in range(1, n))
        q, rem = divmod(total, n)
        assert rem == 0
        f[n] = q
    return Sequence(name or f"euler({t.name})", tuple(f[1:]))


def unlabelled_forests_seq(nmax: int) -> Sequence:
    return euler_transform(otter_trees_seq(nmax), "forests-unlabelled")


def _cayley(k: int) -> int:
    return 1 if k <= 2 else k ** (k - 2)


@lru_cache(maxsize=None)
def _labelled_forests_capped(nmax: int, largest: int) -> tuple[int, ...]:
    """f[n] = number of labelled forests on n vertices with every tree of size <= largest."""
    f = [1]
    for n in range(1, nmax + 1):
        f.append(
            sum(math.comb(n - 1, k - 1) * _cayley(k) * f[n - k] for k in range(1, min(n, largest) + 1))
        )
    return tuple(f)


def labelled_forests_seq(nmax: int) -> Sequence:
    _cap(nmax, LABELLED_CAP, "labelled forest sequence")
    f = _labelled_forests_capped(nmax, nmax)
    return Sequence("forests-labelled", f[1:])


def labelled_trees_seq(nmax: int) -> Sequence:
    _cap(nmax, LABELLED_CAP, "labelled tree sequence")
    return Sequence("trees-labelled", tuple(_cayley(n) for n in range(1, nmax + 1)))


def tau_ratio(n: int) -> Ratio:
    """Unlabelled trees over unlabelled forests on n vertices."""
    _cap(n, TREE_CAP, "tau ratio")
    t = otter_trees_seq(n)
    f = euler_transform(t)
    return Ratio.of(Fraction(t[n], f[n]))


def tau_limit_estimate(n: int) -> Ratio:
    """Richardson extrapolation from n and 2n, assuming tau_ratio(n) = L + c/n + O(1/n^2)."""
    _cap(2 * n, TREE_CAP, "tau limit estimate (uses 2n)")
    return Ratio.of(2 * tau_ratio(2 * n).fraction - tau_ratio(n).fraction)


def renyi_ratio(n: int) -> Ratio:
    """Labelled trees over labelled forests on n vertices."""
    if n < 2:
        raise CapabilityError(f"renyi ratio needs n >= 2, got {n}")
    _cap(n, LABELLED_CAP, "renyi ratio")
    return Ratio.of(Fraction(n ** (n - 2), labelled_forests_seq(n)[n]))


def labelled_forest_frag_expectation(n: int) -> Ratio:
    """Exact E[frag] for a uniformly random labelled forest on n vertices."""
    if n < 1:
        raise CapabilityError(f"n must be >= 1, got {n}")
    _cap(n, FRAG_CAP, "labelled forest frag expectation")
    total = _labelled_forests_capped(n, n)[n]
    expected_max = Fraction(0)
    below = 0
    for s in range(1, n + 1):
        upto = _labelled_forests_capped(n, s)[n]
        expected_max += Fraction(s * (upto - below), total)
        below = upto
    return Ratio.of(n - expected_max)


SEQUENCES = {
    "rooted-trees": (rooted_trees_seq, TREE_CAP),
    "trees": (otter_trees_seq, TREE_CAP),
    "forests-unlabelled": (unlabelled_forests_seq, TREE_CAP),
    "forests-labelled": (labelled_forests_seq, LABELLED_CAP),
    "trees-labelled": (labelled_trees_seq, LABELLED_CAP),
}
