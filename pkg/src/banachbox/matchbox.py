"""Exact PMFs of the classical and biased (Rohatgi) matchbox problems.

Two boxes start with ``n`` matches each; box one is picked with probability
``p`` and box two with ``q = 1 - p``. ``r`` is the number of matches left in
the other box at the moment one box is found empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterator, Sequence

from banachbox.combinatorics import binomial


@dataclass(frozen=True)
class MatchboxParams:
    n: int
    p: Fraction

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"n must be a non-negative integer, got {self.n!r}")
        if isinstance(self.p, float):
            raise TypeError("p must be an exact rational, not a float")
        p = Fraction(self.p)
        if not 0 < p < 1:
            raise ValueError(f"p must satisfy 0 < p < 1, got {p}")
        object.__setattr__(self, "p", p)

    @property
    def q(self) -> Fraction:
        return 1 - self.p


@dataclass(frozen=True)
class Pmf:
    """Probabilities indexed by ``r = 0..n``."""

    probs: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.probs)

    def __getitem__(self, r: int) -> Fraction:
        return self.probs[r]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.probs)

    @property
    def n(self) -> int:
        return len(self.probs) - 1

    def total(self) -> Fraction:
        return sum(self.probs, Fraction(0))


@dataclass(frozen=True)
class NormalizationReport:
    s1: Fraction
    s2: Fraction
    total: Fraction


def _params(params_or_n: MatchboxParams | int, p: Rational | None = None) -> MatchboxParams:
    if isinstance(params_or_n, MatchboxParams):
        return params_or_n
    return MatchboxParams(params_or_n, p)


def pmf_generalized(params: MatchboxParams | int, p: Rational | None = None) -> Pmf:
    """``P_r = C(2n-r, n) (p^{n+1} q^{n-r} + q^{n+1} p^{n-r})`` for ``r = 0..n``.

    Accepts either a :class:`MatchboxParams` or ``(n, p)``.
    """
    mp = _params(params, p)
    n, p, q = mp.n, mp.p, mp.q
    pn1, qn1 = p ** (n + 1), q ** (n + 1)
    return Pmf(
        tuple(
            binomial(2 * n - r, n) * (pn1 * q ** (n - r) + qn1 * p ** (n - r))
            for r in range(n + 1)
        )
    )


def pmf_classical(n: int) -> Pmf:
    """Unbiased case: ``P_{n,r} = 2^{r-2n} C(2n-r, n)``."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return Pmf(
        tuple(Fraction(binomial(2 * n - r, n), 2 ** (2 * n - r)) for r in range(n + 1))
    )


def s1_direct(params: MatchboxParams) -> Fraction:
    n, p, q = params.n, params.p, params.q
    return sum(
        (binomial(2 * n - r, n) * p ** (n + 1) * q ** (n - r) for r in range(n + 1)),
        Fraction(0),
    )


def s2_direct(params: MatchboxParams) -> Fraction:
    n, p, q = params.n, params.p, params.q
    return sum(
        (binomial(2 * n - r, n) * q ** (n + 1) * p ** (n - r) for r in range(n + 1)),
        Fraction(0),
    )


def _telescope(n: int, base: Fraction, p: Fraction, q: Fraction, other: Fraction) -> Fraction:
    # S_k = S_{k-1} + (pq)^k C(2k, k) (1/2 - other), starting from S_0 = base
    half = Fraction(1, 2)
    value = base
    pq_k = Fraction(1)
    central = 1
    for k in range(1, n + 1):
        pq_k *= p * q
        central = central * 2 * (2 * k - 1) // k
        value += pq_k * central * (half - other)
    return value


def s1_recurrence(params: MatchboxParams) -> Fraction:
    """First partial sum built from ``S_0 = p`` by the Pascal-rule recurrence."""
    p, q = params.p, params.q
    return _telescope(params.n, p, p, q, q)


def s2_recurrence(params: MatchboxParams) -> Fraction:
    """Second partial sum built from ``S_0 = q``; the correction uses ``1/2 - p``."""
    p, q = params.p, params.q
    return _telescope(params.n, q, p, q, p)


def normalization(params: MatchboxParams) -> NormalizationReport:
    s1, s2 = s1_direct(params), s2_direct(params)
    return NormalizationReport(s1=s1, s2=s2, total=s1 + s2)


def moment(params: MatchboxParams | Pmf | Sequence[Fraction], k: int) -> Fraction:
    """Raw moment ``E[r^k]`` by direct summation over the PMF."""
    if k < 0:
        raise ValueError(f"moment order must be >= 0, got {k}")
    probs = pmf_generalized(params) if isinstance(params, MatchboxParams) else params
    return sum((r**k * pr for r, pr in enumerate(probs)), Fraction(0))
