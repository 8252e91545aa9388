"""Both sides of the two-term 2F1 relation obtained from the matchbox PMF.

For ``0 < p < 1``, ``q = 1 - p`` and integer ``n >= 0``::

    p 2F1(-n, 1; -2n; 1/q) + q 2F1(-n, 1; -2n; 1/p)
        = (n!)^2 / (p^n q^n (2n)!)
        = (1)_n / (4^n p^n q^n (1/2)_n)

All comparisons are exact ``Fraction`` equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from banachbox.combinatorics import factorial, pochhammer
from banachbox.hypergeometric import eval_terminating_2f1
from banachbox.matchbox import MatchboxParams

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class IdentityReport:
    n: int
    p: Fraction
    lhs: Fraction
    rhs_factorial_form: Fraction
    rhs_pochhammer_form: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs_factorial_form == self.rhs_pochhammer_form


@dataclass(frozen=True)
class CorollaryReport:
    n: int
    value_at_2: Fraction
    pochhammer_ratio: Fraction
    value_at_1: Fraction
    chu_vandermonde_ratio: Fraction

    @property
    def at_2_matches_ratio(self) -> bool:
        return self.value_at_2 == self.pochhammer_ratio

    @property
    def at_1_matches_chu_vandermonde(self) -> bool:
        return self.value_at_1 == self.chu_vandermonde_ratio

    @property
    def at_1_matches_ratio(self) -> bool:
        return self.value_at_1 == self.pochhammer_ratio


def _f(n: int, x: Fraction) -> Fraction:
    return eval_terminating_2f1(n, 1, -2 * n, x)


def identity_lhs(params: MatchboxParams) -> Fraction:
    n, p, q = params.n, params.p, params.q
    return p * _f(n, 1 / q) + q * _f(n, 1 / p)


def rhs_factorial_form(params: MatchboxParams) -> Fraction:
    n = params.n
    pq_n = (params.p * params.q) ** n
    return Fraction(factorial(n) ** 2) / (pq_n * factorial(2 * n))


def rhs_pochhammer_form(params: MatchboxParams) -> Fraction:
    n = params.n
    pq_n = (params.p * params.q) ** n
    return pochhammer(1, n) / (4**n * pq_n * pochhammer(HALF, n))


def identity_rhs(params: MatchboxParams) -> tuple[Fraction, Fraction]:
    """The factorial form and the Pochhammer form, computed independently."""
    return rhs_factorial_form(params), rhs_pochhammer_form(params)


def verify_identity(params: MatchboxParams) -> IdentityReport:
    fact, poch = identity_rhs(params)
    return IdentityReport(
        n=params.n,
        p=params.p,
        lhs=identity_lhs(params),
        rhs_factorial_form=fact,
        rhs_pochhammer_form=poch,
    )


def sum_via_hypergeometric(params: MatchboxParams) -> Fraction:
    """Total probability rebuilt from the hypergeometric representation.

    ``(pq)^n (2n)!/(n!)^2 * {p 2F1(..; 1/q) + q 2F1(..; 1/p)}``; equals 1.
    """
    n = params.n
    prefactor = (params.p * params.q) ** n * Fraction(factorial(2 * n), factorial(n) ** 2)
    return prefactor * identity_lhs(params)


def corollary_check(n: int) -> CorollaryReport:
    """The ``p = q = 1/2`` specialisation, evaluated at argument 2 and at 1.

    Setting ``p = q = 1/2`` puts the series at ``x = 1/q = 2``, where it equals
    ``(1)_n / (1/2)_n``. At ``x = 1`` the series instead equals the
    Chu-Vandermonde value ``(2n+1)/(n+1)``; both are reported.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return CorollaryReport(
        n=n,
        value_at_2=_f(n, Fraction(2)),
        pochhammer_ratio=pochhammer(1, n) / pochhammer(HALF, n),
        value_at_1=_f(n, Fraction(1)),
        chu_vandermonde_ratio=Fraction(2 * n + 1, n + 1),
    )
