"""Exact evaluation of terminating Gauss hypergeometric series.

Only the polynomial case ``2F1(-m, b; c; x)`` with integer ``m >= 0`` is
supported. When ``c`` is a non-positive integer ``-k`` the series is only a
well-defined finite sum if ``k >= m``; for ``k < m`` a denominator Pochhammer
vanishes before the numerator does and the parameters are rejected.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from banachbox.combinatorics import factorial, pochhammer


class IllDefinedParameters(ValueError):
    """Lower parameter ``c = -k`` with ``k < m``: ``(c)_r`` hits zero inside the sum."""


def _check_parameters(m: int, c: Fraction) -> None:
    if m < 0:
        raise ValueError(f"termination index m must be >= 0, got {m}")
    if c.denominator == 1 and c <= 0 and -c < m:
        raise IllDefinedParameters(
            f"c = {c} is a non-positive integer with -c < m = {m}; "
            f"(c)_{int(-c) + 1} = 0 inside the terminating sum"
        )


def f21_term(m: int, b: Rational | int, c: Rational | int, x: Rational | int, r: int) -> Fraction:
    """Return the ``r``-th summand ``(-m)_r (b)_r / ((c)_r r!) * x**r``."""
    b, c, x = Fraction(b), Fraction(c), Fraction(x)
    _check_parameters(m, c)
    if not 0 <= r <= m:
        raise ValueError(f"term index r must lie in [0, {m}], got {r}")
    num = pochhammer(-m, r) * pochhammer(b, r)
    den = pochhammer(c, r) * factorial(r)
    return num / den * x**r


def eval_terminating_2f1(m: int, b: Rational | int, c: Rational | int, x: Rational | int) -> Fraction:
    """Exact value of ``2F1(-m, b; c; x)`` as an ``m+1`` term sum.

    Raises IllDefinedParameters for ``c = -k`` with integer ``0 <= k < m``,
    independent of ``x``.
    """
    b, c, x = Fraction(b), Fraction(c), Fraction(x)
    _check_parameters(m, c)
    term = Fraction(1)
    total = Fraction(1)
    for r in range(m):
        term = term * (r - m) * (b + r) / ((c + r) * (r + 1)) * x
        total += term
    return total
