"""Exact integer and rational primitives.

Integers are plain Python ``int`` (arbitrary precision) and rationals are
``fractions.Fraction``, which is always kept in lowest terms with a positive
denominator, so ``==`` on results is structural equality.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def factorial(n: int) -> int:
    """Return ``n!`` exactly."""
    if n < 0:
        raise ValueError(f"factorial requires n >= 0, got {n}")
    result = 1
    for k in range(2, n + 1):
        result *= k
    return result


def binomial(n: int, k: int) -> int:
    """Return C(n, k), or 0 when ``k`` lies outside ``[0, n]``."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    # each partial product is itself a binomial coefficient, so // is exact
    for i in range(1, k + 1):
        result = result * (n - k + i) // i
    return result


def pochhammer(a: Rational | int, n: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+n-1)``; ``(a)_0 = 1`` for every ``a``.

    Computed as a plain product so zero and negative integer ``a`` are exact.
    """
    if n < 0:
        raise ValueError(f"pochhammer requires n >= 0, got {n}")
    a = Fraction(a)
    result = Fraction(1)
    for i in range(n):
        result *= a + i
        if not result:
            break
    return result
