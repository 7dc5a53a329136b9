"""Gamma-function ratios that collapse to exact rationals.

Every constant in this library is a ratio of Gamma values at integer or
half-integer arguments.  Such ratios are rational whenever the sqrt(pi)
factors cancel: Gamma(n) = (n-1)! and Gamma(n + 1/2) = (2n)!/(4^n n!) * sqrt(pi).
Nothing here ever evaluates Gamma itself -- only ratios with cancelled
transcendental parts, so the rationality of each result is certified
rather than assumed.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .polynomials import as_fraction


class ExactnessError(ValueError):
    """The requested quantity is not rational under the given parameters."""


def rising_factorial(a, count: int) -> Fraction:
    """Pochhammer product a*(a+1)*...*(a+count-1); equals Gamma(a+count)/Gamma(a)."""
    a = as_fraction(a)
    if count < 0:
        raise ValueError(f"count must be non-negative, got {count}")
    result = Fraction(1)
    for j in range(count):
        result *= a + j
    return result


def gamma_half(q) -> tuple[Fraction, int]:
    """Split Gamma(q) = r * pi^(e/2) for positive integer or half-integer q.

    Returns (r, e) with e in {0, 1}.
    """
    q = as_fraction(q)
    if q <= 0:
        raise ExactnessError(f"Gamma argument must be positive, got {q}")
    if q.denominator == 1:
        return Fraction(factorial(q.numerator - 1)), 0
    if q.denominator == 2:
        n = (q.numerator - 1) // 2  # q = n + 1/2
        return Fraction(factorial(2 * n), 4 ** n * factorial(n)), 1
    raise ExactnessError(
        f"Gamma({q}) is not an integer or half-integer argument; "
        "the exact machinery cannot reduce it"
    )


def gamma_ratio(numerators, denominators) -> Fraction:
    """Product of Gamma over ``numerators`` divided by the one over ``denominators``.

    All arguments must be positive integers or half-integers, and the
    sqrt(pi) powers must cancel exactly; otherwise ExactnessError is raised.
    """
    value = Fraction(1)
    pi_power = 0
    for q in numerators:
        r, e = gamma_half(q)
        value *= r
        pi_power += e
    for q in denominators:
        r, e = gamma_half(q)
        value /= r
        pi_power -= e
    if pi_power:
        raise ExactnessError(
            "Gamma ratio leaves an uncancelled pi^(1/2) power; "
            "the value is irrational for these parameters"
        )
    return value
