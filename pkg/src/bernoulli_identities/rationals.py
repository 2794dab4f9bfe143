"""Exact scalar arithmetic: unbounded integers, reduced rationals, binomials.

Integers are plain Python ints, which are already arbitrary precision.
Rationals are ``fractions.Fraction``, which keeps the canonical reduced form
(gcd(|p|, q) = 1, q > 0) after every operation, so equality of values is
equality of representations.  Nothing in this package ever goes through
floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "Rational",
    "binomial",
    "falling_product",
    "parse_rational",
    "format_rational",
]

Rational = Fraction


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), exactly.

    Out-of-range k (k > n) yields 0 rather than an error, matching the
    convention used by binomial sums whose index may run past n.
    """
    if n < 0 or k < 0:
        raise ValueError("binomial(n, k) needs n >= 0 and k >= 0")
    return math.comb(n, k)


def falling_product(n: int, k: int, q: int) -> int:
    """Product (n+k+1)(n+k+2)...(n+k+q); the empty product (q = 0) is 1."""
    if q < 0:
        raise ValueError("falling_product needs q >= 0")
    base = n + k
    return math.prod(range(base + 1, base + q + 1))


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into an exact rational.

    Only integer numerators/denominators are accepted; decimal or float
    syntax is rejected so no value can sneak in through binary rounding.
    """
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(value: Fraction) -> str:
    """Render a rational as ``"p"`` or ``"p/q"``, sign on the numerator."""
    return str(value)
