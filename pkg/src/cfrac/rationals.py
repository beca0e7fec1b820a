"""Exact rational arithmetic, the only numeric currency of the library.

Arbitrary-precision integers are plain Python ints.  Reduced rationals are
``fractions.Fraction``, which already maintains the canonical form everything
downstream relies on: positive denominator, gcd(|numerator|, denominator) = 1,
and a canonical zero (0/1).  Equality of canonical forms is structural, so
rationals can be compared and hashed directly.

No floating point appears here or in any module that imports this one;
decimal rendering is a display concern and lives in the CLI.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def make_rational(num: int, den: int = 1) -> Fraction:
    """Build the canonical reduced fraction num/den.

    A zero denominator is rejected with ZeroDivisionError.
    """
    return Fraction(num, den)


def add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def subtract(a: Fraction, b: Fraction) -> Fraction:
    return a - b


def multiply(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def divide(a: Fraction, b: Fraction) -> Fraction:
    """Exact division; b must be nonzero (ZeroDivisionError otherwise)."""
    return a / b


def compare(a: Fraction, b: Fraction) -> int:
    """Three-way comparison: -1, 0, or +1.

    Done by cross-multiplying the canonical forms, never by converting to
    floating point, so the order is the exact real-number order.
    """
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    if lhs < rhs:
        return -1
    if lhs > rhs:
        return 1
    return 0


def is_integer(q: Fraction) -> bool:
    """True when q is an integer (canonical denominator 1)."""
    return q.denominator == 1
