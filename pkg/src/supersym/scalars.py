"""Exact rational scalars, the ground field for everything else.

The whole toolkit computes over the rationals; there is no floating point
anywhere.  We use :class:`fractions.Fraction`, which already maintains the
canonical form we rely on (gcd-reduced, positive denominator), so equality
is structural and values are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rational(value, den=None) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Accepts ints, Fractions and strings like ``"5"``, ``"-5"``, ``"3/4"``.
    Floats are rejected: they have no place in an exact toolkit.
    """
    if isinstance(value, float):
        raise TypeError("floating point values are not allowed; pass int, Fraction or 'p/q' string")
    if den is not None:
        return Fraction(value, den)
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def inverse(a: Fraction) -> Fraction:
    """Multiplicative inverse; raises ZeroDivisionError on 0."""
    if a == 0:
        raise ZeroDivisionError("0 has no multiplicative inverse")
    return 1 / a


def format_rational(a: Fraction) -> str:
    """Render as ``p/q``, or ``p`` when the denominator is 1."""
    return str(a)
