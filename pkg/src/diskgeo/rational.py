"""Serialization helpers for exact rationals.

All curvature values travel as "p/q" strings (lowest terms, q > 0) so that
exactness survives JSON round trips; floats are advisory renderings only.
"""

from __future__ import annotations

from fractions import Fraction


def frac_str(x: Fraction | int) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


def frac_float(x: Fraction | int, digits: int = 12) -> float:
    """Advisory float with `digits` significant digits."""
    return float(format(float(Fraction(x)), f".{digits}g"))
