"""Strict parsing and formatting of rationals for file formats.

The wire form is base-10 "p" or "p/q" with an optional leading minus
and q > 0.  This is deliberately narrower than Fraction's constructor,
which would also accept decimals and exponents.
"""

from __future__ import annotations

import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(s: str) -> Fraction:
    if not isinstance(s, str):
        raise ValueError(f"expected a rational string, got {type(s).__name__}")
    m = _RATIONAL_RE.match(s.strip())
    if m is None:
        raise ValueError(f"not a rational literal: {s!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {s!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
