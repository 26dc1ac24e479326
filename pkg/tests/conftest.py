"""Shared helpers: seeded random strings and spectral data."""

import random
from fractions import Fraction as F

from cubicstring.string_model import CubicString


def random_string(rng: random.Random, n: int, num=8, den=4) -> CubicString:
    """A random valid string with moderate rational entries."""
    masses = tuple(F(rng.randint(1, num), rng.randint(1, den)) for _ in range(n))
    gaps = tuple(F(rng.randint(1, num), rng.randint(1, den)) for _ in range(n - 1))
    anchor = F(rng.randint(-num, num), rng.randint(1, den))
    return CubicString(masses, gaps, anchor)
