"""The discrete cubic string: point masses on a line.

A configuration is n >= 1 point masses m_1..m_n at strictly increasing
positions x_1 < ... < x_n.  It is stored translation-ready as the n - 1
positive gaps l_k = x_{k+1} - x_k plus the anchor x_n, because every
spectral quantity depends on the gaps alone.

Conserved quantities of the associated isospectral flow:
    M       total mass, sum of m_k
    M_plus  first moment, sum of m_k x_k
    M_j     for j = 1..n, the sum over j-subsets i_1 < ... < i_j of
            (prod of the masses) * (prod over consecutive pairs of the
            squared distances (x_{i_a} - x_{i_{a+1}})^2)
M_1 coincides with M.  The M_j are, up to the factor 2(-z)^j, the
coefficients of the spectral polynomial, which is why the flow keeps
them constant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import (
    EmptyStringError,
    NonPositiveGapError,
    NonPositiveMassError,
)
from .exact import format_rational, parse_rational


@dataclass(frozen=True)
class CubicString:
    masses: tuple[Fraction, ...]
    gaps: tuple[Fraction, ...]
    anchor: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "masses", tuple(Fraction(m) for m in self.masses))
        object.__setattr__(self, "gaps", tuple(Fraction(g) for g in self.gaps))
        object.__setattr__(self, "anchor", Fraction(self.anchor))
        if len(self.gaps) != max(len(self.masses) - 1, 0):
            raise ValueError(
                f"{len(self.masses)} masses need {len(self.masses) - 1} gaps, "
                f"got {len(self.gaps)}")

    @property
    def n(self) -> int:
        return len(self.masses)


def validate(s: CubicString) -> None:
    """Check positivity invariants; structural shape is checked at construction."""
    if s.n == 0:
        raise EmptyStringError("a string needs at least one mass")
    for m in s.masses:
        if m <= 0:
            raise NonPositiveMassError(f"mass {m} is not positive")
    for g in s.gaps:
        if g <= 0:
            raise NonPositiveGapError(f"gap {g} is not positive")


def positions(s: CubicString) -> tuple[Fraction, ...]:
    """Mass positions x_1 < ... < x_n, with x_n = anchor."""
    out = [s.anchor]
    for g in reversed(s.gaps):
        out.append(out[-1] - g)
    return tuple(reversed(out))


@dataclass(frozen=True)
class ConservedSet:
    total_mass: Fraction
    first_moment: Fraction
    higher: tuple[Fraction, ...]  # M_1..M_n; higher[0] == total_mass


def invariant_masses(masses: Sequence, xs: Sequence) -> list:
    """The chain sums M_1..M_n over any ordered field (Fraction or float).

    M_j sums, over increasing index subsets of size j, the product of
    the chosen masses times the squared consecutive distances.
    """
    n = len(masses)
    out = []
    for j in range(1, n + 1):
        acc = None
        for subset in combinations(range(n), j):
            term = masses[subset[0]]
            for a, b in zip(subset, subset[1:]):
                term = term * masses[b] * (xs[a] - xs[b]) ** 2
            acc = term if acc is None else acc + term
        out.append(acc)
    return out


def conserved(s: CubicString) -> ConservedSet:
    validate(s)
    xs = positions(s)
    total = sum(s.masses, Fraction(0))
    first = sum((m * x for m, x in zip(s.masses, xs)), Fraction(0))
    higher = tuple(invariant_masses(s.masses, xs))
    return ConservedSet(total, first, higher)


# -- wire format -------------------------------------------------------

def string_to_dict(s: CubicString) -> dict:
    return {
        "masses": [format_rational(m) for m in s.masses],
        "gaps": [format_rational(g) for g in s.gaps],
        "anchor": format_rational(s.anchor),
    }


def string_from_dict(d: dict) -> CubicString:
    try:
        masses = tuple(parse_rational(m) for m in d["masses"])
        gaps = tuple(parse_rational(g) for g in d["gaps"])
        anchor = parse_rational(d.get("anchor", "0"))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed string object: {exc}") from exc
    return CubicString(masses, gaps, anchor)


def dump_string(s: CubicString, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(string_to_dict(s), fh, indent=2)
        fh.write("\n")


def load_string(path: str) -> CubicString:
    with open(path, encoding="utf-8") as fh:
        return string_from_dict(json.load(fh))
