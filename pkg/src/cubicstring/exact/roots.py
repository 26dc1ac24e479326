"""Real root isolation with Sturm chains, entirely over rationals.

The chain is the classical one: p0 = p, p1 = p', p_{i+1} = -(p_{i-1} mod
p_i), each member divided by its positive content to keep coefficients
small (positive scaling never moves a sign).  V(x) counts sign changes
along the chain; V(a) - V(b) is the number of distinct real roots in
(a, b].

Exact rational roots are detected after refinement by probing the
smallest-denominator rational inside the isolating interval; a square
string spectrum with a rational eigenvalue will always be caught this
way once the interval is narrower than the gap to the next candidate of
that denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from ..errors import NotSquarefreeError
from .poly import Polynomial, poly_gcd

DEFAULT_ISOLATION_WIDTH = Fraction(1, 2 ** 64)


def is_squarefree(p: Polynomial) -> bool:
    if p.degree <= 1:
        return True
    return poly_gcd(p, p.derivative()).degree == 0


def sturm_chain(p: Polynomial) -> list[Polynomial]:
    chain = [p.primitive(), p.derivative().primitive()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append((-r).primitive())
    return chain


def sign_changes(chain: list[Polynomial], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = q(x)
        if v > 0:
            signs.append(1)
        elif v < 0:
            signs.append(-1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain: list[Polynomial], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi]."""
    return sign_changes(chain, lo) - sign_changes(chain, hi)


def cauchy_root_bound(p: Polynomial) -> Fraction:
    """All real roots of p lie in [-bound, bound]."""
    if p.degree < 1:
        return Fraction(1)
    lead = abs(p.leading)
    return 1 + max(abs(c) for c in p.coefficients[:-1]) / lead


def _interior_point(p: Polynomial, lo: Fraction, hi: Fraction) -> Fraction:
    """A point strictly inside (lo, hi) where p does not vanish."""
    mid = (lo + hi) / 2
    if p(mid) != 0:
        return mid
    # p has finitely many roots; walk a few asymmetric cuts
    for num, den in ((1, 3), (2, 3), (1, 5), (2, 5), (3, 5), (4, 5), (1, 7)):
        cut = lo + (hi - lo) * Fraction(num, den)
        if p(cut) != 0:
            return cut
    raise AssertionError("could not find a non-root cut point")


@dataclass(frozen=True)
class RootEnclosure:
    """One isolated real root: either an exact rational or an open
    interval (lo, hi) known to contain exactly one simple root."""

    lo: Fraction
    hi: Fraction
    exact: Fraction | None = None

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def midpoint(self) -> Fraction:
        if self.exact is not None:
            return self.exact
        return (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        if self.exact is not None:
            return Fraction(0)
        return self.hi - self.lo

    def __float__(self) -> float:
        return float(self.midpoint)


def sturm_isolate(p: Polynomial, lo: Fraction, hi: Fraction,
                  width: Fraction = DEFAULT_ISOLATION_WIDTH) -> list[RootEnclosure]:
    """Isolate every root of p in (lo, hi], one enclosure per root.

    p must be squarefree and must not vanish at lo or hi.  Each returned
    interval is narrower than width and carries exactly one root; when
    the root is rational it is identified exactly.
    """
    if p.degree < 1:
        return []
    if not is_squarefree(p):
        raise NotSquarefreeError("root isolation requires a squarefree polynomial")
    lo = Fraction(lo)
    hi = Fraction(hi)
    if lo >= hi:
        raise ValueError("empty interval")
    if p(lo) == 0 or p(hi) == 0:
        raise ValueError("endpoints must not be roots")
    chain = sturm_chain(p)
    out: list[RootEnclosure] = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        k = count_roots(chain, a, b)
        if k == 0:
            continue
        if k == 1:
            out.append(_refine(p, chain, a, b, width))
            continue
        cut = _interior_point(p, a, b)
        stack.append((a, cut))
        stack.append((cut, b))
    out.sort(key=lambda r: r.midpoint)
    return out


def _refine(p: Polynomial, chain: list[Polynomial], a: Fraction, b: Fraction,
            width: Fraction) -> RootEnclosure:
    """Shrink an interval holding exactly one root below width."""
    while b - a > width:
        mid = (a + b) / 2
        v = p(mid)
        if v == 0:
            return RootEnclosure(mid, mid, mid)
        # one root in (a, b]: it is in (a, mid] iff the count says so
        if count_roots(chain, a, mid) == 1:
            b = mid
        else:
            a = mid
    guess = simplest_rational_between(a, b)
    if p(guess) == 0:
        return RootEnclosure(guess, guess, guess)
    return RootEnclosure(a, b)


def refine_enclosure(p: Polynomial, box: RootEnclosure,
                     width: Fraction) -> RootEnclosure:
    """Re-refine an existing enclosure to a smaller width."""
    if box.is_exact or box.width <= width:
        return box
    a, b = box.lo, box.hi
    sa = p(a)
    while b - a > width:
        mid = (a + b) / 2
        v = p(mid)
        if v == 0:
            return RootEnclosure(mid, mid, mid)
        # simple root: sign change marks the half that keeps it
        if (sa > 0) != (v > 0):
            b = mid
        else:
            a, sa = mid, v
    guess = simplest_rational_between(a, b)
    if p(guess) == 0:
        return RootEnclosure(guess, guess, guess)
    return RootEnclosure(a, b)


def simplest_rational_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The smallest-denominator rational in the closed interval [lo, hi]."""
    if lo > hi:
        lo, hi = hi, lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_rational_between(-hi, -lo)
    n = ceil(lo)
    if n <= hi:
        return Fraction(n)
    f = floor(lo)
    return f + 1 / simplest_rational_between(1 / (hi - f), 1 / (lo - f))
