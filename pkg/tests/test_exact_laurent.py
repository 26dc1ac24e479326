"""Truncated Laurent series: expansion of rational functions at
infinity, cutoff propagation, and the projection identities used to
assemble approximation numerators.

The projection identities, for a polynomial p and a simple pole at lam:
    nonneg part of p(z)/(z - lam)   = (p(z) - p(lam)) / (z - lam)
    coefficient of z**-l            = lam**(l-1) * p(lam)
    constant-of-tail at 0 variant   = (p(lam) - p(0)) / lam
"""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubicstring.exact import (
    LaurentSeries,
    Polynomial,
    laurent_of_rational,
)

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=12)
polys = st.lists(rationals, max_size=6).map(Polynomial)


def test_geometric_series_of_simple_pole():
    # 1/(z-2) = z^-1 + 2 z^-2 + 4 z^-3 + ...
    s = laurent_of_rational(Polynomial.one(), Polynomial([-2, 1]), -4)
    expected = LaurentSeries({-1: F(1), -2: F(2), -3: F(4), -4: F(8)}, -4)
    assert s == expected


def test_exact_division_terminates_without_cutoff():
    # (z^2 - 1)/z = z - z^-1 exactly
    s = laurent_of_rational(Polynomial([-1, 0, 1]), Polynomial([0, 1]), -10)
    assert s.is_exact
    assert s.coefficients() == {1: F(1), -1: F(-1)}


def test_cutoff_propagation_add_mul():
    a = laurent_of_rational(Polynomial.one(), Polynomial([-1, 1]), -5)
    b = LaurentSeries.from_polynomial(Polynomial([0, 0, 3]))  # 3z^2, exact
    assert (a + b).low_cutoff == -5
    # unknown tail of a (below z^-5) times top of b (z^2) pollutes z^-4 downward
    prod = a * b
    assert prod.low_cutoff == -3
    assert prod.coefficient(-3) == F(3)
    with pytest.raises(ValueError):
        prod.coefficient(-4)


def test_truncated_and_is_big_O():
    s = LaurentSeries({2: F(1), -1: F(5)}, -3)
    assert not s.is_big_O(1)
    assert s.is_big_O(2)
    t = s - LaurentSeries({2: F(1)}, None)
    assert t.is_big_O(-1)
    assert not t.is_big_O(-4)  # the visible z^-1 term already refutes it
    hidden = LaurentSeries({}, -3)
    with pytest.raises(ValueError):
        hidden.is_big_O(-5)  # claim reaches into the truncated region
    assert s.truncated(-1).coefficients() == {2: F(1), -1: F(5)}
    assert s.truncated(0).coefficients() == {2: F(1)}


def test_multiplication_against_rational_oracle():
    # (p1/q1) * (p2/q2) expanded two ways must agree above the cutoff
    rng = random.Random(3)
    for _ in range(30):
        p1 = Polynomial([rng.randint(-5, 5) for _ in range(rng.randint(1, 4))])
        p2 = Polynomial([rng.randint(-5, 5) for _ in range(rng.randint(1, 4))])
        q1 = Polynomial([rng.randint(1, 5)] + [rng.randint(-5, 5)
                                               for _ in range(rng.randint(0, 2))] + [1])
        q2 = Polynomial([rng.randint(1, 5)] + [rng.randint(-5, 5)
                                               for _ in range(rng.randint(0, 2))] + [1])
        cut = -6
        via_series = laurent_of_rational(p1, q1, cut) * laurent_of_rational(p2, q2, cut)
        direct = laurent_of_rational(p1 * p2, q1 * q2, cut)
        # compare on the region both sides trust
        c = cut
        if via_series.low_cutoff is not None:
            c = max(c, via_series.low_cutoff)
        for j in range(c, 3):
            assert via_series.coefficient(j) == direct.coefficient(j)


@given(polys, rationals)
def test_projection_closed_forms(p, lam):
    if lam == 0:
        lam = F(1)
    den = Polynomial([-lam, 1])
    s = laurent_of_rational(p, den, -6)
    # polynomial part equals the difference quotient
    assert s.project_nonneg() == p.difference_quotient(lam)
    # single negative coefficients are powers of lam times p(lam)
    for ell in (1, 2, 3):
        assert s.coefficient(-ell) == lam ** (ell - 1) * p(lam)


@given(polys, rationals)
def test_pos_projection_drops_constant(p, lam):
    if lam == 0:
        lam = F(2)
    s = laurent_of_rational(p, Polynomial([-lam, 1]), -4)
    pos = s.project_pos()
    nonneg = s.project_nonneg()
    assert pos == nonneg - nonneg.coefficient(0)
    # the dropped constant is the difference quotient at 0
    assert nonneg.coefficient(0) == _pi0(p, lam)


def _pi0(p, lam):
    # constant coefficient of the nonneg part of p/(z-lam) is the
    # difference quotient evaluated at 0: (p(0) - p(lam))/(0 - lam)
    return (p(lam) - p(0)) / lam


def test_reflection():
    s = LaurentSeries({-1: F(1), 2: F(3)}, -4)
    r = s.reflected()
    assert r.coefficient(-1) == F(-1)
    assert r.coefficient(2) == F(3)
    assert r.low_cutoff == -4


def test_zero_annihilates_even_when_truncated():
    a = LaurentSeries({-1: F(1)}, -3)
    z = LaurentSeries.zero()
    assert (a * z).is_exact
    assert (a * z).coefficients() == {}
