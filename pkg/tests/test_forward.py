"""Forward map: crossing matrices, boundary polynomials, spectrum,
residues, and the independent oscillatory route.

The two-mass configuration with unit masses and unit gap is fully
worked by hand and frozen here:
    full crossing = [[1-z, 1, 1/2], [-2z, 1, 1], [2z^2-4z, -2z, 1-z]]
    eigenvalue 2, slope-residue -1, value-residue -1/4.
"""

import random
from fractions import Fraction as F

import numpy as np
import pytest

from conftest import random_string
from cubicstring.errors import (
    SizeCapExceededError,
    StepsOutOfRangeError,
    TooSmallError,
)
from cubicstring.exact import Matrix, Polynomial, RatInterval, det_cofactor
from cubicstring.forward import (
    boundary_data,
    check_automorphism,
    eigenvalue_polynomial,
    float_spectrum_oracle,
    free_matrix,
    is_totally_nonnegative,
    jump_matrix,
    oscillatory_matrices,
    path_matrix,
    residues,
    spectrum,
    transition,
)
from cubicstring.string_model import CubicString, conserved, positions

TWO_MASS = CubicString((F(1), F(1)), (F(1),))


def P(*coeffs):
    return Polynomial(coeffs)


def test_factor_matrices():
    g = jump_matrix(F(3))
    assert g.entry(2, 0) == P(0, -6)
    assert g.entry(0, 0) == P(1) and g.entry(1, 1) == P(1)
    l = free_matrix(F(2))
    assert l.entry(0, 1) == P(2) and l.entry(0, 2) == P(2)
    assert l.entry(1, 2) == P(2)


def test_full_crossing_two_mass_frozen():
    full = transition(TWO_MASS, 3)
    expected = Matrix((
        (P(1, -1), P(1), P(F(1, 2))),
        (P(0, -2), P(1), P(1)),
        (P(0, -4, 2), P(0, -2), P(1, -1)),
    ))
    assert full == expected
    assert det_cofactor(full) == Polynomial.one()


def test_single_mass_boundary():
    wd = boundary_data(CubicString((F(3),), ()))
    assert wd.phi == Polynomial.one()
    assert wd.phi_x == Polynomial.zero()
    assert wd.phi_xx == P(0, -6)


def test_steps_range():
    with pytest.raises(StepsOutOfRangeError):
        transition(TWO_MASS, 0)
    with pytest.raises(StepsOutOfRangeError):
        transition(TWO_MASS, 4)
    assert transition(TWO_MASS, 1) == jump_matrix(F(1))


def test_boundary_low_order_coefficients_random():
    rng = random.Random(21)
    for _ in range(20):
        s = random_string(rng, rng.randint(1, 6))
        wd = boundary_data(s)
        c = conserved(s)
        xs = positions(s)
        # curvature carries the conserved chain sums: 2 sum (-z)^k M_k
        assert wd.phi_xx.coefficient(0) == 0
        for k, mk in enumerate(c.higher, start=1):
            assert wd.phi_xx.coefficient(k) == 2 * (-1) ** k * mk
        assert wd.phi_xx.degree == s.n
        # slope: 2 z (first_moment - total_mass * anchor) + O(z^2)
        assert wd.phi_x.coefficient(0) == 0
        assert wd.phi_x.coefficient(1) == 2 * (c.first_moment
                                               - c.total_mass * s.anchor)
        # value: 1 - z sum m_k (x_n - x_k)^2 + O(z^2)
        assert wd.phi.coefficient(0) == 1
        assert wd.phi.coefficient(1) == -sum(
            m * (xs[-1] - x) ** 2 for m, x in zip(s.masses, xs))


def test_automorphism_and_unit_determinant_random():
    rng = random.Random(22)
    for _ in range(12):
        s = random_string(rng, rng.randint(1, 6))
        check_automorphism(s)
        full = transition(s, 2 * s.n - 1)
        assert det_cofactor(full) == Polynomial.one()


def test_partial_product_degree_pattern():
    rng = random.Random(23)
    for _ in range(8):
        n = rng.randint(2, 6)
        s = random_string(rng, n)
        for k in range(1, n):
            a = transition(s, 2 * k + 1)
            expected = ((k, k - 1, k - 1),
                        (k, k - 1, k - 1),
                        (k + 1, k, k))
            got = tuple(tuple(a.entry(i, j).degree for j in range(3))
                        for i in range(3))
            assert got == expected, (n, k)


def test_partial_product_normalizations():
    rng = random.Random(24)
    for _ in range(8):
        n = rng.randint(1, 6)
        s = random_string(rng, n)
        for k in range(n):
            a = transition(s, 2 * k + 1)
            assert a.entry(0, 0).coefficient(0) == 1
            assert a.entry(1, 0).coefficient(0) == 0
            assert a.entry(2, 0).coefficient(0) == 0
            if k >= 1:
                # 1-indexed gaps l_{n-k}..l_{n-1} live at 0-based n-k-1..n-2
                assert a.entry(0, 1).coefficient(0) == sum(s.gaps[n - k - 1: n])
                assert a.entry(1, 1).coefficient(0) == 1
                assert a.entry(2, 1).coefficient(0) == 0
                assert a.entry(2, 2).coefficient(0) == 1


def test_third_row_coefficient_identities():
    """Low and leading coefficients of the bottom row of any partial
    product, against closed forms in the masses, gaps and positions."""
    rng = random.Random(25)
    for _ in range(8):
        n = rng.randint(2, 5)
        s = random_string(rng, n)
        xs = positions(s)
        m = s.masses
        for k in range(1, n):
            a = transition(s, 2 * k + 1)
            a31, a32, a33 = a.entry(2, 0), a.entry(2, 1), a.entry(2, 2)
            # linear coefficients (indices below are 1-based in the math)
            assert a31.coefficient(1) == -2 * sum(m[n - k - 1: n])
            assert a32.coefficient(1) == -2 * sum(
                m[i] * (xs[i] - xs[n - k - 1]) for i in range(n - k, n))
            assert a33.coefficient(1) == -sum(
                m[i] * (xs[i] - xs[n - k - 1]) ** 2 for i in range(n - k, n))
            # leading coefficients
            prod_full = F(1)
            for i in range(n - k, n):        # masses m_{n+1-k}..m_n, 0-based
                prod_full *= m[i] * s.gaps[i - 1] ** 2 / 2
            assert a33.leading == (-2) ** k * prod_full
            assert a31.leading == (-2) ** (k + 1) * m[n - k - 1] * prod_full
            prod_short = F(1)
            for i in range(n - k + 1, n):
                prod_short *= m[i] * s.gaps[i - 1] ** 2 / 2
            assert a32.leading == ((-2) ** k * prod_short
                                   * m[n - k] * s.gaps[n - k - 1])
            # the string data comes straight back from the leading terms
            assert -a31.leading / (2 * a33.leading) == m[n - k - 1]
            assert 2 * a33.leading / a32.leading == s.gaps[n - k - 1]


def test_spectrum_two_mass_exact():
    wd = spectrum(TWO_MASS)
    assert len(wd.eigenvalues) == 1
    assert wd.eigenvalues[0].exact == 2


def test_spectrum_single_mass_empty():
    wd = spectrum(CubicString((F(5),), ()))
    assert wd.eigenvalues == ()


def test_residues_two_mass_exact():
    wd = residues(spectrum(TWO_MASS))
    assert wd.w_residues == (F(-1),)
    assert wd.z_residues == (F(-1, 4),)


def test_residues_interval_case_certified():
    # masses (1,2), gap 1: the eigenvalue polynomial has irrational roots
    s = CubicString((F(1), F(2)), (F(1),))
    wd = residues(spectrum(s), precision_bits=64)
    for b in wd.w_residues + wd.z_residues:
        if isinstance(b, RatInterval):
            assert b.is_negative()
        else:
            assert b < 0
    # the residue sum is the 1/z coefficient of phi_x/phi_xx at infinity,
    # which is the ratio of leading coefficients
    total = sum(float(b.midpoint) if isinstance(b, RatInterval) else float(b)
                for b in wd.w_residues)
    expect = float(wd.phi_x.leading / wd.phi_xx.leading)
    assert abs(total - expect) < 1e-12


def test_spectrum_matches_float_oracle_random():
    rng = random.Random(26)
    for _ in range(10):
        s = random_string(rng, rng.randint(2, 6))
        wd = spectrum(s)
        lams = np.array([float(e.midpoint) for e in wd.eigenvalues])
        oracle = float_spectrum_oracle(s)
        assert np.allclose(lams, oracle, rtol=1e-9, atol=0)


def test_oscillatory_matrices_frozen():
    stiff, gram = oscillatory_matrices(TWO_MASS)
    assert stiff.rows == ((F(2),),)
    assert gram.rows == ((F(1),),)
    s3 = CubicString((F(1), F(2), F(4)), (F(1), F(3)))
    stiff3, gram3 = oscillatory_matrices(s3)
    assert stiff3.rows == ((F(3, 2), F(-1, 2)), (F(-1, 2), F(3, 4)))
    assert gram3.rows == ((F(1), F(0)), (F(6), F(9)))
    with pytest.raises(TooSmallError):
        oscillatory_matrices(CubicString((F(1),), ()))


def test_stiffness_determinant_identity():
    from cubicstring.exact import det_exact

    rng = random.Random(27)
    for _ in range(10):
        s = random_string(rng, rng.randint(2, 6))
        stiff, _ = oscillatory_matrices(s)
        prod = F(1)
        for m in s.masses:
            prod *= m
        assert det_exact(stiff) == sum(s.masses) / prod


def test_path_matrix_equals_gram():
    rng = random.Random(28)
    for _ in range(10):
        s = random_string(rng, rng.randint(2, 6))
        _, gram = oscillatory_matrices(s)
        assert path_matrix(s.n - 1, s.gaps) == gram


def test_path_matrix_order_two_hand_count():
    # two routes from source 2 to sink 1: climb-then-exit and exit-diagonal
    pm = path_matrix(2, (F(3), F(5)))
    assert pm.rows == ((F(9), F(0)), (F(30), F(25)))


def test_gram_total_nonnegativity():
    rng = random.Random(29)
    for _ in range(8):
        s = random_string(rng, rng.randint(2, 6))
        _, gram = oscillatory_matrices(s)
        assert is_totally_nonnegative(gram)
    # a matrix with a negative 2x2 minor fails
    bad = Matrix([[F(1), F(2)], [F(3), F(1)]])
    assert not is_totally_nonnegative(bad)
    with pytest.raises(SizeCapExceededError):
        is_totally_nonnegative(Matrix.identity(7))
