"""Inverse map: bimoments, minors, the approximation chain, recovery."""

import json
import random
from fractions import Fraction

import pytest

from cubicstring.errors import SingularMatrixError, SpectralValidationError
from cubicstring.exact import Polynomial, poly_product
from cubicstring.forward import boundary_data, transition
from cubicstring.inverse import (
    Approximant,
    SpectralData,
    bimoments,
    last_step,
    moment_minors,
    random_spectral,
    recover,
    recover_detailed,
    recurrence_sequences,
    solve_type1,
    solve_type2,
    solve_type3,
    spectral_from_dict,
    spectral_to_dict,
    validate_spectral,
    verify_approximant,
    verify_weyl_relation,
    w_series,
    weyl_fractions,
    z_residues_of,
    z_series,
)

F = Fraction

# the two-mass string with unit masses and unit gap, anchored at zero
TWO_MASS = SpectralData((F(2),), (F(-1),), F(2))


def P(*coeffs):
    return Polynomial(tuple(F(c) for c in coeffs))


def test_validation_rejects_bad_data():
    with pytest.raises(SpectralValidationError):
        validate_spectral(SpectralData((F(2), F(1)), (F(-1), F(-1)), F(1)))
    with pytest.raises(SpectralValidationError):
        validate_spectral(SpectralData((F(0),), (F(-1),), F(1)))
    with pytest.raises(SpectralValidationError):
        validate_spectral(SpectralData((F(1),), (F(1),), F(1)))
    with pytest.raises(SpectralValidationError):
        validate_spectral(SpectralData((F(1),), (F(-1),), F(0)))
    with pytest.raises(SpectralValidationError):
        validate_spectral(SpectralData((F(1), F(2)), (F(-1),), F(1)))


def test_two_mass_bimoments_frozen():
    bt = bimoments(TWO_MASS, 1)
    assert bt.moments == (F(-1), F(-2))
    assert bt.pair_table == ((F(1, 4), F(1, 2)), (F(1, 2), F(1)))
    assert bt.z_residues == (F(-1, 4),)
    assert z_residues_of(TWO_MASS) == (F(-1, 4),)


def test_two_mass_minors_frozen():
    mm = moment_minors(bimoments(TWO_MASS, 1))
    assert mm.mass_corner == (F(1), F(1, 2), F(1, 4))
    assert mm.corner == (F(1), F(1, 4), F(0))
    assert mm.inner == (F(1), F(1))
    assert mm.shifted == (F(1), F(1, 2))
    assert mm.beta_shifted == (F(1), F(-1))
    assert mm.beta_inner == (F(1), F(-1))


def test_pair_table_symmetry_and_value_moments():
    # the value-measure moments are read off the first row of the pair
    # table: sum_k c_k lam_k^j == -I_{0j}
    rng = random.Random(5)
    for _ in range(6):
        sd = random_spectral(rng.randint(1, 6), rng)
        bt = bimoments(sd, sd.n - 1)
        t = bt.pair_table
        for i in range(len(t)):
            for j in range(len(t)):
                assert t[i][j] == t[j][i]
        for j in range(bt.max_order + 1):
            zm = sum((c * lam ** j for lam, c
                      in zip(sd.eigenvalues, bt.z_residues)), F(0))
            assert zm == -t[0][j]


def test_two_mass_approximants_frozen():
    bt = bimoments(TWO_MASS, 1)
    a2 = solve_type1(bt, TWO_MASS, 0)
    assert (a2.den, a2.num_w, a2.num_z) == (P(0, -2), P(0), P(1))
    a3 = solve_type3(bt, TWO_MASS, 1)
    assert (a3.den, a3.num_w, a3.num_z) == (P(1, -1), P(1), P(F(1, 2)))
    a4 = solve_type2(bt, TWO_MASS, 1)
    assert (a4.den, a4.num_w, a4.num_z) == (P(0, -2), P(1), P(1))
    a5 = solve_type1(bt, TWO_MASS, 1)
    assert (a5.den, a5.num_w, a5.num_z) == (P(0, -4, 2), P(0, -2), P(1, -1))
    assert [a.chain_index for a in (a2, a3, a4, a5)] == [2, 3, 4, 5]
    for a in (a2, a3, a4, a5):
        verify_approximant(TWO_MASS, a)


def test_approximant_conditions_random():
    rng = random.Random(6)
    for _ in range(5):
        sd = random_spectral(rng.randint(1, 5), rng)
        bt = bimoments(sd, sd.n - 1)
        for k in range(1, sd.n):
            verify_approximant(sd, solve_type3(bt, sd, k))
            verify_approximant(sd, solve_type2(bt, sd, k))
        for k in range(sd.n):
            verify_approximant(sd, solve_type1(bt, sd, k))


def test_solver_index_ranges():
    bt = bimoments(TWO_MASS, 1)
    for bad in (0, 2):
        with pytest.raises(ValueError):
            solve_type3(bt, TWO_MASS, bad)
        with pytest.raises(ValueError):
            solve_type2(bt, TWO_MASS, bad)
    with pytest.raises(ValueError):
        solve_type1(bt, TWO_MASS, 2)


def test_solvers_singular_past_string_end():
    # with a deeper table the systems past the last mass lose rank
    bt = bimoments(TWO_MASS, 2)
    with pytest.raises(SingularMatrixError):
        solve_type3(bt, TWO_MASS, 2)


def test_weyl_series_and_fractions():
    w = w_series(TWO_MASS, -4)
    assert [w.coefficient(-i) for i in (1, 2, 3, 4)] \
        == [F(-1), F(-2), F(-4), F(-8)]
    zs = z_series(TWO_MASS, -4)
    assert [zs.coefficient(-i) for i in (1, 2, 3, 4)] \
        == [F(-1, 2), F(-1, 2), F(-1), F(-2)]
    num_w, den_w, num_z, den_z = weyl_fractions(TWO_MASS)
    assert (num_w, den_w) == (P(-1), P(-2, 1))
    assert (num_z, den_z) == (P(F(1, 2), F(-1, 2)), P(0, -2, 1))


def test_weyl_relation_random():
    verify_weyl_relation(TWO_MASS)
    rng = random.Random(7)
    for _ in range(8):
        verify_weyl_relation(random_spectral(rng.randint(1, 7), rng))


def test_last_step_two_mass():
    app = last_step(TWO_MASS)
    assert app.den == P(0, -4, 2)
    assert app.chain_index == 5


def test_last_step_random():
    rng = random.Random(8)
    for _ in range(5):
        last_step(random_spectral(rng.randint(1, 5), rng))


def test_two_mass_recovery_frozen():
    s = recover(TWO_MASS)
    assert s.masses == (F(1), F(1))
    assert s.gaps == (F(1),)
    assert s.anchor == 0


def test_recovery_report_two_mass():
    rep = recover_detailed(TWO_MASS)
    by_k = {r.k: r for r in rep.rows}
    assert by_k[0].mass == by_k[0].mass_cramer == by_k[0].mass_printed == 1
    assert by_k[0].printed_agrees
    # the printed closed form disagrees as soon as inner != shifted
    assert by_k[1].mass == by_k[1].mass_cramer == 1
    assert by_k[1].mass_printed == 2
    assert not by_k[1].printed_agrees
    assert by_k[1].gap == by_k[1].gap_determinant == 1
    json.dumps(rep.to_dict())  # wire-safe


def test_minor_signs_and_corner_vanishing():
    rng = random.Random(9)
    for _ in range(6):
        sd = random_spectral(rng.randint(1, 6), rng)
        n = sd.n
        bt = bimoments(sd, n - 1)
        mm = moment_minors(bt)
        for k in range(n):
            assert mm.shifted[k] > 0
            assert mm.inner[k] > 0
            assert mm.corner[k] > 0
        assert mm.corner[n] == 0  # the pair table has rank n-1
        for k in range(n + 1):
            assert mm.mass_corner[k] > 0
        for k in range(1, n):
            assert mm.beta_shifted[k] < 0
            assert mm.beta_inner[k] < 0
        # corner splitting: mass_corner = corner + inner'/(2M)
        for k in range(1, n + 1):
            assert mm.mass_corner[k] == mm.corner[k] \
                + mm.inner[k - 1] / (2 * bt.total_mass)


def test_spectral_first_roundtrip():
    rng = random.Random(10)
    for _ in range(8):
        sd = random_spectral(rng.randint(1, 6), rng)
        s = recover(sd)
        assert sum(s.masses) == sd.total_mass
        wd = boundary_data(s)
        z = Polynomial.x()
        expect = Polynomial.constant(-2 * sd.total_mass) * z
        for lam in sd.eigenvalues:
            expect = expect * (Polynomial.one()
                               - z * Polynomial.constant(1 / lam))
        assert wd.phi_xx == expect
        da = wd.phi_xx.derivative()
        for lam, b, c in zip(sd.eigenvalues, sd.residues, z_residues_of(sd)):
            assert wd.phi_xx(lam) == 0
            assert wd.phi_x(lam) == b * da(lam)
            assert wd.phi(lam) == c * da(lam)


def test_chain_matches_transition_columns():
    rng = random.Random(11)
    for _ in range(4):
        sd = random_spectral(rng.randint(2, 5), rng)
        n = sd.n
        bt = bimoments(sd, n - 1)
        s = recover(sd)
        for k in range(n):
            a = transition(s, 2 * k + 1)
            apps = [solve_type1(bt, sd, k)]
            if k >= 1:
                apps += [solve_type3(bt, sd, k), solve_type2(bt, sd, k)]
            for app in apps:
                col = {"III": 2, "II": 1, "I": 0}[app.kind]
                assert app.num_z == a.entry(0, col)
                assert app.num_w == a.entry(1, col)
                assert app.den == a.entry(2, col)


def test_recurrence_reproduces_chain():
    rng = random.Random(12)
    for _ in range(4):
        sd = random_spectral(rng.randint(1, 5), rng)
        n = sd.n
        bt = bimoments(sd, n - 1)
        s = recover(sd)
        phat, q, p = recurrence_sequences(s)
        for k in range(n):
            apps = [solve_type1(bt, sd, k)]
            if k >= 1:
                apps += [solve_type3(bt, sd, k), solve_type2(bt, sd, k)]
            for app in apps:
                j = app.chain_index
                assert q[j] == app.den, (n, j)
                assert p[j] == app.num_w, (n, j)
                assert phat[j] == app.num_z, (n, j)


def test_single_mass_recovery():
    sd = SpectralData((), (), F(7, 3))
    s = recover(sd)
    assert s.masses == (F(7, 3),)
    assert s.gaps == ()


def test_random_spectral_deterministic_and_wire():
    a = random_spectral(4, 17)
    b = random_spectral(4, 17)
    assert a == b
    validate_spectral(a)
    again = spectral_from_dict(spectral_to_dict(a))
    assert again == a
    with pytest.raises(ValueError):
        spectral_from_dict({"lambdas": ["1"]})
