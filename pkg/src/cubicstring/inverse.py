"""Inverse spectral map: from eigenvalues and residues back to the string.

Spectral data is the triple (eigenvalues lam_1 < ... < lam_{n-1}, their
slope-residues b_k < 0, total mass M > 0).  It determines two discrete
measures: mu with weights b_k at the lam_k, and the value-measure nu
with weights c_k at lam_k plus the atom -1/(2M) at zero, where the c_k
are forced by the reflection symmetry of the Weyl functions:

    c_k = - sum_j b_j b_k / (lam_j + lam_k).

Everything downstream is built from the moments beta_j = sum b lam^j
and the symmetric pair table

    I_ij = sum_{a,b} b_a b_b lam_a^i lam_b^j / (lam_a + lam_b).

Six families of minors of that table drive the closed-form recovery;
they are named here by the block they cut out of the pair table:

    corner[k]        det I[0:k, 0:k]
    mass_corner[k]   the same with 1/(2M) added at the (0,0) entry
    inner[k]         det I[1:k+1, 1:k+1]
    shifted[k]       det I[1:k+1, 0:k]
    beta_shifted[k]  shifted block, first column replaced by the moments
    beta_inner[k]    inner block, first column replaced by the moments

The string is rebuilt through a chain of simultaneous rational
approximation problems to the two Weyl functions (three problem shapes,
cycling with period three); the leading coefficient of each denominator
hands back one mass or one gap.  The same chain satisfies a four-term
recurrence whose coefficients are the recovered masses and gaps, and
equals the entries of the forward partial crossing products; both facts
are kept as cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .errors import (
    IdentityViolatedError,
    NonPositiveRecoveryError,
    SpectralValidationError,
)
from .exact import (
    LaurentSeries,
    Matrix,
    Polynomial,
    det_exact,
    format_rational,
    parse_rational,
    poly_product,
    solve_exact,
)
from .string_model import CubicString


@dataclass(frozen=True)
class SpectralData:
    eigenvalues: tuple[Fraction, ...]
    residues: tuple[Fraction, ...]   # slope-residues b_k, all negative
    total_mass: Fraction

    def __post_init__(self):
        object.__setattr__(self, "eigenvalues",
                           tuple(Fraction(x) for x in self.eigenvalues))
        object.__setattr__(self, "residues",
                           tuple(Fraction(x) for x in self.residues))
        object.__setattr__(self, "total_mass", Fraction(self.total_mass))

    @property
    def n(self) -> int:
        """Number of masses of the string this data describes."""
        return len(self.eigenvalues) + 1


def validate_spectral(sd: SpectralData) -> None:
    if len(sd.residues) != len(sd.eigenvalues):
        raise SpectralValidationError("one residue per eigenvalue required")
    if sd.total_mass <= 0:
        raise SpectralValidationError("total mass must be positive")
    prev = Fraction(0)
    for lam in sd.eigenvalues:
        if lam <= prev:
            raise SpectralValidationError(
                "eigenvalues must be strictly increasing and positive")
        prev = lam
    for b in sd.residues:
        if b >= 0:
            raise SpectralValidationError("slope-residues must be negative")


def z_residues_of(sd: SpectralData) -> tuple[Fraction, ...]:
    """Value-residues c_k forced by the reflection symmetry."""
    lams, bs = sd.eigenvalues, sd.residues
    out = []
    for k, lam_k in enumerate(lams):
        out.append(-sum((bj * bs[k] / (lj + lam_k) for lj, bj in zip(lams, bs)),
                        Fraction(0)))
    return tuple(out)


@dataclass(frozen=True)
class BimomentTable:
    total_mass: Fraction
    moments: tuple[Fraction, ...]               # beta_0..beta_max_order
    pair_table: tuple[tuple[Fraction, ...], ...]  # I_ij, 0 <= i,j <= max_order
    z_residues: tuple[Fraction, ...]

    @property
    def max_order(self) -> int:
        return len(self.moments) - 1


def bimoments(sd: SpectralData, max_order: int) -> BimomentTable:
    validate_spectral(sd)
    return table_from_support(sd.eigenvalues, sd.residues, sd.total_mass,
                              max_order)


def table_from_support(lams, bs, total_mass, max_order: int) -> BimomentTable:
    """Moments and pair table of an arbitrary weighted point set; no sign
    constraints are imposed (the constrained entry point is bimoments)."""
    lams = tuple(Fraction(x) for x in lams)
    bs = tuple(Fraction(x) for x in bs)
    powers = [[lam ** j for j in range(max_order + 1)] for lam in lams]
    beta = tuple(sum((b * pw[j] for b, pw in zip(bs, powers)), Fraction(0))
                 for j in range(max_order + 1))
    table = []
    for i in range(max_order + 1):
        row = []
        for j in range(max_order + 1):
            if j < i:
                row.append(table[j][i])  # symmetry
                continue
            acc = Fraction(0)
            for a, (la, ba) in enumerate(zip(lams, bs)):
                for b_, (lb, bb) in enumerate(zip(lams, bs)):
                    acc += ba * bb * powers[a][i] * powers[b_][j] / (la + lb)
            row.append(acc)
        table.append(row)
    zres = tuple(-sum((bj * bs[k] / (lj + lams[k])
                       for lj, bj in zip(lams, bs)), Fraction(0))
                 for k in range(len(lams)))
    return BimomentTable(Fraction(total_mass), beta,
                         tuple(tuple(r) for r in table), zres)


# -- minors of the pair table ------------------------------------------

def minor_corner(bt: BimomentTable, k: int) -> Fraction:
    t = bt.pair_table
    return det_exact(Matrix([[t[i][j] for j in range(k)] for i in range(k)]))


def minor_mass_corner(bt: BimomentTable, k: int) -> Fraction:
    t = bt.pair_table
    rows = [[t[i][j] for j in range(k)] for i in range(k)]
    if k >= 1:
        rows[0][0] = rows[0][0] + 1 / (2 * bt.total_mass)
    return det_exact(Matrix(rows))


def minor_inner(bt: BimomentTable, k: int) -> Fraction:
    t = bt.pair_table
    return det_exact(Matrix([[t[i][j] for j in range(1, k + 1)]
                             for i in range(1, k + 1)]))


def minor_shifted(bt: BimomentTable, k: int) -> Fraction:
    t = bt.pair_table
    return det_exact(Matrix([[t[i][j] for j in range(k)]
                             for i in range(1, k + 1)]))


def minor_beta_shifted(bt: BimomentTable, k: int) -> Fraction:
    t = bt.pair_table
    rows = [[bt.moments[i - 1]] + [t[i][j] for j in range(k - 1)]
            for i in range(1, k + 1)]
    return det_exact(Matrix(rows)) if k >= 1 else Fraction(1)


def minor_beta_inner(bt: BimomentTable, k: int) -> Fraction:
    t = bt.pair_table
    rows = [[bt.moments[i - 1]] + [t[i][j] for j in range(1, k)]
            for i in range(1, k + 1)]
    return det_exact(Matrix(rows)) if k >= 1 else Fraction(1)


@dataclass(frozen=True)
class MomentMinors:
    """The six minor sequences, indexed by size k starting at 0 (empty
    determinants are 1 by convention)."""

    mass_corner: tuple[Fraction, ...]
    corner: tuple[Fraction, ...]
    inner: tuple[Fraction, ...]
    shifted: tuple[Fraction, ...]
    beta_shifted: tuple[Fraction, ...]
    beta_inner: tuple[Fraction, ...]


def moment_minors(bt: BimomentTable) -> MomentMinors:
    """All minors the table can support: corner families one size past
    the table order, the rest up to the order itself."""
    top = bt.max_order + 1
    return MomentMinors(
        mass_corner=tuple(minor_mass_corner(bt, k) for k in range(top + 1)),
        corner=tuple(minor_corner(bt, k) for k in range(top + 1)),
        inner=tuple(minor_inner(bt, k) for k in range(top)),
        shifted=tuple(minor_shifted(bt, k) for k in range(top)),
        beta_shifted=tuple(minor_beta_shifted(bt, k) for k in range(top)),
        beta_inner=tuple(minor_beta_inner(bt, k) for k in range(top)),
    )


# -- Weyl functions as series and as exact fractions ---------------------

def w_series(sd: SpectralData, low_cutoff: int) -> LaurentSeries:
    """Slope Weyl function sum b_k/(z - lam_k) expanded at infinity."""
    coeffs = {}
    for i in range(1, -low_cutoff + 1):
        coeffs[-i] = sum((b * lam ** (i - 1)
                          for lam, b in zip(sd.eigenvalues, sd.residues)),
                         Fraction(0))
    return LaurentSeries(coeffs, low_cutoff)


def z_series(sd: SpectralData, low_cutoff: int) -> LaurentSeries:
    """Value Weyl function: atom -1/(2M) at zero plus sum c_k/(z - lam_k)."""
    cs = z_residues_of(sd)
    coeffs = {}
    for i in range(1, -low_cutoff + 1):
        v = sum((c * lam ** (i - 1) for lam, c in zip(sd.eigenvalues, cs)),
                Fraction(0))
        if i == 1:
            v -= 1 / (2 * sd.total_mass)
        coeffs[-i] = v
    return LaurentSeries(coeffs, low_cutoff)


def weyl_fractions(sd: SpectralData) -> tuple[Polynomial, Polynomial,
                                              Polynomial, Polynomial]:
    """(num_w, den_w, num_z, den_z): both Weyl functions as exact ratios."""
    lams, bs = sd.eigenvalues, sd.residues
    z = Polynomial.x()
    den_w = poly_product([z - Polynomial.constant(lam) for lam in lams])
    num_w = Polynomial.zero()
    cs = z_residues_of(sd)
    num_z = Polynomial.constant(Fraction(-1) / (2 * sd.total_mass)) * den_w
    for k, lam in enumerate(lams):
        others = poly_product([z - Polynomial.constant(l2)
                               for j, l2 in enumerate(lams) if j != k])
        num_w = num_w + Polynomial.constant(bs[k]) * others
        num_z = num_z + Polynomial.constant(cs[k]) * others.shifted(1)
    den_z = den_w.shifted(1)
    return num_w, den_w, num_z, den_z


def verify_weyl_relation(sd: SpectralData) -> None:
    """Exact check of Z(z) + Z(-z) = W(z) W(-z), cross-multiplied."""
    num_w, den_w, num_z, den_z = weyl_fractions(sd)
    lhs = (num_z * den_z.reflected() + num_z.reflected() * den_z) \
        * den_w * den_w.reflected()
    rhs = num_w * num_w.reflected() * den_z * den_z.reflected()
    if lhs != rhs:
        raise IdentityViolatedError("Weyl sum-product relation failed exactly")


# -- the three approximation problems ------------------------------------

@dataclass(frozen=True)
class Approximant:
    """One step of the approximation chain.

    kind III: den(0) = 1, degrees (k, k-1, k-1)
    kind II:  den(0) = 0, num_w(0) = 1, degrees (k, k-1, k-1)
    kind I:   den(0) = 0, num_w(0) = 0, num_z(0) = 1, degrees (k+1, k, k)
    chain_index is 3k, 3k+1, 3k+2 respectively.
    """

    kind: str
    k: int
    den: Polynomial
    num_w: Polynomial
    num_z: Polynomial

    @property
    def chain_index(self) -> int:
        return 3 * self.k + {"III": 0, "II": 1, "I": 2}[self.kind]


def _nonneg_projection_w(bt: BimomentTable, sd: SpectralData,
                         den: Polynomial) -> Polynomial:
    """Polynomial part of W * den via difference quotients."""
    acc = Polynomial.zero()
    for lam, b in zip(sd.eigenvalues, sd.residues):
        acc = acc + Polynomial.constant(b) * den.difference_quotient(lam)
    return acc


def _nonneg_projection_z(bt: BimomentTable, sd: SpectralData,
                         den: Polynomial) -> Polynomial:
    """Polynomial part of Z * den, including the atom at zero."""
    acc = Polynomial.constant(Fraction(-1) / (2 * bt.total_mass)) \
        * den.difference_quotient(Fraction(0))
    for lam, c in zip(sd.eigenvalues, bt.z_residues):
        acc = acc + Polynomial.constant(c) * den.difference_quotient(lam)
    return acc


def solve_type3(bt: BimomentTable, sd: SpectralData, k: int) -> Approximant:
    """den(0) = 1 normalization; system det is shifted[k]."""
    if not 1 <= k <= bt.max_order:
        raise ValueError(f"type III index {k} outside the table")
    t = bt.pair_table
    mat = Matrix([[t[i][j] for j in range(1, k + 1)] for i in range(k)])
    rhs = [-(t[i][0] + (Fraction(1) / (2 * bt.total_mass) if i == 0 else 0))
           for i in range(k)]
    q = solve_exact(mat, rhs)
    den = Polynomial((Fraction(1),) + q)
    num_w = _nonneg_projection_w(bt, sd, den)
    num_z = _nonneg_projection_z(bt, sd, den)
    return Approximant("III", k, den, num_w, num_z)


def solve_type2(bt: BimomentTable, sd: SpectralData, k: int) -> Approximant:
    """den(0) = 0, num_w(0) = 1; system det is shifted[k]."""
    if not 1 <= k <= bt.max_order:
        raise ValueError(f"type II index {k} outside the table")
    t = bt.pair_table
    mat = Matrix([[t[i][j] for j in range(k)] for i in range(1, k + 1)])
    rhs = [bt.moments[i] for i in range(k)]
    q = solve_exact(mat, rhs)
    den = Polynomial((Fraction(0),) + q)
    proj = _nonneg_projection_w(bt, sd, den)
    num_w = proj - proj.coefficient(0) + 1
    num_z = _nonneg_projection_z(bt, sd, den)
    return Approximant("II", k, den, num_w, num_z)


def solve_type1(bt: BimomentTable, sd: SpectralData, k: int) -> Approximant:
    """den(0) = num_w(0) = 0, num_z(0) = 1; system det is mass_corner[k+1]."""
    if not 0 <= k <= bt.max_order:
        raise ValueError(f"type I index {k} outside the table")
    t = bt.pair_table
    rows = [[t[i][j] for j in range(k + 1)] for i in range(k + 1)]
    rows[0][0] = rows[0][0] + Fraction(1) / (2 * bt.total_mass)
    rhs = [Fraction(-1)] + [Fraction(0)] * k
    q = solve_exact(Matrix(rows), rhs)
    den = Polynomial((Fraction(0),) + q)
    proj = _nonneg_projection_w(bt, sd, den)
    num_w = proj - proj.coefficient(0)
    num_z = _nonneg_projection_z(bt, sd, den)
    if num_z.coefficient(0) != 1:
        raise IdentityViolatedError("type I value-numerator normalization failed")
    return Approximant("I", k, den, num_w, num_z)


def verify_approximant(sd: SpectralData, app: Approximant) -> None:
    """Degrees, normalizations and truncated-series order conditions.

    The order conditions, with W and Z the two Weyl series:
        den * Z - num_z = O(1/z)            (all kinds)
        den * W - num_w = O(1/z) for kind III, O(1) for kinds II and I
        num_z + num_w W*(z) + den Z*(z) = O(z^-(k+1))
    where W*(z) = -W(-z) and Z*(z) = Z(-z).
    """
    k = app.k
    if app.kind == "I":
        # at k = 0 the slope numerator is identically zero (degree -1)
        want = (k + 1, k if k >= 1 else -1, k)
    else:
        want = (k, k - 1, k - 1)
    got = (app.den.degree, app.num_w.degree, app.num_z.degree)
    if got != want:
        raise IdentityViolatedError(f"degree pattern {got} != {want}")
    if app.kind == "III" and app.den.coefficient(0) != 1:
        raise IdentityViolatedError("kind III needs den(0) = 1")
    if app.kind in ("II", "I") and app.den.coefficient(0) != 0:
        raise IdentityViolatedError("kinds II and I need den(0) = 0")
    if app.kind == "II" and app.num_w.coefficient(0) != 1:
        raise IdentityViolatedError("kind II needs num_w(0) = 1")
    if app.kind == "I" and (app.num_w.coefficient(0) != 0
                            or app.num_z.coefficient(0) != 1):
        raise IdentityViolatedError("kind I normalization failed")

    cutoff = -(2 * k + 4)
    w = w_series(sd, cutoff)
    zs = z_series(sd, cutoff)
    w_star = -w.reflected()
    z_star = zs.reflected()

    diff_z = zs * app.den - app.num_z
    if not diff_z.is_big_O(-1):
        raise IdentityViolatedError("value-side approximation order failed")
    diff_w = w * app.den - app.num_w
    order_w = -1 if app.kind == "III" else 0
    if not diff_w.is_big_O(order_w):
        raise IdentityViolatedError("slope-side approximation order failed")
    sym = (LaurentSeries.from_polynomial(app.num_z)
           + w_star * app.num_w + z_star * app.den)
    if not sym.is_big_O(-(k + 1)):
        raise IdentityViolatedError("symmetry order condition failed")


def last_step(sd: SpectralData) -> Approximant:
    """The final chain entry: its ratios ARE the Weyl functions.

    den = -2 M z prod (1 - z/lam_j); num_w/den = W and num_z/den = Z
    exactly; all three facts are verified before returning.
    """
    n = sd.n
    bt = bimoments(sd, n - 1)
    app = solve_type1(bt, sd, n - 1)
    z = Polynomial.x()
    expect = Polynomial.constant(-2 * sd.total_mass) * z
    for lam in sd.eigenvalues:
        expect = expect * (Polynomial.one() - z * Polynomial.constant(1 / lam))
    if app.den != expect:
        raise IdentityViolatedError("final denominator is not the spectral polynomial")
    num_w, den_w, num_z, den_z = weyl_fractions(sd)
    if app.num_w * den_w != num_w * app.den:
        raise IdentityViolatedError("final slope ratio is not exactly W")
    if app.num_z * den_z != num_z * app.den:
        raise IdentityViolatedError("final value ratio is not exactly Z")
    return app


# -- four-term recurrence ------------------------------------------------

def recurrence_sequences(s: CubicString) -> tuple[dict, dict, dict]:
    """Run the chain recurrence from the three seed vectors.

    X_{3k}   = (l^2/2) X_{3k-1} + l X_{3k-2} + X_{3k-3}     (l = gap n-k)
    X_{3k+1} = l X_{3k-1} + X_{3k-2}
    X_{3k+2} = -2 z m X_{3k} + X_{3k-1}                     (m = mass n-k)

    Seeds (X_-1, X_0, X_1) = (1,0,0), (0,1,0), (0,0,1) generate the
    value-numerator, denominator and slope-numerator chains; returns
    the three dicts keyed by chain index up to 3n-1.
    """
    n = s.n
    z = Polynomial.x()
    out = []
    for seed in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        x = {-1: Polynomial.constant(seed[0]),
             0: Polynomial.constant(seed[1]),
             1: Polynomial.constant(seed[2])}
        m_n = Polynomial.constant(-2 * s.masses[n - 1])
        x[2] = m_n * z * x[0] + x[-1]
        for k in range(1, n):
            gap = s.gaps[n - k - 1]
            mass = s.masses[n - k - 1]
            x[3 * k] = (Polynomial.constant(gap * gap / 2) * x[3 * k - 1]
                        + Polynomial.constant(gap) * x[3 * k - 2]
                        + x[3 * k - 3])
            x[3 * k + 1] = (Polynomial.constant(gap) * x[3 * k - 1]
                            + x[3 * k - 2])
            x[3 * k + 2] = (Polynomial.constant(-2 * mass) * z * x[3 * k]
                            + x[3 * k - 1])
        out.append(x)
    return out[0], out[1], out[2]


# -- recovery -------------------------------------------------------------

@dataclass(frozen=True)
class RecoveryRow:
    """Per-step audit: the authoritative mass against both closed forms,
    and the gap against its determinant form."""

    k: int
    mass_position: int              # 1-based index n-k of the mass
    mass: Fraction                  # from leading coefficients
    mass_cramer: Fraction           # shifted^2 / (2 mass_corner+ mass_corner)
    mass_printed: Fraction          # inner shifted / (2 mass_corner+ mass_corner)
    printed_agrees: bool
    gap_position: int | None = None
    gap: Fraction | None = None
    gap_determinant: Fraction | None = None  # -2 mass_corner / beta_shifted


@dataclass(frozen=True)
class RecoveryReport:
    string: CubicString
    minors: MomentMinors
    rows: tuple[RecoveryRow, ...]

    def to_dict(self) -> dict:
        fm = format_rational
        return {
            "string": {
                "masses": [fm(m) for m in self.string.masses],
                "gaps": [fm(g) for g in self.string.gaps],
                "anchor": fm(self.string.anchor),
            },
            "minors": {
                name: [fm(v) for v in getattr(self.minors, name)]
                for name in ("mass_corner", "corner", "inner", "shifted",
                             "beta_shifted", "beta_inner")
            },
            "steps": [
                {
                    "k": r.k,
                    "mass_position": r.mass_position,
                    "mass": fm(r.mass),
                    "mass_cramer": fm(r.mass_cramer),
                    "mass_printed": fm(r.mass_printed),
                    "printed_agrees": r.printed_agrees,
                    **({"gap_position": r.gap_position,
                        "gap": fm(r.gap),
                        "gap_determinant": fm(r.gap_determinant)}
                       if r.gap is not None else {}),
                }
                for r in self.rows
            ],
        }


def recover_detailed(sd: SpectralData) -> RecoveryReport:
    """Rebuild the string and audit every closed-form recovery formula.

    Authoritative route: leading coefficients of the three denominator
    chains,  mass_{n-k} = -lead(den_{3k+2}) / (2 lead(den_{3k}))  and
    gap_{n-k} = 2 lead(den_{3k}) / lead(den_{3k+1})  with lead(den_0)=1.

    Two closed forms for each mass ride along: the Cramer-consistent
    minor form (must agree, enforced) and the variant with the inner
    minor in place of one shifted minor (recorded, known to disagree
    in general); the gap also gets its determinant form, enforced.
    """
    validate_spectral(sd)
    n = sd.n
    bt = bimoments(sd, n - 1)
    minors = moment_minors(bt)

    lead3 = {0: Fraction(1)}
    lead2 = {}
    lead1 = {}
    for k in range(1, n):
        lead3[k] = solve_type3(bt, sd, k).den.leading
        lead2[k] = solve_type2(bt, sd, k).den.leading
    for k in range(0, n):
        lead1[k] = solve_type1(bt, sd, k).den.leading

    # minor closed forms for the chain leading coefficients (cross-checks)
    for k in range(1, n):
        if lead3[k] != (-1) ** k * minors.mass_corner[k] / minors.shifted[k]:
            raise IdentityViolatedError("type III leading-coefficient form failed")
        if lead2[k] != (-1) ** (k - 1) * minors.beta_shifted[k] / minors.shifted[k]:
            raise IdentityViolatedError("type II leading-coefficient form failed")
    for k in range(0, n):
        if lead1[k] != (-1) ** (k + 1) * minors.shifted[k] / minors.mass_corner[k + 1]:
            raise IdentityViolatedError("type I leading-coefficient form failed")

    masses = [Fraction(0)] * n
    gaps = [Fraction(0)] * (n - 1)
    rows = []
    for k in range(n):
        mass = -lead1[k] / (2 * lead3[k])
        denom = 2 * minors.mass_corner[k + 1] * minors.mass_corner[k]
        cramer = minors.shifted[k] ** 2 / denom
        printed = minors.inner[k] * minors.shifted[k] / denom
        if mass != cramer:
            raise IdentityViolatedError("Cramer mass form disagrees with leads")
        gap_fields = {}
        if 1 <= k <= n - 1:
            gap = 2 * lead3[k] / lead2[k]
            gap_det = -2 * minors.mass_corner[k] / minors.beta_shifted[k]
            if gap != gap_det:
                raise IdentityViolatedError("gap determinant form disagrees")
            gap_fields = {"gap_position": n - k, "gap": gap,
                          "gap_determinant": gap_det}
            gaps[n - k - 1] = gap
        masses[n - k - 1] = mass
        rows.append(RecoveryRow(k=k, mass_position=n - k, mass=mass,
                                mass_cramer=cramer, mass_printed=printed,
                                printed_agrees=(printed == mass),
                                **gap_fields))

    for v in masses + gaps:
        if v <= 0:
            raise NonPositiveRecoveryError(f"recovered value {v} not positive")
    return RecoveryReport(CubicString(tuple(masses), tuple(gaps)),
                          minors, tuple(rows))


def recover(sd: SpectralData) -> CubicString:
    """Inverse map; the recovered string is anchored at zero."""
    return recover_detailed(sd).string


def verify_exact_roundtrip(sd: SpectralData) -> CubicString:
    """Recover a string and certify it reproduces the data exactly.

    Checks, as rational identities with no tolerance: the masses sum to
    the total mass, the curvature polynomial equals
    -2 M z prod(1 - z/lambda_k), every lambda_k is one of its roots, and
    at each root the slope and value polynomials come out to
    b_k A'(lambda_k) and c_k A'(lambda_k).  Returns the recovered
    string; raises IdentityViolatedError on the first failure.
    """
    from .forward import boundary_data

    s = recover(sd)
    if sum(s.masses, Fraction(0)) != sd.total_mass:
        raise IdentityViolatedError("masses do not sum to the total mass")
    wd = boundary_data(s)
    z = Polynomial.x()
    expect = Polynomial.constant(-2 * sd.total_mass) * z
    for lam in sd.eigenvalues:
        expect = expect * (Polynomial.one() - z * Polynomial.constant(1 / lam))
    if wd.phi_xx != expect:
        raise IdentityViolatedError(
            "curvature polynomial is not -2Mz prod(1 - z/lambda)")
    da = wd.phi_xx.derivative()
    for lam, b, c in zip(sd.eigenvalues, sd.residues, z_residues_of(sd)):
        if wd.phi_xx(lam) != 0:
            raise IdentityViolatedError(f"{lam} is not an eigenvalue")
        if wd.phi_x(lam) != b * da(lam):
            raise IdentityViolatedError(f"slope residue at {lam} is off")
        if wd.phi(lam) != c * da(lam):
            raise IdentityViolatedError(f"value residue at {lam} is off")
    return s


# -- random data and wire format ------------------------------------------

def random_spectral(n: int, seed) -> SpectralData:
    """Deterministic random spectral data for n masses."""
    rng = seed if isinstance(seed, Random) else Random(seed)
    lams = []
    cur = Fraction(0)
    for _ in range(n - 1):
        cur += Fraction(rng.randint(1, 8), rng.randint(1, 4))
        lams.append(cur)
    res = tuple(-Fraction(rng.randint(1, 8), rng.randint(1, 4))
                for _ in range(n - 1))
    total = Fraction(rng.randint(1, 8), rng.randint(1, 4))
    return SpectralData(tuple(lams), res, total)


def spectral_to_dict(sd: SpectralData) -> dict:
    return {
        "lambdas": [format_rational(x) for x in sd.eigenvalues],
        "residues_b": [format_rational(x) for x in sd.residues],
        "total_mass": format_rational(sd.total_mass),
    }


def spectral_from_dict(d: dict) -> SpectralData:
    try:
        lams = tuple(parse_rational(x) for x in d["lambdas"])
        res = tuple(parse_rational(x) for x in d["residues_b"])
        total = parse_rational(d["total_mass"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed spectral object: {exc}") from exc
    return SpectralData(lams, res, total)
