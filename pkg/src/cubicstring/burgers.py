"""Isospectral evolution of peaked waves u(x,t) = sum m_k(t) |x - x_k(t)|.

The motion of the peaks is the ODE system

    dx_k/dt = sum_i m_i |x_k - x_i|
    dm_k/dt = 2 m_k sum_i m_i sgn(i - k)

where sgn(i - k) stands in for sgn(x_i - x_k): with positive momenta the
ordering never breaks, so the two agree, and the index form has no
discontinuity at near-collisions.  Two integrators are provided:

  * integrate_rk4: classical fixed-step fourth-order integration of the
    ODEs in double precision.

  * evolve_spectral: the exact route.  The initial state is promoted to
    an exact rational string, its spectrum is isolated once to the
    requested precision, and each requested time is hit directly by
    scaling the residues, b_k(t) = b_k(0) e^{Mt}, and running the
    inverse map.  Eigenvalues and total mass never change along the
    flow, so every recovered string shares them bitwise, and the chain
    invariants M_j are constant by construction, not by accuracy.

The inverse map fixes the string only up to translation.  The missing
scalar is pinned by the first moment M+ = sum m_k x_k: differentiating
along the flow makes the m-dot and x-dot contributions cancel exactly,
so M+ is conserved, and the anchor at time t is the unique value making
sum m_k(t) x_k(t) equal to its initial value.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import floor

from .errors import (
    EmptyStringError,
    NonPositiveMassError,
    OrderingViolatedError,
)
from .exact import RatInterval, simplest_rational_between
from .forward import DEFAULT_PRECISION_BITS, residues, spectrum
from .inverse import SpectralData, recover, z_residues_of
from .string_model import ConservedSet, CubicString, invariant_masses, positions


@dataclass(frozen=True)
class WaveState:
    time: float
    positions: tuple[float, ...]
    momenta: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(float(x) for x in self.positions))
        object.__setattr__(self, "momenta", tuple(float(m) for m in self.momenta))
        if not self.positions:
            raise EmptyStringError("a wave needs at least one peak")
        if len(self.positions) != len(self.momenta):
            raise ValueError("one momentum per peak required")
        _check_ordering(self.positions)
        for m in self.momenta:
            if m <= 0:
                raise NonPositiveMassError(f"momentum {m} is not positive")

    @property
    def n(self) -> int:
        return len(self.positions)


@dataclass(frozen=True)
class Trajectory:
    samples: tuple[tuple[float, WaveState, ConservedSet], ...]

    def __post_init__(self):
        times = [t for t, _, _ in self.samples]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("sample times must be strictly increasing")


def _check_ordering(xs) -> None:
    for a, b in zip(xs, xs[1:]):
        if b <= a:
            raise OrderingViolatedError(f"peaks out of order: {a} !< {b}")


def _rhs_arrays(xs, ms):
    _check_ordering(xs)
    n = len(xs)
    dx = [sum(ms[i] * abs(x - xs[i]) for i in range(n)) for x in xs]
    dm = [2 * ms[k] * (sum(ms[k + 1:]) - sum(ms[:k])) for k in range(n)]
    return dx, dm


def rhs(state: WaveState):
    """Peak velocities and momentum transfer rates."""
    return _rhs_arrays(state.positions, state.momenta)


def conserved_floats(xs, ms) -> ConservedSet:
    return ConservedSet(sum(ms), sum(m * x for m, x in zip(ms, xs)),
                        tuple(invariant_masses(ms, xs)))


def _rk4_step(xs, ms, h):
    kx1, km1 = _rhs_arrays(xs, ms)
    kx2, km2 = _rhs_arrays([x + h / 2 * d for x, d in zip(xs, kx1)],
                           [m + h / 2 * d for m, d in zip(ms, km1)])
    kx3, km3 = _rhs_arrays([x + h / 2 * d for x, d in zip(xs, kx2)],
                           [m + h / 2 * d for m, d in zip(ms, km2)])
    kx4, km4 = _rhs_arrays([x + h * d for x, d in zip(xs, kx3)],
                           [m + h * d for m, d in zip(ms, km3)])
    xs = [x + h / 6 * (a + 2 * b + 2 * c + d)
          for x, a, b, c, d in zip(xs, kx1, kx2, kx3, kx4)]
    ms = [m + h / 6 * (a + 2 * b + 2 * c + d)
          for m, a, b, c, d in zip(ms, km1, km2, km3, km4)]
    return xs, ms


def integrate_rk4(s0: WaveState, dt: float, t_end: float,
                  samples: int = 11) -> Trajectory:
    """Fixed-step RK4 from s0.time over a window of length t_end.

    Records `samples` evenly spaced rows including both endpoints; the
    step lands exactly on each sample time (the last step into a sample
    is shortened when dt does not divide the interval).
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    if t_end <= 0:
        raise ValueError("t_end must be positive")
    if samples < 2:
        raise ValueError("need at least the two endpoint samples")
    xs, ms = list(s0.positions), list(s0.momenta)
    t0 = s0.time
    rows = [(t0, s0, conserved_floats(xs, ms))]
    t = t0
    for j in range(1, samples):
        target = t0 + t_end * j / (samples - 1)
        whole = floor((target - t) / dt + 1e-9)
        for _ in range(whole):
            xs, ms = _rk4_step(xs, ms, dt)
            t += dt
        if target - t > 1e-9 * dt:
            xs, ms = _rk4_step(xs, ms, target - t)
        t = target
        state = WaveState(t, tuple(xs), tuple(ms))
        rows.append((t, state, conserved_floats(xs, ms)))
    return Trajectory(tuple(rows))


# -- the exact spectral route ----------------------------------------------

def rationalize(state: WaveState) -> CubicString:
    """Promote a float state to the exact rational string it denotes."""
    xs = [Fraction(x) for x in state.positions]
    return CubicString(tuple(Fraction(m) for m in state.momenta),
                       tuple(b - a for a, b in zip(xs, xs[1:])),
                       xs[-1])


def _point_value(v) -> Fraction:
    if isinstance(v, RatInterval):
        return simplest_rational_between(v.lo, v.hi)
    return Fraction(v)


def spectral_snapshot(s: CubicString,
                      precision_bits: int) -> tuple[SpectralData, Fraction]:
    """Rational spectral data for s, plus its first moment.

    Enclosures are collapsed to the simplest rational they contain, so
    the data is exact from here on; the collapse error is bounded by
    the isolation width 2**-precision_bits.
    """
    width = Fraction(1, 2 ** precision_bits)
    wd = residues(spectrum(s, width=width), precision_bits)
    lams = tuple(e.exact if e.is_exact
                 else simplest_rational_between(e.lo, e.hi)
                 for e in wd.eigenvalues)
    bs = tuple(_point_value(b) for b in wd.w_residues)
    total = sum(s.masses, Fraction(0))
    xs = positions(s)
    first = sum((m * x for m, x in zip(s.masses, xs)), Fraction(0))
    return SpectralData(lams, bs, total), first


def scale_factor(total_mass: Fraction, t: float,
                 precision_bits: int) -> Fraction:
    """Rational approximation of e^(M t) at the working precision."""
    x = total_mass * Fraction(t)
    digits = max(30, int(precision_bits * 0.302) + 10)
    with localcontext() as ctx:
        ctx.prec = digits
        val = (Decimal(x.numerator) / Decimal(x.denominator)).exp()
    return Fraction(val)


def evolved_data(sd0: SpectralData, t: float,
                 precision_bits: int) -> SpectralData:
    """Residues scaled by e^(Mt); eigenvalues and mass untouched."""
    sigma = scale_factor(sd0.total_mass, t, precision_bits)
    return SpectralData(sd0.eigenvalues,
                        tuple(b * sigma for b in sd0.residues),
                        sd0.total_mass)


def evolve_spectral_exact(
        s0: WaveState, times, precision_bits: int | None = None,
) -> list[tuple[float, CubicString, SpectralData]]:
    """Exact-route evolution; strings carry the M+-pinned anchor."""
    if precision_bits is None:
        precision_bits = int(os.environ.get("CUBICSTRING_PRECISION_BITS",
                                            DEFAULT_PRECISION_BITS))
    base = rationalize(s0)
    sd0, first_moment = spectral_snapshot(base, precision_bits)
    total = sd0.total_mass
    out = []
    for t in times:
        sd_t = evolved_data(sd0, float(t) - s0.time, precision_bits)
        bare = recover(sd_t)
        # anchor a solving sum m_k (offset_k + a) = M+(0)
        offs = positions(bare)  # anchored at zero: these are x_k - x_n
        hang = sum((m * o for m, o in zip(bare.masses, offs)), Fraction(0))
        anchor = (first_moment - hang) / total
        out.append((float(t), CubicString(bare.masses, bare.gaps, anchor),
                    sd_t))
    return out


def evolve_spectral(s0: WaveState, times,
                    precision_bits: int | None = None) -> Trajectory:
    """Spectral-route trajectory at the requested times, as floats."""
    rows = []
    for t, s, _ in evolve_spectral_exact(s0, times, precision_bits):
        xs = [float(x) for x in positions(s)]
        ms = [float(m) for m in s.masses]
        state = WaveState(t, tuple(xs), tuple(ms))
        c = ConservedSet(
            float(sum(s.masses, Fraction(0))),
            float(sum((m * x for m, x in zip(s.masses, positions(s))),
                      Fraction(0))),
            tuple(float(v) for v in invariant_masses(
                s.masses, positions(s))))
        rows.append((t, state, c))
    return Trajectory(tuple(rows))


def residue_ratio_exactness(sd0: SpectralData, sd_t: SpectralData) -> bool:
    """c_k(t)/c_k(0) == (b_k(t)/b_k(0))**2, exactly, for every k."""
    c0 = z_residues_of(sd0)
    ct = z_residues_of(sd_t)
    return all(ct[k] * sd0.residues[k] ** 2 == c0[k] * sd_t.residues[k] ** 2
               for k in range(len(c0)))
