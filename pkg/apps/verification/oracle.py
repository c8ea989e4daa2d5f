"""
Reference implementations used to cross-check the spline library.

Nothing here is on the evaluation path. The series are summed term by term
at a large truncation with compensated summation, the classical periodic
cubic spline is built from its moment equations, and integrals use
composite Simpson quadrature.
"""
import enum
import logging
from dataclasses import dataclass
from math import fsum, pi

import numpy as np
from scipy.integrate import simpson
from scipy.linalg import solve_banded

from apps.interpolation.exceptions import ConfigurationError
from apps.interpolation.factors import FactorKind
from apps.interpolation.grids import GridFamily, GridSpec
from apps.interpolation.kernels import tail_bound

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleConfig:
    reference_terms: int = 10 ** 6
    quadrature_points: int = 10 ** 4

    def __post_init__(self):
        if self.reference_terms < 1:
            raise ConfigurationError(f'reference terms must be >= 1, got {self.reference_terms}')
        if self.quadrature_points < 2 or self.quadrature_points % 2:
            raise ConfigurationError(f'quadrature needs an even number of intervals, got {self.quadrature_points}')


class SeriesId(str, enum.Enum):
    H_FULL = 'h_full'
    C_FULL = 'c_full'
    S_FULL = 's_full'
    H_EVEN = 'h_even'
    C_EVEN = 'c_even'
    H_ODD = 'h_odd'
    S_ODD = 's_odd'

    @property
    def family(self):
        return GridFamily(self.value.split('_')[1])

    @property
    def is_denominator(self):
        return self.value.startswith('h_')

    @property
    def trig(self):
        return np.sin if self.value.startswith('s_') else np.cos


@dataclass(frozen=True)
class SeriesParams:
    """
    Arguments of one kernel series. `i1` selects the knot grid of full
    numerators; `i2` is the grid indicator of even and odd series.
    """

    factor: object
    r: int
    k: int
    n_nodes: int
    q: int = 0
    i1: int = 0
    i2: int = 0

    def period(self, series):
        n = self.n_nodes
        if series.family is GridFamily.FULL:
            return n
        if series.family is GridFamily.EVEN:
            return 2 * (n - 1) if self.i2 == 0 else 2 * n
        return 2 * (n + 1) if self.i2 == 0 else 2 * n

    def alternation(self, series):
        if series is SeriesId.H_FULL:
            return (self.i1 + self.i2) % 2
        if series in (SeriesId.C_FULL, SeriesId.S_FULL):
            return self.i1
        if series is SeriesId.H_EVEN:
            return self.i2
        if series is SeriesId.S_ODD:
            return self.i2
        return 0

    def reflection(self, series):
        if series.family is not GridFamily.FULL:
            return 1.0
        if self.factor.kind is FactorKind.RIEMANN and not self.factor.sign_constant:
            return 1.0
        return (-1.0) ** (1 + self.r)


def multiplier(factor, r, nu, period):
    """The convergence factor written out directly."""
    nu = np.asarray(nu, dtype=np.float64)
    if factor.kind is FactorKind.POWER:
        return nu ** -(1.0 + r)
    x = pi * nu / period
    ratio = np.sin(x) / x
    if factor.sign_constant:
        ratio = np.abs(ratio)
    return ratio ** (1 + r)


def brute_series(series, params, t=0.0, config=None):
    """One kernel value, summed in ascending m with `math.fsum`."""
    series = SeriesId(series)
    config = config or OracleConfig()
    period = params.period(series)
    rho = params.reflection(series)
    k = params.k
    m = np.arange(1, config.reference_terms + 1, dtype=np.float64)
    sign = np.where(np.arange(1, m.size + 1) * params.alternation(series) % 2 == 1, -1.0, 1.0)
    plus = m * period + k
    minus = m * period - k

    if series.is_denominator:
        lead = float(multiplier(params.factor, params.r, k, period))
        pairs = sign * (multiplier(params.factor, params.r, plus, period) + rho * multiplier(params.factor, params.r, minus, period))
        return fsum([lead, *pairs.tolist()])

    q, trig = params.q, series.trig
    phase = q * pi / 2.0
    minus_sign = -rho if trig is np.sin else rho

    def term(nu):
        return multiplier(params.factor, params.r, nu, period) * nu ** q * trig(nu * t + phase)

    lead = float(term(np.float64(k)))
    pairs = sign * (term(plus) + minus_sign * term(minus))
    return fsum([lead, *pairs.tolist()])


def tail_estimate(series, params, config=None):
    """Analytic bound on what the reference sum leaves out."""
    config = config or OracleConfig()
    period = params.period(series)
    q = 0 if SeriesId(series).is_denominator else params.q
    return tail_bound(params.factor.with_period(period), params.r, q, params.k, period, config.reference_terms)


class PeriodicCubicSpline:
    """
    The C² periodic cubic spline through samples on Δ1^(0).

    Second-derivative moments solve the cyclic system
    M_{j-1} + 4 M_j + M_{j+1} = 6 (f_{j+1} - 2 f_j + f_{j-1}) / h²
    by Sherman-Morrison around a banded solve.
    """

    def __init__(self, samples):
        grid = samples.grid
        if grid.family is not GridFamily.FULL or grid.indicator != 0:
            raise ConfigurationError(f'periodic cubic spline needs samples on full grid I=0, got {grid}')
        self.values = np.asarray(samples.values, dtype=np.float64)
        self.n = self.values.size
        self.h = 2.0 * pi / self.n
        rhs = 6.0 * (np.roll(self.values, -1) - 2.0 * self.values + np.roll(self.values, 1)) / self.h ** 2
        self.moments = _solve_cyclic(self.n, rhs)

    def __call__(self, t):
        points = np.atleast_1d(np.asarray(t, dtype=np.float64))
        s = np.remainder(points, 2.0 * pi)
        j = np.minimum((s // self.h).astype(np.int64), self.n - 1)
        tau = s - j * self.h
        after = (j + 1) % self.n
        h = self.h
        m0, m1 = self.moments[j], self.moments[after]
        f0, f1 = self.values[j], self.values[after]
        values = (
            m0 * (h - tau) ** 3 / (6.0 * h)
            + m1 * tau ** 3 / (6.0 * h)
            + (f0 - m0 * h * h / 6.0) * (h - tau) / h
            + (f1 - m1 * h * h / 6.0) * tau / h
        )
        if np.ndim(t) == 0:
            return float(values[0])
        return values


def _solve_cyclic(n, rhs):
    """Solve the circulant system with 4 on the diagonal and 1 beside it."""
    gamma = -4.0
    ab = np.zeros((3, n))
    ab[0, 1:] = 1.0
    ab[1, :] = 4.0
    ab[2, :-1] = 1.0
    ab[1, 0] -= gamma
    ab[1, -1] -= 1.0 / gamma

    u = np.zeros(n)
    u[0] = gamma
    u[-1] = 1.0
    y = solve_banded((1, 1), ab, rhs)
    z = solve_banded((1, 1), ab, u)
    # v = (1, 0, ..., 0, 1/gamma)
    v_y = y[0] + y[-1] / gamma
    v_z = z[0] + z[-1] / gamma
    return y - (v_y / (1.0 + v_z)) * z


def periodic_cubic_spline(samples):
    return PeriodicCubicSpline(samples)


def _cardinal_cubic(x):
    ax = np.abs(x)
    return np.where(
        ax < 1.0,
        2.0 / 3.0 - ax ** 2 + ax ** 3 / 2.0,
        np.where(ax < 2.0, (2.0 - ax) ** 3 / 6.0, 0.0),
    )


def periodic_cubic_bspline(n_nodes, j):
    """
    The uniform cubic B-spline on the circle centred at x_j of Δ1^(0),
    scaled to unit integral over one period.
    """
    grid = GridSpec(GridFamily.FULL, 0, n_nodes)
    if not 1 <= j <= n_nodes:
        raise ConfigurationError(f'B-spline index {j} outside 1..{n_nodes}')
    centre = 2.0 * pi * (j - 1) / n_nodes
    h = 2.0 * pi / grid.n_nodes

    def bspline(t):
        points = np.atleast_1d(np.asarray(t, dtype=np.float64))
        d = np.remainder(points - centre + pi, 2.0 * pi) - pi
        values = sum(_cardinal_cubic((d + 2.0 * pi * p) / h) for p in (-1, 0, 1)) / h
        if np.ndim(t) == 0:
            return float(values[0])
        return values

    return bspline


def quadrature_unit_integral(func, config=None):
    """∫ func over [-π, π] by composite Simpson."""
    config = config or OracleConfig()
    t = np.linspace(-pi, pi, config.quadrature_points + 1)
    integral = float(simpson(np.asarray(func(t), dtype=np.float64), x=t))
    logger.debug('quadrature over %d intervals: %.15f', config.quadrature_points, integral)
    return integral
