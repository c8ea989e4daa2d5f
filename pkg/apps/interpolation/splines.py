"""
Trigonometric interpolation splines in coefficient form.

A spline is fixed by a SplineConfig: the grid family, the knot grid
indicator I1, the interpolation grid indicator I2, the convergence factor,
the order r, the derivative order q and the truncation policy. Its value is

    a0/2·I(q) + Σ_k w_k (a_k C_k(t) + b_k S_k(t)) / H_k

with the kernels of `kernels` and the coefficients of `discrete_fourier`.
"""
import logging
from dataclasses import dataclass, field

import numpy as np

from .discrete_fourier import PARITY_FOR_FAMILY, coefficients, harmonic_weights
from .exceptions import ConfigurationError
from .factors import ConvergenceFactor
from .grids import GridFamily, GridSpec
from .kernels import KernelTable, layout_for

logger = logging.getLogger(__name__)

SUPPORTED_PAIRS = {
    GridFamily.FULL: frozenset({(0, 0), (0, 1), (1, 0), (1, 1)}),
    GridFamily.EVEN: frozenset({(0, 0), (0, 1)}),
    GridFamily.ODD: frozenset({(0, 0), (1, 1)}),
}


@dataclass(frozen=True)
class SplineConfig:
    family: GridFamily
    i1: int
    i2: int
    factor: ConvergenceFactor
    r: int
    q: int = 0
    n_nodes: int = 9
    truncation: object = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'family', GridFamily(self.family))
        if (self.i1, self.i2) not in SUPPORTED_PAIRS[self.family]:
            supported = ', '.join(str(pair) for pair in sorted(SUPPORTED_PAIRS[self.family]))
            raise ConfigurationError(
                f'(I1, I2) = ({self.i1}, {self.i2}) is not supported for '
                f'{self.family.value} splines; use one of {supported}'
            )
        if self.r < 1:
            raise ConfigurationError(f'order r must be >= 1, got {self.r}')
        if not 0 <= self.q <= self.r:
            raise ConfigurationError(f'derivative order q must satisfy 0 <= q <= r, got q={self.q}, r={self.r}')
        GridSpec(self.family, self.i2, self.n_nodes)

    @property
    def grid(self):
        """The interpolation grid."""
        return GridSpec(self.family, self.i2, self.n_nodes)

    @property
    def knot_grid(self):
        return GridSpec(self.family, self.i1, self.n_nodes)

    @property
    def layout(self):
        return layout_for(self.family, self.i1, self.i2, self.factor, self.r, self.n_nodes)

    @property
    def harmonic_count(self):
        if self.family is GridFamily.FULL:
            return self.grid.half
        if self.family is GridFamily.EVEN:
            return self.n_nodes - 1
        return self.n_nodes

    def with_derivative(self, q):
        return SplineConfig(
            self.family, self.i1, self.i2, self.factor, self.r, q, self.n_nodes, self.truncation,
        )

    def kernel_table(self, layout=None):
        harmonics = np.arange(1, self.harmonic_count + 1)
        return KernelTable(layout or self.layout, self.factor, self.r, self.q, harmonics, self.truncation)

    def __str__(self):
        return (
            f'{self.family.value}(I1={self.i1}, I2={self.i2}, {self.factor.kind.value}, '
            f'r={self.r}, q={self.q}, N={self.n_nodes})'
        )


class SplineEvaluator:
    """Evaluates one spline at any number of points; immutable after construction."""

    def __init__(self, cfg, coeffs):
        if coeffs.parity is not PARITY_FOR_FAMILY[cfg.family] or coeffs.grid != cfg.grid:
            raise ConfigurationError(
                f'coefficients computed on {coeffs.grid} do not match spline {cfg}'
            )
        self.cfg = cfg
        self.coeffs = coeffs
        self.table = cfg.kernel_table()
        cos_w, sin_w = harmonic_weights(cfg.grid)
        h = self.table.denominators
        self._constant = 0.5 * coeffs.a0 if cfg.q == 0 else 0.0
        self._cos_weights = cos_w * coeffs.a / h if coeffs.a.size else None
        self._sin_weights = sin_w * coeffs.b / h if coeffs.b.size else None
        logger.debug('spline evaluator %s with %d terms, tail bound %.1e', cfg, self.table.terms, self.table.tail_bound())

    def __call__(self, t):
        points = np.atleast_1d(np.asarray(t, dtype=np.float64))
        value = np.full(points.shape, self._constant)
        if self._cos_weights is not None:
            value = value + self.table.cos_numerators(points) @ self._cos_weights
        if self._sin_weights is not None:
            value = value + self.table.sin_numerators(points) @ self._sin_weights
        if np.ndim(t) == 0:
            return float(value[0])
        return value


def _require(cfg, family):
    if cfg.family is not family:
        raise ConfigurationError(f'expected a {family.value} spline, got {cfg}')


def eval_full(cfg, coeffs, t):
    """Periodic spline St(I1, I2, σ, r, q, t)."""
    _require(cfg, GridFamily.FULL)
    return SplineEvaluator(cfg, coeffs)(t)


def eval_even(cfg, coeffs, t):
    """Even spline Stc(0, I2, σ, r, q, t) on [0, π]."""
    _require(cfg, GridFamily.EVEN)
    return SplineEvaluator(cfg, coeffs)(t)


def eval_odd(cfg, coeffs, t):
    """Odd spline Sts(I, I, σ, r, q, t) on [0, π]."""
    _require(cfg, GridFamily.ODD)
    return SplineEvaluator(cfg, coeffs)(t)


EVALUATORS = {
    GridFamily.FULL: eval_full,
    GridFamily.EVEN: eval_even,
    GridFamily.ODD: eval_odd,
}


def evaluate(cfg, coeffs, t):
    """Value of the spline of `cfg` with `coeffs` at t, whatever its family."""
    return EVALUATORS[cfg.family](cfg, coeffs, t)


def interpolate(cfg, samples):
    """Spline of `cfg` through `samples`, ready to evaluate."""
    if samples.grid != cfg.grid:
        raise ConfigurationError(f'samples on {samples.grid} do not match spline {cfg}')
    return SplineEvaluator(cfg, coefficients(samples))
