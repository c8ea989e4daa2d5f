"""
Coefficients of the trigonometric polynomial interpolating samples on a grid.

Coefficients are computed by direct summation over the nodes. Full grids give
cosine and sine coefficients, closed grids give cosine coefficients only and
open grids give sine coefficients only.
"""
import enum
import logging
from dataclasses import dataclass, field

import numpy as np

from .exceptions import ConfigurationError, GridError
from .grids import GridFamily, GridSpec, nodes

logger = logging.getLogger(__name__)


class Parity(str, enum.Enum):
    FULL = 'full'
    EVEN = 'even'
    ODD = 'odd'


PARITY_FOR_FAMILY = {
    GridFamily.FULL: Parity.FULL,
    GridFamily.EVEN: Parity.EVEN,
    GridFamily.ODD: Parity.ODD,
}


@dataclass(frozen=True, eq=False)
class Samples:
    """Values f_j of the interpolated function at the nodes of `grid`."""

    grid: GridSpec
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64).reshape(-1)
        if values.size != self.grid.n_nodes:
            raise ConfigurationError(
                f'{self.grid} needs {self.grid.n_nodes} samples, got {values.size}'
            )
        values.flags.writeable = False
        object.__setattr__(self, 'values', values)

    @classmethod
    def of(cls, grid, func):
        """Sample a callable at the grid nodes."""
        return cls(grid, func(nodes(grid)))

    def __len__(self):
        return self.values.size


@dataclass(frozen=True, eq=False)
class TrigCoefficients:
    """
    a0, cosine coefficients a_1.. and sine coefficients b_1.. of one grid.

    `a[k - 1]` holds a_k and `b[k - 1]` holds b_k.
    """

    a0: float
    a: np.ndarray = field(repr=False)
    b: np.ndarray = field(repr=False)
    parity: Parity
    grid: GridSpec

    def rows(self):
        """(k, a_k, b_k) rows starting at k = 0, with zeros where a series is absent."""
        count = max(self.a.size, self.b.size)
        yield 0, self.a0, 0.0
        for k in range(1, count + 1):
            a_k = self.a[k - 1] if k <= self.a.size else 0.0
            b_k = self.b[k - 1] if k <= self.b.size else 0.0
            yield k, float(a_k), float(b_k)


def _require(samples, family):
    if samples.grid.family is not family:
        raise GridError(f'expected samples on a {family.value} grid, got {samples.grid}')


def _cos_sums(harmonics, x, weighted):
    return np.cos(np.outer(harmonics, x)) @ weighted


def _sin_sums(harmonics, x, weighted):
    return np.sin(np.outer(harmonics, x)) @ weighted


def full_coeffs(samples):
    """a0, a_k, b_k for k = 1..n of samples on a full grid of N = 2n+1 nodes."""
    _require(samples, GridFamily.FULL)
    grid = samples.grid
    x = nodes(grid)
    f = samples.values
    scale = 2.0 / grid.n_nodes
    k = np.arange(1, grid.half + 1)
    return TrigCoefficients(
        a0=scale * float(f.sum()),
        a=scale * _cos_sums(k, x, f),
        b=scale * _sin_sums(k, x, f),
        parity=Parity.FULL,
        grid=grid,
    )


def even_coeffs(samples):
    """
    a0 and a_k for k = 1..N-1 of samples on a closed grid.

    On the I=0 grid the two endpoint samples carry weight 1/2.
    """
    _require(samples, GridFamily.EVEN)
    grid = samples.grid
    n = grid.n_nodes
    x = nodes(grid)
    f = samples.values
    if grid.indicator == 0:
        weights = np.ones(n)
        weights[0] = weights[-1] = 0.5
        scale = 2.0 / (n - 1)
        f = f * weights
    else:
        scale = 2.0 / n
    k = np.arange(1, n)
    return TrigCoefficients(
        a0=scale * float(f.sum()),
        a=scale * _cos_sums(k, x, f),
        b=np.zeros(0),
        parity=Parity.EVEN,
        grid=grid,
    )


def odd_coeffs(samples):
    """b_k for k = 1..N of samples on an open grid; a0 is zero."""
    _require(samples, GridFamily.ODD)
    grid = samples.grid
    n = grid.n_nodes
    x = nodes(grid)
    scale = 2.0 / (n + 1) if grid.indicator == 0 else 2.0 / n
    k = np.arange(1, n + 1)
    return TrigCoefficients(
        a0=0.0,
        a=np.zeros(0),
        b=scale * _sin_sums(k, x, samples.values),
        parity=Parity.ODD,
        grid=grid,
    )


def coefficients(samples):
    family = samples.grid.family
    if family is GridFamily.FULL:
        return full_coeffs(samples)
    if family is GridFamily.EVEN:
        return even_coeffs(samples)
    return odd_coeffs(samples)


def harmonic_weights(grid):
    """
    Per-harmonic weights of the interpolating sum.

    Returns (cos_weights, sin_weights) over k = 1..K; the top harmonic of the
    closed I=0 grid and of the open I=1 grid enters with weight 1/2.
    """
    n = grid.n_nodes
    if grid.family is GridFamily.FULL:
        ones = np.ones(grid.half)
        return ones, ones.copy()
    if grid.family is GridFamily.EVEN:
        weights = np.ones(n - 1)
        if grid.indicator == 0:
            weights[-1] = 0.5
        return weights, np.zeros(0)
    weights = np.ones(n)
    if grid.indicator == 1:
        weights[-1] = 0.5
    return np.zeros(0), weights


def trig_polynomial(coeffs, t):
    """Evaluate the interpolating trigonometric polynomial at points t."""
    points = np.atleast_1d(np.asarray(t, dtype=np.float64))
    cos_w, sin_w = harmonic_weights(coeffs.grid)
    value = np.full(points.shape, 0.5 * coeffs.a0)
    if coeffs.a.size:
        k = np.arange(1, coeffs.a.size + 1)
        value = value + np.cos(np.outer(points, k)) @ (cos_w * coeffs.a)
    if coeffs.b.size:
        k = np.arange(1, coeffs.b.size + 1)
        value = value + np.sin(np.outer(points, k)) @ (sin_w * coeffs.b)
    if np.ndim(t) == 0:
        return float(value[0])
    return value
