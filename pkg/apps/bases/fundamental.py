"""
Fundamental (cardinal) trigonometric splines.

φ_k equals 1 at the k-th interpolation node and 0 at every other node, so a
spline through samples f is Σ_k f_k φ_k. Full-grid fundamentals are shifted
kernels; even and odd fundamentals are cosine and sine sums weighted by the
node values of each harmonic.
"""
import logging

import numpy as np

from apps.interpolation.exceptions import ConfigurationError, GridError
from apps.interpolation.grids import GridFamily, nodes
from apps.interpolation.kernels import with_numerator_alternation

logger = logging.getLogger(__name__)


class FundamentalBasis:
    """The N fundamental splines of one spline configuration."""

    def __init__(self, cfg):
        self.cfg = cfg
        self.grid = cfg.grid
        self.nodes = nodes(self.grid)
        n = cfg.n_nodes

        if cfg.family is GridFamily.FULL:
            layout = with_numerator_alternation(cfg.layout, cfg.i1 + cfg.i2)
            self.table = cfg.kernel_table(layout)
            self._weights = 2.0 / (n * self.table.denominators)
            self._constant = np.full(n, 1.0 / n if cfg.q == 0 else 0.0)
            return

        self.table = cfg.kernel_table()
        j = self.table.harmonics.astype(np.float64)
        node_weights = np.ones(n)
        harmonic_weights = np.ones(j.size)

        if cfg.family is GridFamily.EVEN:
            if cfg.i2 == 0:
                scale = 2.0 / (n - 1)
                node_weights[0] = node_weights[-1] = 0.5
                harmonic_weights[-1] = 0.5
            else:
                scale = 2.0 / n
            trig = np.cos(np.outer(self.nodes, j))
            self._constant = scale * node_weights * (0.5 if cfg.q == 0 else 0.0)
        else:
            if cfg.i2 == 0:
                scale = 2.0 / (n + 1)
            else:
                scale = 2.0 / n
                harmonic_weights[-1] = 0.5
            trig = np.sin(np.outer(self.nodes, j))
            self._constant = np.zeros(n)

        # rows: node k, columns: harmonic j
        self._weights = scale * node_weights[:, None] * trig * (harmonic_weights / self.table.denominators)[None, :]

    def values(self, t):
        """φ_k(t_i) for every point and every node, shape (len(t), N)."""
        points = np.atleast_1d(np.asarray(t, dtype=np.float64))
        if self.cfg.family is GridFamily.FULL:
            shifted = (points[:, None] - self.nodes[None, :]).reshape(-1)
            series = self.table.cos_numerators(shifted) @ self._weights
            return self._constant[None, :] + series.reshape(points.size, self.nodes.size)
        if self.cfg.family is GridFamily.EVEN:
            series = self.table.cos_numerators(points)
        else:
            series = self.table.sin_numerators(points)
        return self._constant[None, :] + series @ self._weights.T

    def __call__(self, k, t):
        if not 1 <= k <= self.cfg.n_nodes:
            raise GridError(f'fundamental index {k} outside 1..{self.cfg.n_nodes}')
        column = self.values(t)[:, k - 1]
        if np.ndim(t) == 0:
            return float(column[0])
        return column

    def gram(self):
        """Discrete scalar products Σ_j φ_k(x_j) φ_l(x_j)."""
        at_nodes = self.values(self.nodes)
        return at_nodes.T @ at_nodes


def _require(cfg, family):
    if cfg.family is not family:
        raise ConfigurationError(f'expected a {family.value} configuration, got {cfg}')


def fundamental_full(cfg, k, t):
    """St*(I1, I2, σ, r, q, k, t)."""
    _require(cfg, GridFamily.FULL)
    return FundamentalBasis(cfg)(k, t)


def fundamental_even(cfg, k, t):
    """Stc*(0, I2, σ, r, q, k, t)."""
    _require(cfg, GridFamily.EVEN)
    return FundamentalBasis(cfg)(k, t)


def fundamental_odd(cfg, k, t):
    """Sts*(I, I, σ, r, q, k, t)."""
    _require(cfg, GridFamily.ODD)
    return FundamentalBasis(cfg)(k, t)


def eval_via_fundamentals(cfg, samples, t, basis=None):
    """Σ_k f_k φ_k(t)."""
    if samples.grid != cfg.grid:
        raise ConfigurationError(f'samples on {samples.grid} do not match {cfg}')
    basis = basis or FundamentalBasis(cfg)
    values = basis.values(t) @ samples.values
    if np.ndim(t) == 0:
        return float(values[0])
    return values
