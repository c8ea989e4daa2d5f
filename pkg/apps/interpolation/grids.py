"""
Uniform grids on [0, 2π) and [0, π].

Full grids (Δ1) carry periodic data, closed grids (Δ2) carry even data and
open grids (Δ3) carry odd data. Each family has two phases selected by the
indicator I. Node indices are 1-based.
"""
import enum
import logging
from dataclasses import dataclass
from math import pi

import numpy as np

from .exceptions import GridError

logger = logging.getLogger(__name__)


class GridFamily(str, enum.Enum):
    FULL = 'full'
    EVEN = 'even'
    ODD = 'odd'


MIN_NODES = {
    GridFamily.FULL: 3,
    GridFamily.EVEN: 2,
    GridFamily.ODD: 1,
}


@dataclass(frozen=True)
class GridSpec:
    """Grid family, phase indicator and node count."""

    family: GridFamily
    indicator: int
    n_nodes: int

    def __post_init__(self):
        object.__setattr__(self, 'family', GridFamily(self.family))
        if self.indicator not in (0, 1):
            raise GridError(f'indicator must be 0 or 1, got {self.indicator}')
        if self.n_nodes < MIN_NODES[self.family]:
            raise GridError(
                f'{self.family.value} grid needs at least '
                f'{MIN_NODES[self.family]} nodes, got {self.n_nodes}'
            )
        if self.family is GridFamily.FULL and self.n_nodes % 2 == 0:
            raise GridError(f'full grid needs an odd node count, got {self.n_nodes}')

    @property
    def half(self):
        """n for a full grid with N = 2n + 1."""
        return (self.n_nodes - 1) // 2

    @property
    def period(self):
        """Period of the kernel series living on this grid (2π / spacing)."""
        n = self.n_nodes
        if self.family is GridFamily.FULL:
            return n
        if self.family is GridFamily.EVEN:
            return 2 * (n - 1) if self.indicator == 0 else 2 * n
        return 2 * (n + 1) if self.indicator == 0 else 2 * n

    def __str__(self):
        return f'{self.family.value}[I={self.indicator}, N={self.n_nodes}]'


def _raw_node(spec, j):
    n = spec.n_nodes
    if spec.family is GridFamily.FULL:
        if spec.indicator == 0:
            return 2.0 * pi * (j - 1) / n
        return pi * (2 * j - 1) / n
    if spec.family is GridFamily.EVEN:
        if spec.indicator == 0:
            return pi * (j - 1) / (n - 1)
        return pi * (2 * j - 1) / (2 * n)
    if spec.indicator == 0:
        return pi * j / (n + 1)
    return pi * (2 * j - 1) / (2 * n)


def node(spec, j):
    """Return the j-th node (1-based) of the grid."""
    if not 1 <= j <= spec.n_nodes:
        raise GridError(f'node index {j} outside 1..{spec.n_nodes} for {spec}')
    return float(_raw_node(spec, j))


def nodes(spec):
    """All nodes of the grid as a float64 array, in index order."""
    j = np.arange(1, spec.n_nodes + 1, dtype=np.float64)
    return np.asarray(_raw_node(spec, j), dtype=np.float64)


def spacing(spec):
    return 2.0 * pi / spec.period
