"""
Trigonometric B-splines on full grids and the collocation systems they span.

A B-spline centred on node x_j is

    B_j(t) = (1/π) [½·I(q) + Σ_{k=1}^{n} C_k(t - x_j) / Norm_k]

with the cosine numerator of the I1=0 full-grid series. The power factor gives
the BC family and the Riemann factor the BR family. Norm_k is 1 for the first
kind, and for the second kind the full-grid denominator of order r+1 with
knot indicator 0 (BC0, BR0) or 1 (BC1, BR1), taken with a multiplier of
constant sign.
"""
import enum
import logging
from dataclasses import dataclass, field, replace
from math import pi

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from apps.interpolation.exceptions import ConfigurationError, GridError, SingularCollocationError
from apps.interpolation.factors import ConvergenceFactor, FactorKind
from apps.interpolation.grids import GridFamily, GridSpec, nodes
from apps.interpolation.kernels import KernelTable, full_layout

logger = logging.getLogger(__name__)

SINGULARITY_FLOOR = 1e-12


class BSplineNormalization(str, enum.Enum):
    FIRST_KIND = 'first'
    SECOND_KIND_SAME = 'same'
    SECOND_KIND_CROSS = 'cross'


LABELS = {
    (FactorKind.POWER, BSplineNormalization.FIRST_KIND): 'BC',
    (FactorKind.POWER, BSplineNormalization.SECOND_KIND_SAME): 'BC0',
    (FactorKind.POWER, BSplineNormalization.SECOND_KIND_CROSS): 'BC1',
    (FactorKind.RIEMANN, BSplineNormalization.FIRST_KIND): 'BR',
    (FactorKind.RIEMANN, BSplineNormalization.SECOND_KIND_SAME): 'BR0',
    (FactorKind.RIEMANN, BSplineNormalization.SECOND_KIND_CROSS): 'BR1',
}
KINDS_BY_LABEL = {label: key for key, label in LABELS.items()}
ALL_LABELS = ('BR', 'BC', 'BR0', 'BC0', 'BR1', 'BC1')


@dataclass(frozen=True)
class BSplineKind:
    normalization: BSplineNormalization
    factor: ConvergenceFactor
    r: int
    q: int = 0
    n_nodes: int = 9
    truncation: object = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'normalization', BSplineNormalization(self.normalization))
        GridSpec(GridFamily.FULL, 0, self.n_nodes)
        if self.r < 1:
            raise ConfigurationError(f'order r must be >= 1, got {self.r}')
        if not 0 <= self.q <= self.r:
            raise ConfigurationError(f'derivative order q must satisfy 0 <= q <= r, got q={self.q}, r={self.r}')

    @classmethod
    def from_label(cls, label, r, q=0, n_nodes=9, truncation=None):
        try:
            factor_kind, normalization = KINDS_BY_LABEL[label.upper()]
        except KeyError:
            raise ConfigurationError(f'unknown B-spline kind {label!r}; use one of {", ".join(ALL_LABELS)}')
        return cls(normalization, ConvergenceFactor(factor_kind), r, q, n_nodes, truncation)

    @property
    def label(self):
        return LABELS[(self.factor.kind, self.normalization)]

    def with_derivative(self, q):
        return replace(self, q=q)

    def __str__(self):
        return f'{self.label}(r={self.r}, q={self.q}, N={self.n_nodes})'


class TrigBSpline:
    """
    All N translates of one B-spline kind, centred on the nodes of Δ1^(I).
    """

    def __init__(self, kind, centre_indicator=0):
        self.kind = kind
        self.centre_grid = GridSpec(GridFamily.FULL, centre_indicator, kind.n_nodes)
        self.centres = nodes(self.centre_grid)

        n = kind.n_nodes
        harmonics = np.arange(1, self.centre_grid.half + 1)
        self.numerators = KernelTable(
            full_layout(0, 0, kind.factor, kind.r, n), kind.factor, kind.r, kind.q, harmonics, kind.truncation,
        )
        self.norms = self._norms(harmonics)
        self._weights = 1.0 / self.norms
        self._constant = 0.5 if kind.q == 0 else 0.0

    def _norms(self, harmonics):
        kind = self.kind
        if kind.normalization is BSplineNormalization.FIRST_KIND:
            return np.ones(harmonics.size)
        knot = 0 if kind.normalization is BSplineNormalization.SECOND_KIND_SAME else 1
        factor = kind.factor.sign_constant_variant()
        order = kind.r + 1
        table = KernelTable(
            full_layout(knot, 0, factor, order, kind.n_nodes), factor, order, 0, harmonics, kind.truncation,
        )
        return table.denominators

    def shape(self, t):
        """The B-spline centred at 0."""
        points = np.atleast_1d(np.asarray(t, dtype=np.float64))
        values = (self._constant + self.numerators.cos_numerators(points) @ self._weights) / pi
        return values

    def __call__(self, j, t):
        if not 1 <= j <= self.kind.n_nodes:
            raise GridError(f'B-spline index {j} outside 1..{self.kind.n_nodes}')
        values = self.shape(np.asarray(t, dtype=np.float64) - self.centres[j - 1])
        if np.ndim(t) == 0:
            return float(values[0])
        return values

    def values(self, t):
        """B_j(t_i) for every point t_i and every index j, shape (len(t), N)."""
        points = np.atleast_1d(np.asarray(t, dtype=np.float64))
        differences = points[:, None] - self.centres[None, :]
        return self.shape(differences.reshape(-1)).reshape(differences.shape)


def bspline_eval(kind, j, t, centre_indicator=0):
    """B_j(t) of the given kind."""
    return TrigBSpline(kind, centre_indicator)(j, t)


@dataclass(frozen=True, eq=False)
class CollocationSystem:
    """
    B-splines centred on the nodes of `grid` sampled at the same nodes.

    `matrix[k, j]` is B_j(x_k). The determinant is reported as computed even
    when the system is numerically singular.
    """

    kind: BSplineKind
    grid: GridSpec
    basis: TrigBSpline = field(repr=False)
    matrix: np.ndarray = field(repr=False)
    determinant: float
    normalized_determinant: float
    factorization: tuple = field(repr=False)

    def is_singular(self, floor=SINGULARITY_FLOOR):
        return not self.normalized_determinant > floor


def collocation_matrix(kind, indicator=0):
    """Build the collocation system of `kind` on Δ1^(indicator)."""
    if kind.q != 0:
        raise ConfigurationError(f'collocation needs q = 0, got q={kind.q}')
    grid = GridSpec(GridFamily.FULL, indicator, kind.n_nodes)
    basis = TrigBSpline(kind, indicator)
    matrix = basis.values(nodes(grid))
    if not np.all(np.isfinite(matrix)):
        raise ConfigurationError(f'non-finite collocation entries for {kind}')

    lu, piv = lu_factor(matrix)
    swaps = np.count_nonzero(piv != np.arange(piv.size))
    diagonal = np.diag(lu)
    determinant = float((-1.0) ** swaps * np.prod(diagonal))
    row_norms = np.linalg.norm(matrix, axis=1)
    normalized = float(np.prod(np.abs(diagonal) / row_norms))
    logger.debug('collocation %s on %s: det=%.6e normalized=%.3e', kind, grid, determinant, normalized)

    matrix.flags.writeable = False
    return CollocationSystem(
        kind=kind,
        grid=grid,
        basis=basis,
        matrix=matrix,
        determinant=determinant,
        normalized_determinant=normalized,
        factorization=(lu, piv),
    )


def solve_basis_coefficients(system, samples, floor=SINGULARITY_FLOOR):
    """Coefficients α_j with Σ_j α_j B_j(x_k) = f_k."""
    if samples.grid != system.grid:
        raise ConfigurationError(f'samples on {samples.grid} do not match collocation grid {system.grid}')
    if system.is_singular(floor):
        raise SingularCollocationError(system.determinant, system.normalized_determinant, floor)
    return lu_solve(system.factorization, samples.values)


class BasisRepresentation:
    """The spline Σ_j α_j B_j(t), optionally differentiated q times."""

    def __init__(self, system, alpha, q=0):
        self.system = system
        self.alpha = np.asarray(alpha, dtype=np.float64)
        if q == 0:
            self.basis = system.basis
        else:
            kind = system.kind.with_derivative(q)
            self.basis = TrigBSpline(kind, system.grid.indicator)

    def __call__(self, t):
        values = self.basis.values(t) @ self.alpha
        if np.ndim(t) == 0:
            return float(values[0])
        return values


def reconstruct(system, samples, t, q=0, floor=SINGULARITY_FLOOR):
    """Interpolate `samples` in the B-spline basis and evaluate at t."""
    alpha = solve_basis_coefficients(system, samples, floor)
    return BasisRepresentation(system, alpha, q)(t)


def determinant_table(labels=ALL_LABELS, orders=(1, 2, 3, 4, 5, 11), n_nodes=9, indicator=0, truncation=None):
    """|det| of the collocation matrix for every kind and order, as {label: [values]}."""
    table = {}
    for label in labels:
        row = []
        for r in orders:
            kind = BSplineKind.from_label(label, r, 0, n_nodes, truncation)
            row.append(abs(collocation_matrix(kind, indicator).determinant))
        table[label] = row
    return table
