"""
Denominator sums H and numerator series C, S of the trigonometric splines.

Every kernel has the same shape. For a harmonic k, a series period P, an
order r and a derivative order q:

    H = σ(k) + Σ_m (-1)^(m·a) [σ(mP+k) + ρ·σ(mP-k)]
    C = σ(k)k^q cos(kt+qπ/2) + Σ_m (-1)^(m·b) [σ(mP+k)(mP+k)^q cos((mP+k)t+qπ/2)
                                               + ρ·σ(mP-k)(mP-k)^q cos((mP-k)t+qπ/2)]
    S = same as C with sin, and -ρ on the (mP-k) branch

A SeriesLayout fixes P, the alternations a, b and the reflection sign ρ for
one grid family and indicator pair. The infinite sums over m are cut at M
terms by a TruncationPolicy.
"""
import logging
from dataclasses import dataclass, replace
from math import ceil, isfinite, pi

import numpy as np

from .exceptions import ConfigurationError, DegenerateKernelError, GridError
from .factors import sigma
from .grids import GridFamily, GridSpec

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * pi
DEGENERATE_FLOOR = 1e-300
DEFAULT_TOLERANCE = 1e-12
DEFAULT_MAX_TERMS = 100000
DEFAULT_CONDITIONAL_TERMS = 10000

# Elements per (points x harmonics x terms) block during evaluation.
CHUNK_ELEMENTS = 1 << 21


class TruncationPolicy:
    """How many m-terms of a kernel series to keep."""

    def terms_for(self, factor, r, q, k, period):
        raise NotImplementedError


@dataclass(frozen=True)
class FixedTerms(TruncationPolicy):
    terms: int

    def __post_init__(self):
        if self.terms < 0:
            raise ConfigurationError(f'term count must be >= 0, got {self.terms}')

    def terms_for(self, factor, r, q, k, period):
        return self.terms


@dataclass(frozen=True)
class TailTolerance(TruncationPolicy):
    """
    Keep the fewest terms whose analytic tail bound is below `tolerance`.

    For q = r the series converge only conditionally and no bound exists;
    `conditional_terms` (capped by `max_terms`) is used instead.
    """

    tolerance: float = DEFAULT_TOLERANCE
    max_terms: int = DEFAULT_MAX_TERMS
    conditional_terms: int = DEFAULT_CONDITIONAL_TERMS

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ConfigurationError(f'tolerance must be positive, got {self.tolerance}')
        if self.max_terms < 1:
            raise ConfigurationError(f'max_terms must be >= 1, got {self.max_terms}')

    def terms_for(self, factor, r, q, k, period):
        if q >= r:
            return min(self.max_terms, self.conditional_terms)
        amplitude = factor.amplitude_bound(r)
        gap = r - q
        # 2A (MP - k)^-(r-q) / ((r-q) P) <= tolerance
        reach = (2.0 * amplitude / (gap * period * self.tolerance)) ** (1.0 / gap)
        if not isfinite(reach):
            logger.debug('tail tolerance %.1e unreachable for r=%d q=%d, using %d terms',
                         self.tolerance, r, q, self.max_terms)
            return self.max_terms
        needed = max(1, ceil((reach + k) / period))
        if needed > self.max_terms:
            logger.debug(
                'tail tolerance %.1e needs %d terms for r=%d q=%d, capped at %d',
                self.tolerance, needed, r, q, self.max_terms,
            )
            return self.max_terms
        return needed


def default_truncation():
    return TailTolerance()


def tail_bound(factor, r, q, k, period, terms):
    """
    Upper bound on |series - truncated series| after `terms` m-terms.

    Infinite when q >= r.
    """
    if q >= r:
        return float('inf')
    start = terms * period - k
    if start <= 0:
        start = (terms + 1) * period - k
    return 2.0 * factor.amplitude_bound(r) * start ** (q - r) / ((r - q) * period)


@dataclass(frozen=True)
class SeriesLayout:
    period: int
    h_alternation: int = 0
    numerator_alternation: int = 0
    reflection: float = 1.0


def full_layout(i1, i2, factor, r, n_nodes):
    return SeriesLayout(
        period=n_nodes,
        h_alternation=(i1 + i2) % 2,
        numerator_alternation=i1,
        reflection=factor.reflection_sign(r),
    )


def even_layout(indicator, n_nodes):
    if indicator == 0:
        return SeriesLayout(period=2 * (n_nodes - 1))
    return SeriesLayout(period=2 * n_nodes, h_alternation=1)


def odd_layout(indicator, n_nodes):
    if indicator == 0:
        return SeriesLayout(period=2 * (n_nodes + 1))
    return SeriesLayout(period=2 * n_nodes, numerator_alternation=1)


def layout_for(family, i1, i2, factor, r, n_nodes):
    family = GridFamily(family)
    if family is GridFamily.FULL:
        return full_layout(i1, i2, factor, r, n_nodes)
    if family is GridFamily.EVEN:
        return even_layout(i2, n_nodes)
    return odd_layout(i2, n_nodes)


def _rotate(theta, q, trig):
    """cos(θ + qπ/2) or sin(θ + qπ/2) by exact quarter turns."""
    turn = q % 4
    if trig == 'cos':
        if turn == 0:
            return np.cos(theta)
        if turn == 1:
            return -np.sin(theta)
        if turn == 2:
            return -np.cos(theta)
        return np.sin(theta)
    if turn == 0:
        return np.sin(theta)
    if turn == 1:
        return np.cos(theta)
    if turn == 2:
        return -np.sin(theta)
    return -np.cos(theta)


class KernelTable:
    """
    Denominators H_k and numerator amplitudes for a set of harmonics.

    The table is built once per configuration and is read-only afterwards;
    `cos_numerators` and `sin_numerators` evaluate C_k(t) and S_k(t) for an
    array of points.
    """

    def __init__(self, layout, factor, r, q, harmonics, truncation=None):
        if r < 1:
            raise ConfigurationError(f'order r must be >= 1, got {r}')
        if not 0 <= q <= r:
            raise ConfigurationError(f'derivative order q must satisfy 0 <= q <= r, got q={q}, r={r}')

        self.layout = layout
        self.factor = factor.with_period(layout.period)
        self.r = r
        self.q = q
        self.harmonics = np.atleast_1d(np.asarray(harmonics, dtype=np.int64))
        if self.harmonics.size and self.harmonics.min() < 1:
            raise ConfigurationError('harmonics must be >= 1')
        self.truncation = truncation or default_truncation()

        period = layout.period
        k_max = int(self.harmonics.max()) if self.harmonics.size else 1
        self.terms = int(self.truncation.terms_for(self.factor, r, q, k_max, period))

        k = self.harmonics.astype(np.float64)
        m = np.arange(1, self.terms + 1, dtype=np.float64)
        plus = m[None, :] * period + k[:, None]
        minus = m[None, :] * period - k[:, None]

        sig_k = np.atleast_1d(sigma(self.factor, r, k))
        sig_plus = sigma(self.factor, r, plus)
        sig_minus = sigma(self.factor, r, minus)

        rho = layout.reflection
        h_sign = np.where(m.astype(np.int64) * layout.h_alternation % 2 == 1, -1.0, 1.0)
        pairs = h_sign[None, :] * (sig_plus + rho * sig_minus)
        denominators = sig_k + pairs.sum(axis=1)

        degenerate = np.abs(denominators) < DEGENERATE_FLOOR
        if np.any(degenerate):
            bad = int(self.harmonics[np.argmax(degenerate)])
            raise DegenerateKernelError(
                float(denominators[np.argmax(degenerate)]),
                factor=str(self.factor), r=r, k=bad, period=period,
            )
        self.denominators = denominators
        denominators.flags.writeable = False

        n_sign = np.where(m.astype(np.int64) * layout.numerator_alternation % 2 == 1, -1.0, 1.0)
        self._freq_plus = plus
        self._freq_minus = minus
        self._lead = sig_k * k ** q
        self._amp_plus = n_sign[None, :] * sig_plus * plus ** q
        self._amp_minus = n_sign[None, :] * rho * sig_minus * minus ** q
        for array in (self._freq_plus, self._freq_minus, self._lead, self._amp_plus, self._amp_minus):
            array.flags.writeable = False

        logger.debug(
            'kernel table period=%d factor=%s r=%d q=%d harmonics=%d terms=%d',
            period, self.factor, r, q, self.harmonics.size, self.terms,
        )

    def __len__(self):
        return self.harmonics.size

    def cos_numerators(self, t):
        """C_k(t) as an array of shape (len(t), len(harmonics))."""
        return self._numerators(t, 'cos', 1.0)

    def sin_numerators(self, t):
        """S_k(t) as an array of shape (len(t), len(harmonics))."""
        return self._numerators(t, 'sin', -1.0)

    def _numerators(self, t, trig, minus_sign):
        points = np.atleast_1d(np.asarray(t, dtype=np.float64))
        n_harm = self.harmonics.size
        out = np.empty((points.size, n_harm))
        k = self.harmonics.astype(np.float64)
        chunk = max(1, CHUNK_ELEMENTS // max(1, n_harm * max(1, self.terms)))

        for start in range(0, points.size, chunk):
            block = points[start:start + chunk]
            lead = _rotate(np.remainder(np.outer(block, k), TWO_PI), self.q, trig)
            values = self._lead[None, :] * lead
            if self.terms:
                tt = block[:, None, None]
                theta_plus = np.remainder(self._freq_plus[None, :, :] * tt, TWO_PI)
                theta_minus = np.remainder(self._freq_minus[None, :, :] * tt, TWO_PI)
                paired = (
                    self._amp_plus[None, :, :] * _rotate(theta_plus, self.q, trig)
                    + minus_sign * self._amp_minus[None, :, :] * _rotate(theta_minus, self.q, trig)
                )
                values = values + paired.sum(axis=2)
            out[start:start + chunk] = values
        return out

    def tail_bound(self):
        k_max = int(self.harmonics.max()) if self.harmonics.size else 1
        return tail_bound(self.factor, self.r, self.q, k_max, self.layout.period, self.terms)


def _check_harmonic(k, upper):
    if not 1 <= k <= upper:
        raise GridError(f'harmonic {k} outside 1..{upper}')


def _single(t, values):
    column = values[:, 0]
    return float(column[0]) if np.ndim(t) == 0 else column


def h_full(i1, i2, factor, r, k, n_nodes, truncation=None):
    """Denominator H(I1, I2, σ, r, k) on a full grid of n_nodes."""
    spec = GridSpec(GridFamily.FULL, i2, n_nodes)
    _check_harmonic(k, spec.half)
    table = KernelTable(full_layout(i1, i2, factor, r, n_nodes), factor, r, 0, [k], truncation)
    return float(table.denominators[0])


def c_full(i1, factor, r, q, k, n_nodes, t, truncation=None):
    """Cosine numerator C(I1, σ, r, q, k, t) on a full grid."""
    spec = GridSpec(GridFamily.FULL, i1, n_nodes)
    _check_harmonic(k, spec.half)
    table = KernelTable(full_layout(i1, 0, factor, r, n_nodes), factor, r, q, [k], truncation)
    return _single(t, table.cos_numerators(t))


def s_full(i1, factor, r, q, k, n_nodes, t, truncation=None):
    """Sine numerator S(I1, σ, r, q, k, t) on a full grid."""
    spec = GridSpec(GridFamily.FULL, i1, n_nodes)
    _check_harmonic(k, spec.half)
    table = KernelTable(full_layout(i1, 0, factor, r, n_nodes), factor, r, q, [k], truncation)
    return _single(t, table.sin_numerators(t))


def h_even(indicator, factor, r, k, n_nodes, truncation=None):
    GridSpec(GridFamily.EVEN, indicator, n_nodes)
    _check_harmonic(k, n_nodes - 1)
    table = KernelTable(even_layout(indicator, n_nodes), factor, r, 0, [k], truncation)
    return float(table.denominators[0])


def c_even(indicator, factor, r, q, k, n_nodes, t, truncation=None):
    GridSpec(GridFamily.EVEN, indicator, n_nodes)
    _check_harmonic(k, n_nodes - 1)
    table = KernelTable(even_layout(indicator, n_nodes), factor, r, q, [k], truncation)
    return _single(t, table.cos_numerators(t))


def h_odd(indicator, factor, r, k, n_nodes, truncation=None):
    GridSpec(GridFamily.ODD, indicator, n_nodes)
    _check_harmonic(k, n_nodes)
    table = KernelTable(odd_layout(indicator, n_nodes), factor, r, 0, [k], truncation)
    return float(table.denominators[0])


def s_odd(indicator, factor, r, q, k, n_nodes, t, truncation=None):
    GridSpec(GridFamily.ODD, indicator, n_nodes)
    _check_harmonic(k, n_nodes)
    table = KernelTable(odd_layout(indicator, n_nodes), factor, r, q, [k], truncation)
    return _single(t, table.sin_numerators(t))


def with_numerator_alternation(layout, alternation):
    return replace(layout, numerator_alternation=alternation % 2)
