"""
Convergence multipliers σ(r, ν) that damp the harmonics of every kernel series.

The power factor is ν^-(1+r). The Riemann factor is (sin(πν/P)/(πν/P))^(1+r),
where P is the period of the series it damps (N on a full grid, 2π divided by
the node spacing on even and odd grids).
"""
import enum
import logging
from dataclasses import dataclass, replace
from math import pi

import numpy as np

from .exceptions import ConfigurationError

logger = logging.getLogger(__name__)


class FactorKind(str, enum.Enum):
    RIEMANN = 'riemann'
    POWER = 'power'


@dataclass(frozen=True)
class ConvergenceFactor:
    """
    A convergence multiplier.

    `period` is only meaningful for the Riemann factor and is normally bound
    by the kernel that uses the factor. `sign_constant` selects |sin| in the
    Riemann factor, giving a multiplier of constant sign like the power one.
    """

    kind: FactorKind
    period: int = None
    sign_constant: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'kind', FactorKind(self.kind))
        if self.kind is FactorKind.RIEMANN and self.period is not None and self.period < 2:
            raise ConfigurationError(f'Riemann factor needs a period of at least 2, got {self.period}')

    @classmethod
    def power(cls):
        return cls(FactorKind.POWER)

    @classmethod
    def riemann(cls, period=None):
        return cls(FactorKind.RIEMANN, period)

    @property
    def is_riemann(self):
        return self.kind is FactorKind.RIEMANN

    def with_period(self, period):
        if not self.is_riemann or self.period == period:
            return self
        return replace(self, period=period)

    def sign_constant_variant(self):
        if not self.is_riemann or self.sign_constant:
            return self
        return replace(self, sign_constant=True)

    def reflection_sign(self, r):
        """
        Sign of the reflected (mN - k) branch in full-grid series.

        A multiplier of constant sign is extended to negative harmonics with
        parity (-1)^(1+r). The signed Riemann factor is already even in ν.
        """
        if self.is_riemann and not self.sign_constant:
            return 1.0
        return -1.0 if r % 2 == 0 else 1.0

    def amplitude_bound(self, r):
        """A such that |σ(r, ν)| <= A·ν^-(1+r) for every ν >= 1."""
        if self.is_riemann:
            return (self.period / pi) ** (1 + r)
        return 1.0

    def __str__(self):
        if self.is_riemann:
            label = 'riemann|abs|' if self.sign_constant else 'riemann'
            return f'{label}[P={self.period}]'
        return 'power'


def sigma(factor, r, k):
    """
    Evaluate σ(r, k) for a scalar or an array of positive harmonics.

    The Riemann factor is exactly zero at multiples of its period.
    """
    if r < 1:
        raise ConfigurationError(f'order r must be >= 1, got {r}')
    nu = np.asarray(k, dtype=np.float64)
    if np.any(nu < 1):
        raise ConfigurationError('harmonics must be >= 1')

    if factor.is_riemann:
        if factor.period is None:
            raise ConfigurationError('Riemann factor used without a period')
        x = pi * nu / factor.period
        ratio = np.sin(x) / x
        if factor.sign_constant:
            ratio = np.abs(ratio)
        multiple = np.remainder(np.asarray(k), factor.period) == 0
        value = np.where(multiple, 0.0, ratio ** (1 + r))
    else:
        value = nu ** (-(1.0 + r))

    if np.ndim(value) == 0:
        return float(value)
    return value
