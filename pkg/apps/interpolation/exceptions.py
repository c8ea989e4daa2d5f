"""
Errors raised by the spline library.
"""


class TrigSplineError(Exception):
    """Base class for every library error."""


class GridError(TrigSplineError, ValueError):
    """Invalid node count, node index or grid family."""


class ConfigurationError(TrigSplineError, ValueError):
    """Unsupported spline configuration or mismatched inputs."""


class NumericalError(TrigSplineError, ArithmeticError):
    """A computation could not produce a trustworthy value."""


class DegenerateKernelError(NumericalError):
    """A denominator sum H vanished."""

    def __init__(self, value, **params):
        self.value = value
        self.params = params
        detail = ', '.join(f'{key}={val}' for key, val in params.items())
        super().__init__(f'degenerate kernel denominator H={value!r} ({detail})')


class SingularCollocationError(NumericalError):
    """The collocation matrix is numerically singular."""

    def __init__(self, determinant, normalized, floor):
        self.determinant = determinant
        self.normalized = normalized
        self.floor = floor
        super().__init__(
            f'collocation matrix is singular: det={determinant:.6e}, '
            f'normalized det={normalized:.3e} below {floor:.1e}'
        )
