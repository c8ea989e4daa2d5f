import io
import logging
from math import pi

import numpy as np

from apps.interpolation.discrete_fourier import coefficients
from apps.interpolation.exceptions import ConfigurationError
from apps.interpolation.grids import GridFamily
from apps.interpolation.io import read_samples
from apps.interpolation.serializers import PointsSerializer, SplineConfigSerializer
from apps.interpolation.splines import evaluate

from ._base import TableCommand, read_text

logger = logging.getLogger(__name__)


def dense_points(family, count):
    """`count` points over [0, 2π) for periodic splines, over [0, π] otherwise."""
    if family is GridFamily.FULL:
        return np.linspace(0.0, 2.0 * pi, count, endpoint=False)
    return np.linspace(0.0, pi, count)


def parse_point_list(text):
    points = []
    for line in text.splitlines():
        cell = line.split(',')[0].strip()
        if not cell or cell.lower() == 't':
            continue
        try:
            points.append(float(cell))
        except ValueError:
            raise ConfigurationError(f'not a point: {cell!r}')
    return np.asarray(points, dtype=np.float64)


class Command(TableCommand):
    help = 'Evaluate an interpolating trigonometric spline (or a derivative) at points.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--family', required=True)
        parser.add_argument('--i1', type=int, default=0)
        parser.add_argument('--i2', type=int, default=0)
        parser.add_argument('--factor', default='power')
        parser.add_argument('--r', type=int, required=True)
        parser.add_argument('--q', type=int, default=0)
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--samples', required=True, help='CSV with header j,f or x,f.')
        parser.add_argument('--points', default='dense:500', help='dense:K or list:FILE')
        self.add_truncation_arguments(parser)

    def build_table(self, **options):
        config = self.validated(SplineConfigSerializer(data={
            key: options[key]
            for key in ('family', 'i1', 'i2', 'factor', 'r', 'q', 'n', 'trunc_terms', 'trunc_tol')
        }))
        points = self.validated(PointsSerializer(data={'points': options['points']}))
        cfg = config.save()

        samples = read_samples(io.StringIO(read_text(options['samples'])), cfg.grid)
        kind, argument = points.validated_data['points']
        if kind == 'dense':
            t = dense_points(cfg.family, argument)
        else:
            t = parse_point_list(read_text(argument))

        if cfg.family is not GridFamily.FULL:
            outside = np.count_nonzero((t < 0.0) | (t > pi))
            if outside:
                logger.warning('%d points lie outside [0, π]; %s splines extend by symmetry there', outside, cfg.family.value)

        logger.info('evaluating %s at %d points', cfg, t.size)
        values = evaluate(cfg, coefficients(samples), t)
        return ['t', 'value'], list(zip(t.tolist(), values.tolist()))
