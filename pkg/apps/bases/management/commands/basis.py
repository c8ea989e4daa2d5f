import logging

from apps.bases.bsplines import TrigBSpline
from apps.bases.fundamental import FundamentalBasis
from apps.bases.serializers import FUNDAMENTAL, BSplineKindSerializer
from apps.interpolation.management.commands._base import TableCommand, read_text
from apps.interpolation.management.commands.eval import dense_points, parse_point_list
from apps.interpolation.grids import GridFamily
from apps.interpolation.serializers import PointsSerializer, SplineConfigSerializer

logger = logging.getLogger(__name__)


class Command(TableCommand):
    help = 'Dump B-splines or fundamental splines on a dense grid, one column per basis index.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--kind', required=True, help='BR, BC, BR0, BC0, BR1, BC1 or fundamental')
        parser.add_argument('--r', type=int, required=True)
        parser.add_argument('--q', type=int, default=0)
        parser.add_argument('--n', type=int, default=9)
        parser.add_argument('--indicator', type=int, default=0, help='Centre grid of the B-splines.')
        parser.add_argument('--family', default='full', help='Fundamental splines only.')
        parser.add_argument('--i1', type=int, default=0, help='Fundamental splines only.')
        parser.add_argument('--i2', type=int, default=0, help='Fundamental splines only.')
        parser.add_argument('--factor', default='power', help='Fundamental splines only.')
        parser.add_argument('--points', default='dense:500', help='dense:K or list:FILE')
        self.add_truncation_arguments(parser)

    def build_table(self, **options):
        points = self.validated(PointsSerializer(data={'points': options['points']}))
        kind, argument = points.validated_data['points']
        truncation = {key: options[key] for key in ('trunc_terms', 'trunc_tol')}

        if options['kind'].lower() == FUNDAMENTAL:
            serializer = self.validated(SplineConfigSerializer(data={
                **truncation,
                **{key: options[key] for key in ('family', 'i1', 'i2', 'factor', 'r', 'q', 'n')},
            }))
            cfg = serializer.save()
            family = cfg.family
            basis = FundamentalBasis(cfg)
            prefix = 'phi'
        else:
            serializer = self.validated(BSplineKindSerializer(data={
                **truncation,
                'kind': options['kind'].upper(),
                **{key: options[key] for key in ('r', 'q', 'n', 'indicator')},
            }))
            spline_kind = serializer.save()
            family = GridFamily.FULL
            basis = TrigBSpline(spline_kind, serializer.validated_data['indicator'])
            prefix = spline_kind.label

        if kind == 'dense':
            t = dense_points(family, argument)
        else:
            t = parse_point_list(read_text(argument))
        logger.info('dumping %s basis at %d points', prefix, t.size)
        values = basis.values(t)
        columns = ['t'] + [f'{prefix}_{j}' for j in range(1, values.shape[1] + 1)]
        return columns, [[x, *row] for x, row in zip(t.tolist(), values.tolist())]

