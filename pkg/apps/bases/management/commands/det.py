import logging

from apps.bases.bsplines import determinant_table
from apps.bases.serializers import DeterminantTableSerializer
from apps.interpolation.management.commands._base import TableCommand

logger = logging.getLogger(__name__)


class Command(TableCommand):
    help = 'Print |det| of the B-spline collocation matrices, one row per kind and one column per order.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--kinds', default='all', help='Comma separated kinds or "all".')
        parser.add_argument('--r', dest='orders', default='1,2,3,4,5,11', help='Comma separated orders.')
        parser.add_argument('--n', type=int, default=9)
        parser.add_argument('--indicator', type=int, default=0, help='Collocation grid Δ1^(I).')
        self.add_truncation_arguments(parser)

    def build_table(self, **options):
        serializer = self.validated(DeterminantTableSerializer(data={
            key: options[key] for key in ('kinds', 'orders', 'n', 'indicator', 'trunc_terms', 'trunc_tol')
        }))
        data = serializer.validated_data
        truncation = serializer.build_truncation()
        logger.info('determinant table for %s at orders %s', ','.join(data['kinds']), data['orders'])
        table = determinant_table(data['kinds'], data['orders'], data['n'], data['indicator'], truncation)
        columns = ['kind'] + [f'r={r}' for r in data['orders']]
        return columns, [[label, *table[label]] for label in data['kinds']]
