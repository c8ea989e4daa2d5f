from apps.interpolation.grids import nodes
from apps.interpolation.serializers import GridSerializer

from ._base import TableCommand


class Command(TableCommand):
    help = 'Print the nodes of a grid as CSV rows j,x.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--family', required=True)
        parser.add_argument('--i', dest='indicator', type=int, default=0)
        parser.add_argument('--n', type=int, required=True)

    def build_table(self, **options):
        serializer = self.validated(GridSerializer(data={
            'family': options['family'],
            'indicator': options['indicator'],
            'n': options['n'],
        }))
        grid = serializer.save()
        return ['j', 'x'], [(j, x) for j, x in enumerate(nodes(grid), start=1)]
