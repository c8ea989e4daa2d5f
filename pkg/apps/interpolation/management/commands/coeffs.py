import io

from apps.interpolation.discrete_fourier import coefficients
from apps.interpolation.io import read_samples
from apps.interpolation.serializers import GridSerializer

from ._base import TableCommand, read_text


class Command(TableCommand):
    help = 'Compute the interpolating trigonometric polynomial coefficients of a samples file.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--family', required=True)
        parser.add_argument('--i', dest='indicator', type=int, default=0)
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--samples', required=True, help='CSV with header j,f or x,f.')

    def build_table(self, **options):
        serializer = self.validated(GridSerializer(data={
            'family': options['family'],
            'indicator': options['indicator'],
            'n': options['n'],
        }))
        grid = serializer.save()
        samples = read_samples(io.StringIO(read_text(options['samples'])), grid)
        return ['k', 'a_k', 'b_k'], list(coefficients(samples).rows())
