"""
Shared plumbing for the spline management commands.
"""
import io
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from apps.interpolation.exceptions import ConfigurationError, NumericalError
from apps.interpolation.io import write_table
from apps.interpolation.serializers import first_error

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
NUMERICAL_ERROR = 3


class TableCommand(BaseCommand):
    """
    A command that computes one table and writes it as CSV or JSON.

    Subclasses implement `build_table(**options)` returning (columns, rows).
    """

    def add_arguments(self, parser):
        parser.add_argument('--format', dest='output_format', choices=['csv', 'json'], default='csv')
        parser.add_argument('--output', default=None, help='Write to this file instead of stdout.')

    def add_truncation_arguments(self, parser):
        parser.add_argument('--trunc-terms', type=int, default=None, help='Fixed number of m-terms per series.')
        parser.add_argument('--trunc-tol', type=float, default=None, help='Tail tolerance of the series.')

    def validated(self, serializer):
        if not serializer.is_valid():
            raise CommandError(first_error(serializer.errors), returncode=USAGE_ERROR)
        return serializer

    def handle(self, *args, **options):
        try:
            columns, rows = self.build_table(**options)
        except ConfigurationError as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR)
        except NumericalError as exc:
            raise CommandError(str(exc), returncode=NUMERICAL_ERROR)

        buffer = io.StringIO()
        write_table(
            buffer, columns, rows,
            output_format=options['output_format'],
            digits=settings.TRIGSPLINE['SIGNIFICANT_DIGITS'],
        )
        if options['output']:
            with open(options['output'], 'w', encoding='utf-8', newline='') as handle:
                handle.write(buffer.getvalue())
            logger.info('wrote %d rows to %s', len(rows), options['output'])
        else:
            self.stdout.write(buffer.getvalue(), ending='')

    def build_table(self, **options):
        raise NotImplementedError


def read_text(path):
    try:
        with open(path, encoding='utf-8', newline='') as handle:
            return handle.read()
    except OSError as exc:
        raise CommandError(f'cannot read {path}: {exc.strerror}', returncode=USAGE_ERROR)
