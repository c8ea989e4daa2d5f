import logging

from django.core.management.base import CommandError

from apps.interpolation.management.commands._base import TableCommand
from apps.verification.checks import REGISTRY, CheckContext, run_checks

logger = logging.getLogger(__name__)

CHECK_FAILED = 1


class Command(TableCommand):
    help = 'Run the acceptance suite and print one report row per check.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--only', action='append', default=None, metavar='NAME',
            help=f'Run only this check; repeatable. One of: {", ".join(REGISTRY)}.',
        )
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--oracle-samples', type=int, default=200)

    def build_table(self, **options):
        context = CheckContext.from_settings(seed=options['seed'], oracle_samples=options['oracle_samples'])
        self.results = run_checks(options['only'], context)
        rows = [[result.name, result.status, f'{result.seconds:.2f}', result.detail] for result in self.results]
        return ['check', 'status', 'seconds', 'detail'], rows

    def handle(self, *args, **options):
        super().handle(*args, **options)
        failed = [result.name for result in self.results if not result.passed]
        if failed:
            raise CommandError(f'failed checks: {", ".join(failed)}', returncode=CHECK_FAILED)
