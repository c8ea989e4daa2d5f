import csv
import io
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from apps.interpolation.exceptions import ConfigurationError
from apps.interpolation.kernels import FixedTerms, TailTolerance
from apps.verification import checks
from apps.verification.checks import REGISTRY, CheckContext, SeriesId, agreement_limit, random_series, run_checks
from apps.verification.oracle import OracleConfig

FAST = CheckContext(
    truncation=FixedTerms(100),
    oracle=OracleConfig(reference_terms=10 ** 4, quadrature_points=2000),
    oracle_samples=10,
    dense_points=64,
)


def run(*args, **options):
    out = io.StringIO()
    call_command(*args, stdout=out, **options)
    return out.getvalue()


class CheckSuiteTests(SimpleTestCase):

    def assertPasses(self, name, context=FAST):
        result, = run_checks([name], context)
        self.assertTrue(result.passed, msg=f'{name}: {result.detail}')
        self.assertEqual(result.status, 'PASS')
        return result

    def test_registry(self):
        self.assertEqual(list(REGISTRY), [
            'determinants', 'interpolation', 'representations', 'cubic', 'unit_integral',
            'fundamental', 'boundary', 'derivatives', 'oracle',
        ])

    def test_determinants(self):
        result = self.assertPasses('determinants')
        self.assertEqual(result.detail, 'all cells within tolerance')

    def test_interpolation(self):
        self.assertPasses('interpolation')

    def test_representations(self):
        self.assertPasses('representations')

    def test_cubic(self):
        self.assertPasses('cubic')

    def test_node_and_cubic_checks_ignore_configured_depth(self):
        slow = CheckContext(TailTolerance(1e-14, 10 ** 5, 10 ** 5), FAST.oracle)
        for name, seconds in (('interpolation', 30.0), ('cubic', 10.0)):
            result = self.assertPasses(name, slow)
            self.assertLess(result.seconds, seconds)

    def test_unit_integral(self):
        self.assertPasses('unit_integral')

    def test_fundamental(self):
        self.assertPasses('fundamental')

    def test_boundary(self):
        self.assertPasses('boundary')

    def test_derivatives(self):
        self.assertPasses('derivatives')

    def test_oracle(self):
        context = CheckContext(TailTolerance(1e-12, 2000, 2000), FAST.oracle, oracle_samples=25)
        self.assertPasses('oracle', context)

    def test_unknown_check(self):
        with self.assertRaises(ConfigurationError):
            run_checks(['nonsense'], FAST)


class RandomSeriesTests(SimpleTestCase):

    def test_tuples_are_valid(self):
        rng = FAST.rng(1)
        for _ in range(100):
            series, params, t = random_series(rng)
            self.assertLess(params.q, params.r)
            self.assertGreaterEqual(params.k, 1)
            if series in (SeriesId.H_FULL, SeriesId.C_FULL, SeriesId.S_FULL):
                self.assertLessEqual(params.k, params.n_nodes // 2)
            self.assertGreaterEqual(agreement_limit(series, params, FAST.truncation, FAST.oracle), 1e-10)


class CheckCommandTests(SimpleTestCase):

    def test_report(self):
        text = run('check_splines', only=['boundary', 'unit_integral'])
        rows = list(csv.reader(io.StringIO(text)))
        self.assertEqual(rows[0], ['check', 'status', 'seconds', 'detail'])
        self.assertEqual([(row[0], row[1]) for row in rows[1:]], [('boundary', 'PASS'), ('unit_integral', 'PASS')])

    def test_failure_exit_code(self):
        failing = {'broken': ('Always fails', lambda ctx: (False, 'forced failure'))}
        out = io.StringIO()
        with mock.patch.dict(checks.REGISTRY, failing):
            with self.assertRaises(CommandError) as ctx:
                call_command('check_splines', only=['broken'], stdout=out)
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertIn('broken,FAIL', out.getvalue())

    def test_unknown_name(self):
        with self.assertRaises(CommandError) as ctx:
            run('check_splines', only=['nonsense'])
        self.assertEqual(ctx.exception.returncode, 2)
