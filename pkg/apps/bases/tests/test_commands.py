import csv
import io
import json
from math import pi

import numpy as np
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase


def run(*args, **options):
    out = io.StringIO()
    call_command(*args, stdout=out, **options)
    return out.getvalue()


class DetCommandTests(SimpleTestCase):

    def test_rows_per_kind(self):
        rows = list(csv.reader(io.StringIO(run('det', kinds='BR,br0', orders='1,2', trunc_terms=100))))
        self.assertEqual(rows[0], ['kind', 'r=1', 'r=2'])
        self.assertEqual([row[0] for row in rows[1:]], ['BR', 'BR0'])
        self.assertLess(abs(float(rows[1][1]) - 25.1548), 0.25)
        self.assertLess(abs(float(rows[2][2]) - 105.3279), 1.05)

    def test_all_kinds_json(self):
        data = json.loads(run('det', orders='1', output_format='json', trunc_terms=20))
        self.assertEqual([row[0] for row in data['rows']], ['BR', 'BC', 'BR0', 'BC0', 'BR1', 'BC1'])
        self.assertTrue(all(row[1] > 0 for row in data['rows']))

    def test_unknown_kind(self):
        with self.assertRaises(CommandError) as ctx:
            run('det', kinds='BR,BQ')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_bad_orders(self):
        for orders in ('0', '1,x', ''):
            with self.assertRaises(CommandError):
                run('det', orders=orders)

    def test_both_truncations(self):
        with self.assertRaises(CommandError) as ctx:
            run('det', orders='1', trunc_terms=5, trunc_tol=1e-8)
        self.assertEqual(ctx.exception.returncode, 2)


class BasisCommandTests(SimpleTestCase):

    def test_bspline_columns(self):
        rows = list(csv.reader(io.StringIO(run('basis', kind='BC0', r=2, n=5, points='dense:8', trunc_terms=30))))
        self.assertEqual(rows[0], ['t', 'BC0_1', 'BC0_2', 'BC0_3', 'BC0_4', 'BC0_5'])
        self.assertEqual(len(rows), 9)
        self.assertAlmostEqual(float(rows[-1][0]), 2 * pi * 7 / 8, places=15)

    def test_fundamental_columns(self):
        data = json.loads(run(
            'basis', kind='fundamental', family='odd', i1=1, i2=1, r=2, n=4,
            points='dense:5', output_format='json', trunc_terms=30,
        ))
        self.assertEqual(data['columns'], ['t', 'phi_1', 'phi_2', 'phi_3', 'phi_4'])
        np.testing.assert_array_equal(data['rows'][0][1:], [0.0, 0.0, 0.0, 0.0])

    def test_unknown_kind(self):
        with self.assertRaises(CommandError) as ctx:
            run('basis', kind='spline', r=2)
        self.assertEqual(ctx.exception.returncode, 2)

    def test_even_nodes_for_bsplines(self):
        with self.assertRaises(CommandError) as ctx:
            run('basis', kind='BR', r=2, n=6)
        self.assertEqual(ctx.exception.returncode, 2)
