from math import pi

import numpy as np
import numpy.testing as nptest
from django.test import SimpleTestCase

from apps.interpolation.exceptions import GridError
from apps.interpolation.grids import GridFamily, GridSpec, node, nodes, spacing


class NodeTests(SimpleTestCase):

    def test_node_formulas(self):
        self.assertEqual(node(GridSpec(GridFamily.FULL, 0, 9), 1), 0.0)
        self.assertAlmostEqual(node(GridSpec(GridFamily.FULL, 1, 3), 2), pi, places=15)
        self.assertAlmostEqual(node(GridSpec(GridFamily.EVEN, 0, 5), 5), pi, places=15)
        self.assertAlmostEqual(node(GridSpec(GridFamily.ODD, 0, 3), 2), pi / 2, places=15)

    def test_nodes_match_node(self):
        for family, indicator, n in [('full', 1, 7), ('even', 0, 6), ('even', 1, 6), ('odd', 0, 4), ('odd', 1, 4)]:
            grid = GridSpec(family, indicator, n)
            expected = [node(grid, j) for j in range(1, n + 1)]
            nptest.assert_array_equal(nodes(grid), expected)

    def test_constant_spacing(self):
        for family, indicator, n in [('full', 0, 9), ('full', 1, 9), ('even', 0, 8), ('even', 1, 8), ('odd', 0, 8), ('odd', 1, 8)]:
            grid = GridSpec(family, indicator, n)
            steps = np.diff(nodes(grid))
            nptest.assert_allclose(steps, spacing(grid), rtol=0, atol=1e-15 * 16)
            self.assertTrue(np.all(steps > 0))

    def test_endpoints(self):
        closed = nodes(GridSpec(GridFamily.EVEN, 0, 5))
        self.assertEqual(closed[0], 0.0)
        self.assertAlmostEqual(closed[-1], pi, places=15)

        open_nodes = nodes(GridSpec(GridFamily.ODD, 0, 5))
        self.assertGreater(open_nodes[0], 0.0)
        self.assertLess(open_nodes[-1], pi)

        full = nodes(GridSpec(GridFamily.FULL, 0, 5))
        self.assertEqual(full[0], 0.0)
        self.assertLess(full[-1], 2 * pi)

    def test_phase_one_grids_coincide(self):
        for n in (2, 5, 8):
            nptest.assert_array_equal(
                nodes(GridSpec(GridFamily.EVEN, 1, n)),
                nodes(GridSpec(GridFamily.ODD, 1, n)),
            )

    def test_period(self):
        self.assertEqual(GridSpec('full', 0, 9).period, 9)
        self.assertEqual(GridSpec('even', 0, 9).period, 16)
        self.assertEqual(GridSpec('even', 1, 9).period, 18)
        self.assertEqual(GridSpec('odd', 0, 9).period, 20)
        self.assertEqual(GridSpec('odd', 1, 9).period, 18)


class GridValidationTests(SimpleTestCase):

    def test_full_needs_odd_count(self):
        with self.assertRaises(GridError):
            GridSpec(GridFamily.FULL, 0, 4)
        with self.assertRaises(GridError):
            GridSpec(GridFamily.FULL, 0, 1)

    def test_minimum_counts(self):
        with self.assertRaises(GridError):
            GridSpec(GridFamily.EVEN, 0, 1)
        with self.assertRaises(GridError):
            GridSpec(GridFamily.ODD, 1, 0)
        GridSpec(GridFamily.ODD, 0, 1)

    def test_indicator(self):
        with self.assertRaises(GridError):
            GridSpec(GridFamily.EVEN, 2, 5)

    def test_index_out_of_range(self):
        grid = GridSpec(GridFamily.ODD, 0, 3)
        with self.assertRaises(GridError):
            node(grid, 0)
        with self.assertRaises(GridError):
            node(grid, 4)

    def test_unknown_family(self):
        with self.assertRaises(ValueError):
            GridSpec('triangle', 0, 3)
