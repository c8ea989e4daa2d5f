from math import pi

import numpy as np
import numpy.testing as nptest
from django.test import SimpleTestCase
from scipy.interpolate import CubicSpline

from apps.interpolation.discrete_fourier import Samples
from apps.interpolation.exceptions import ConfigurationError
from apps.interpolation.factors import ConvergenceFactor
from apps.interpolation.grids import GridSpec, nodes
from apps.interpolation.kernels import FixedTerms, c_full, h_full, s_odd
from apps.verification.oracle import (
    OracleConfig, SeriesId, SeriesParams, brute_series, periodic_cubic_bspline, periodic_cubic_spline,
    quadrature_unit_integral, tail_estimate,
)

POWER = ConvergenceFactor.power()
RIEMANN = ConvergenceFactor.riemann()
SMALL = OracleConfig(reference_terms=20000, quadrature_points=2000)


class BruteSeriesTests(SimpleTestCase):

    def test_matches_kernels_at_same_depth(self):
        params = SeriesParams(POWER, 3, 1, 9, q=0, i1=1)
        config = OracleConfig(reference_terms=50)
        self.assertAlmostEqual(
            brute_series(SeriesId.C_FULL, params, 0.7, config),
            c_full(1, POWER, 3, 0, 1, 9, 0.7, FixedTerms(50)),
            places=14,
        )
        self.assertAlmostEqual(
            brute_series(SeriesId.H_FULL, SeriesParams(RIEMANN, 2, 3, 9, i1=0, i2=1), config=config),
            h_full(0, 1, RIEMANN, 2, 3, 9, FixedTerms(50)),
            places=14,
        )

    def test_leading_term_only_tail(self):
        params = SeriesParams(POWER, 5, 1, 9)
        reference = brute_series(SeriesId.H_FULL, params, config=SMALL)
        leading = h_full(0, 0, POWER, 5, 1, 9, FixedTerms(0))
        bound = sum(2 * (m * 9 - 1) ** -6.0 for m in range(1, 1000))
        self.assertLessEqual(abs(reference - leading), bound)

    def test_converged(self):
        params = SeriesParams(POWER, 1, 1, 3)
        coarse = brute_series(SeriesId.H_FULL, params, config=OracleConfig(reference_terms=10 ** 5))
        fine = brute_series(SeriesId.H_FULL, params, config=OracleConfig(reference_terms=10 ** 6))
        self.assertLess(abs(coarse - fine), tail_estimate(SeriesId.H_FULL, params, OracleConfig(reference_terms=10 ** 5)))

    def test_odd_sine_at_zero(self):
        params = SeriesParams(RIEMANN, 2, 3, 7, q=0, i2=1)
        self.assertEqual(brute_series(SeriesId.S_ODD, params, 0.0, SMALL), 0.0)
        self.assertEqual(s_odd(1, RIEMANN, 2, 0, 3, 7, 0.0), 0.0)

    def test_derivative_numerator(self):
        params = SeriesParams(POWER, 2, 2, 9, q=1)
        value = c_full(0, POWER, 2, 1, 2, 9, 1.1, FixedTerms(20000))
        reference = brute_series(SeriesId.C_FULL, params, 1.1, SMALL)
        limit = 1e-10 + 2 * tail_estimate(SeriesId.C_FULL, params, SMALL)
        self.assertLess(abs(value - reference), limit)

    def test_invalid_config(self):
        with self.assertRaises(ConfigurationError):
            OracleConfig(reference_terms=0)
        with self.assertRaises(ConfigurationError):
            OracleConfig(quadrature_points=1001)


class PeriodicCubicSplineTests(SimpleTestCase):

    def test_constant(self):
        grid = GridSpec('full', 0, 9)
        spline = periodic_cubic_spline(Samples(grid, np.full(9, 2.5)))
        nptest.assert_allclose(spline(np.linspace(0, 2 * pi, 50)), 2.5, rtol=0, atol=1e-13)

    def test_interpolates(self):
        grid = GridSpec('full', 0, 9)
        samples = Samples.of(grid, np.sin)
        nptest.assert_allclose(periodic_cubic_spline(samples)(nodes(grid)), samples.values, rtol=0, atol=1e-12)

    def test_matches_scipy_periodic_spline(self):
        rng = np.random.default_rng(4)
        for n in (3, 5, 9, 15):
            grid = GridSpec('full', 0, n)
            samples = Samples(grid, rng.normal(size=n))
            x = np.append(nodes(grid), 2 * pi)
            y = np.append(samples.values, samples.values[0])
            expected = CubicSpline(x, y, bc_type='periodic')
            t = np.linspace(0, 2 * pi, 200, endpoint=False)
            nptest.assert_allclose(periodic_cubic_spline(samples)(t), expected(t), rtol=0, atol=1e-12)

    def test_scalar_and_wrapping(self):
        grid = GridSpec('full', 0, 7)
        spline = periodic_cubic_spline(Samples.of(grid, np.cos))
        self.assertIsInstance(spline(1.0), float)
        self.assertAlmostEqual(spline(1.0 + 2 * pi), spline(1.0), places=12)

    def test_requires_full_zero_grid(self):
        with self.assertRaises(ConfigurationError):
            periodic_cubic_spline(Samples(GridSpec('full', 1, 9), np.ones(9)))


class CubicBSplineTests(SimpleTestCase):

    def test_unit_integral(self):
        for n in (3, 4, 9):
            self.assertAlmostEqual(quadrature_unit_integral(periodic_cubic_bspline(n, 2)), 1.0, places=6)

    def test_shape(self):
        bspline = periodic_cubic_bspline(9, 3)
        centre = 2 * pi * 2 / 9
        h = 2 * pi / 9
        self.assertAlmostEqual(bspline(centre), 2 / (3 * h), places=14)
        self.assertAlmostEqual(bspline(centre + h), 1 / (6 * h), places=14)
        self.assertEqual(bspline(centre + 2.5 * h), 0.0)
        self.assertAlmostEqual(bspline(centre - 0.3), bspline(centre + 0.3), places=14)

    def test_zero_function(self):
        self.assertEqual(quadrature_unit_integral(np.zeros_like), 0.0)
