from math import cos, fsum, pi, sin

import numpy as np
import numpy.testing as nptest
from django.test import SimpleTestCase

from apps.interpolation.exceptions import ConfigurationError, DegenerateKernelError, GridError
from apps.interpolation.factors import ConvergenceFactor, sigma
from apps.interpolation.kernels import (
    FixedTerms, KernelTable, SeriesLayout, TailTolerance, c_even, c_full, h_even, h_full, h_odd,
    s_full, s_odd, tail_bound,
)

POWER = ConvergenceFactor.power()
RIEMANN = ConvergenceFactor.riemann()


class LeadingTermTests(SimpleTestCase):

    def test_empty_tail(self):
        none = FixedTerms(0)
        self.assertAlmostEqual(h_full(0, 0, POWER, 2, 3, 9, none), 3.0 ** -3, places=16)
        self.assertAlmostEqual(c_full(0, POWER, 1, 0, 2, 9, 0.4, none), cos(0.8) / 4, places=15)
        self.assertAlmostEqual(s_full(1, POWER, 1, 0, 2, 9, 0.4, none), sin(0.8) / 4, places=15)
        self.assertEqual(h_even(0, POWER, 1, 2, 5, none), 0.25)
        self.assertEqual(h_odd(1, POWER, 1, 2, 5, none), 0.25)

    def test_first_alternating_term(self):
        # one term of the closed I=1 denominator: period 8, m=1 sign -1
        value = h_even(1, POWER, 1, 1, 4, FixedTerms(1))
        self.assertAlmostEqual(value, 1.0 - 9.0 ** -2 - 7.0 ** -2, places=15)

    def test_quarter_phase_at_zero(self):
        for terms in (0, 5, 50):
            self.assertEqual(c_full(0, POWER, 3, 1, 1, 9, 0.0, FixedTerms(terms)), 0.0)
            self.assertEqual(s_full(0, POWER, 3, 0, 2, 9, 0.0, FixedTerms(terms)), 0.0)
            self.assertEqual(s_odd(0, RIEMANN, 2, 0, 3, 7, 0.0, FixedTerms(terms)), 0.0)
            self.assertEqual(s_odd(1, POWER, 2, 0, 7, 7, 0.0, FixedTerms(terms)), 0.0)

    def test_harmonic_range(self):
        with self.assertRaises(GridError):
            h_full(0, 0, POWER, 1, 5, 9)
        with self.assertRaises(GridError):
            h_even(0, POWER, 1, 5, 5)
        with self.assertRaises(ConfigurationError):
            c_full(0, POWER, 2, 3, 1, 9, 0.0)


class SeriesTests(SimpleTestCase):

    def direct_h(self, factor, r, k, period, terms, alternation, reflection):
        factor = factor.with_period(period)
        pairs = [
            (-1) ** (m * alternation) * (sigma(factor, r, m * period + k) + reflection * sigma(factor, r, m * period - k))
            for m in range(1, terms + 1)
        ]
        return sigma(factor, r, k) + fsum(pairs)

    def test_full_denominator_matches_direct_sum(self):
        for i1, i2 in ((0, 0), (0, 1), (1, 1)):
            for r in (1, 2, 3):
                expected = self.direct_h(POWER, r, 2, 9, 300, (i1 + i2) % 2, POWER.reflection_sign(r))
                self.assertAlmostEqual(h_full(i1, i2, POWER, r, 2, 9, FixedTerms(300)), expected, places=13)

    def test_riemann_denominator_matches_direct_sum(self):
        expected = self.direct_h(RIEMANN, 1, 1, 9, 500, 0, 1.0)
        self.assertAlmostEqual(h_full(0, 0, RIEMANN, 1, 1, 9, FixedTerms(500)), expected, places=13)

    def test_tail_bound_holds(self):
        reference = h_full(0, 0, POWER, 1, 1, 3, FixedTerms(20000))
        for terms in (1, 10, 100):
            truncated = h_full(0, 0, POWER, 1, 1, 3, FixedTerms(terms))
            self.assertLessEqual(abs(reference - truncated), tail_bound(POWER, 1, 0, 1, 3, terms))

    def test_tolerance_picks_fewest_terms(self):
        policy = TailTolerance(tolerance=1e-10, max_terms=1000)
        terms = policy.terms_for(POWER, 5, 0, 4, 9)
        self.assertEqual(terms, 7)
        self.assertLessEqual(tail_bound(POWER, 5, 0, 4, 9, terms), 1e-10)
        self.assertGreater(tail_bound(POWER, 5, 0, 4, 9, terms - 1), 1e-10)

    def test_tolerance_caps_and_conditional(self):
        policy = TailTolerance(tolerance=1e-12, max_terms=500, conditional_terms=300)
        self.assertEqual(policy.terms_for(POWER, 1, 0, 1, 9), 500)
        self.assertEqual(policy.terms_for(POWER, 2, 2, 1, 9), 300)
        self.assertEqual(tail_bound(POWER, 2, 2, 1, 9, 10), float('inf'))

    def test_unreachable_tolerance_uses_max_terms(self):
        policy = TailTolerance(tolerance=1e-320, max_terms=50)
        self.assertEqual(policy.terms_for(POWER, 1, 0, 1, 9), 50)
        self.assertEqual(policy.terms_for(RIEMANN.with_period(9), 3, 1, 4, 9), 50)

    def test_phase_derivative(self):
        h = 1e-5
        t = 0.7
        terms = FixedTerms(200)
        derivative = (c_full(0, POWER, 3, 0, 2, 9, t + h, terms) - c_full(0, POWER, 3, 0, 2, 9, t - h, terms)) / (2 * h)
        self.assertLess(abs(derivative - c_full(0, POWER, 3, 1, 2, 9, t, terms)), 1e-6)

        derivative = (c_even(1, RIEMANN, 3, 1, 2, 6, t + h, terms) - c_even(1, RIEMANN, 3, 1, 2, 6, t - h, terms)) / (2 * h)
        self.assertLess(abs(derivative - c_even(1, RIEMANN, 3, 2, 2, 6, t, terms)), 1e-6)

    def test_two_quarter_turns_negate(self):
        terms = FixedTerms(40)
        t = np.linspace(0.1, 3.0, 7)
        second = KernelTable(SeriesLayout(period=2 * 6), POWER, 4, 2, [2], terms)
        # d²/dt² of cos(νt) is -ν² cos(νt)
        m = np.arange(1, 41)
        nu = np.concatenate([[2.0], 12.0 * m + 2, 12.0 * m - 2])
        weights = sigma(POWER, 4, nu)
        expected = -(np.cos(np.outer(t, nu)) * weights * nu ** 2).sum(axis=1)
        nptest.assert_allclose(second.cos_numerators(t)[:, 0], expected, rtol=1e-12, atol=1e-14)

    def test_vectorised_matches_scalar(self):
        t = np.linspace(0.0, 2 * pi, 11)
        vector = c_full(1, POWER, 2, 1, 3, 7, t, FixedTerms(30))
        scalar = [c_full(1, POWER, 2, 1, 3, 7, float(x), FixedTerms(30)) for x in t]
        nptest.assert_allclose(vector, scalar, rtol=0, atol=1e-15)


class KernelTableTests(SimpleTestCase):

    def test_riemann_positive_for_table_orders(self):
        for r in (1, 2, 3, 4, 5, 11):
            for i in (0, 1):
                table = KernelTable(SeriesLayout(period=9, h_alternation=0, numerator_alternation=i),
                                    RIEMANN, r, 0, [1, 2, 3, 4], FixedTerms(200))
                self.assertTrue(np.all(table.denominators > 0), msg=f'r={r}')

    def test_degenerate_denominator(self):
        with self.assertRaises(DegenerateKernelError) as ctx:
            KernelTable(SeriesLayout(period=3), RIEMANN, 1, 0, [3], FixedTerms(0))
        self.assertEqual(ctx.exception.params['k'], 3)

    def test_immutable(self):
        table = KernelTable(SeriesLayout(period=9), POWER, 2, 0, [1, 2], FixedTerms(3))
        with self.assertRaises(ValueError):
            table.denominators[0] = 1.0

    def test_tail_bound_covers_truncation(self):
        t = np.linspace(0.1, 6.0, 13)
        layout = SeriesLayout(period=9)
        short = KernelTable(layout, POWER, 3, 1, [1, 2, 3, 4], FixedTerms(10))
        deep = KernelTable(layout, POWER, 3, 1, [1, 2, 3, 4], FixedTerms(5000))
        bound = short.tail_bound()
        self.assertEqual(bound, tail_bound(POWER, 3, 1, 4, 9, 10))
        self.assertLess(np.max(np.abs(short.cos_numerators(t) - deep.cos_numerators(t))), bound)
        self.assertLess(np.max(np.abs(short.denominators - deep.denominators)), bound)
        self.assertEqual(KernelTable(layout, POWER, 2, 2, [1], FixedTerms(10)).tail_bound(), float('inf'))

    def test_shapes(self):
        table = KernelTable(SeriesLayout(period=9), POWER, 2, 0, [1, 2, 3], FixedTerms(3))
        self.assertEqual(table.cos_numerators(np.zeros(5)).shape, (5, 3))
        self.assertEqual(table.sin_numerators(0.3).shape, (1, 3))
        self.assertEqual(len(table), 3)
