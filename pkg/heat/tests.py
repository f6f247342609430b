import math

import numpy as np
from django.test import SimpleTestCase
from scipy.special import iv

from graphs.generators import corpus
from heat.bessel import bessel_i
from heat.exceptions import NonconvergentTail, ParameterDomain
from heat.kernel import d_coefficient, heat_kernel_bessel, heat_kernel_row, heat_kernel_spectral, heat_residual
from heat.transform import GrowthBound, bessel_package, g_transform, section7_check
from zeta.exceptions import DomainError, NotRegular

CORPUS = corpus()
K4 = CORPUS["K4"]
REGULAR = ("triangle", "cycle(4)", "cycle(6)", "K4", "hypercube(3)", "petersen")
TAU_GRID = np.linspace(0, 5, 11)


def k4_diagonal(tau):
    return 0.25 + 0.75 * math.exp(-4 * tau)


class BesselTests(SimpleTestCase):
    def test_values_at_zero(self):
        self.assertEqual(bessel_i(0, 0.0).value, 1.0)
        for n in range(1, 5):
            self.assertEqual(bessel_i(n, 0.0).value, 0.0)

    def test_against_scipy(self):
        for n in range(0, 12):
            for tau in (0.1, 1.0, 3.0, 7.5):
                with self.subTest(n=n, tau=tau):
                    result = bessel_i(n, tau, 1e-14)
                    self.assertLess(result.tail_bound, 1e-14)
                    self.assertAlmostEqual(result.value, iv(n, tau), delta=1e-12 * max(1.0, iv(n, tau)))

    def test_negative_order(self):
        self.assertEqual(bessel_i(-3, 2.0).value, bessel_i(3, 2.0).value)

    def test_derivative_recurrence(self):
        h = 1e-5
        for n in range(1, 7):
            for tau in (0.5, 1.0, 2.0):
                derivative = (bessel_i(n, tau + h).value - bessel_i(n, tau - h).value) / (2 * h)
                with self.subTest(n=n, tau=tau):
                    self.assertAlmostEqual(
                        2 * derivative, bessel_i(n - 1, tau).value + bessel_i(n + 1, tau).value, delta=1e-8
                    )

    def test_growth_bound(self):
        for n in range(11):
            for tau in np.linspace(0, 5, 11):
                with self.subTest(n=n, tau=tau):
                    bound = (tau / 2) ** n * math.exp(tau) / math.factorial(n)
                    self.assertLessEqual(bessel_i(n, tau).value, bound * (1 + 1e-12))

    def test_rejects_negative_argument(self):
        with self.assertRaises(ValueError):
            bessel_i(1, -0.5)


class BesselHeatKernelTests(SimpleTestCase):
    def test_initial_condition(self):
        for t in (-0.5, 0.0, 0.5):
            row, truncation, bound = heat_kernel_row(CORPUS["petersen"], 3, 0.0, t)
            with self.subTest(t=t):
                np.testing.assert_allclose(row, np.eye(10)[3], atol=1e-15)
                self.assertEqual(truncation, (1, 1))
                self.assertEqual(bound, 0.0)

    def test_k4_diagonal(self):
        for tau in (0.1, 0.5, 1, 2, 5):
            with self.subTest(tau=tau):
                result = heat_kernel_bessel(K4, 0, 0, tau, 0.0, tol=1e-8)
                self.assertAlmostEqual(result.value, k4_diagonal(tau), delta=1e-8)
                self.assertLess(result.tail_bound, 1e-8)
                self.assertEqual(result.route, "bessel")

    def test_independent_of_t(self):
        for name in ("K4", "hypercube(3)", "cycle(6)", "petersen"):
            g = CORPUS[name]
            for tau in (0.5, 2.0):
                values = [heat_kernel_bessel(g, 0, 1, tau, t).value for t in (-0.5, 0.0, 0.5)]
                with self.subTest(graph=name, tau=tau):
                    self.assertLess(max(values) - min(values), 2e-10)

    def test_matches_spectral_route(self):
        for name in REGULAR:
            g = CORPUS[name]
            for t in (-0.5, 0.0, 0.5):
                for tau in TAU_GRID:
                    row, _, _ = heat_kernel_row(g, 0, tau, t)
                    spectral = [heat_kernel_spectral(g, 0, x, tau).value for x in range(g.vertex_count)]
                    with self.subTest(graph=name, t=t, tau=tau):
                        np.testing.assert_allclose(row, spectral, atol=1e-8)

    def test_symmetry(self):
        g = CORPUS["petersen"]
        self.assertAlmostEqual(
            heat_kernel_bessel(g, 0, 7, 1.3, 0.2).value, heat_kernel_bessel(g, 7, 0, 1.3, 0.2).value, delta=1e-12
        )

    def test_parameter_domain(self):
        with self.assertRaises(ParameterDomain):
            heat_kernel_bessel(K4, 0, 0, 1.0, 1.0)
        with self.assertRaises(ParameterDomain):
            heat_kernel_bessel(K4, 0, 0, -1.0, 0.0)
        with self.assertRaises(NotRegular):
            heat_kernel_bessel(CORPUS["star(4)"], 0, 0, 1.0, 0.0)

    def test_non_regular_graphs_are_rejected(self):
        for name in ("star(4)", "path(4)", "tree_ball(3,3)"):
            g = CORPUS[name]
            with self.subTest(graph=name):
                with self.assertRaises(NotRegular):
                    heat_kernel_bessel(g, 0, 0, 1.0, 0.0)
                with self.assertRaises(NotRegular):
                    heat_kernel_row(g, 0, 0.5, 0.25)
                with self.assertRaises(NotRegular):
                    section7_check(g, 0, 0, 0.05, 0.0)
                # a rota espectral não depende de regularidade
                self.assertGreater(heat_kernel_spectral(g, 0, 0, 1.0).value, 0.0)

    def test_d_coefficients(self):
        self.assertEqual(d_coefficient(0, 0.3, 2), 1.0)
        self.assertEqual(d_coefficient(4, 0.0, 3), -2.0)
        with self.assertRaises(ParameterDomain):
            d_coefficient(1, 1.0, 2)


class SpectralHeatKernelTests(SimpleTestCase):
    def test_initial_condition(self):
        g = CORPUS["star(4)"]
        for x in range(g.vertex_count):
            self.assertAlmostEqual(heat_kernel_spectral(g, 1, x, 0.0).value, float(x == 1), places=12)

    def test_k4_diagonal(self):
        for tau in TAU_GRID:
            self.assertAlmostEqual(heat_kernel_spectral(K4, 2, 2, tau).value, k4_diagonal(tau), places=12)

    def test_heat_conservation(self):
        for name, g in CORPUS.items():
            for tau in TAU_GRID:
                total = sum(heat_kernel_spectral(g, 0, x, tau).value for x in range(g.vertex_count))
                with self.subTest(graph=name, tau=tau):
                    self.assertAlmostEqual(total, 1.0, delta=1e-12)

    def test_diagonal_decay(self):
        for name, g in CORPUS.items():
            values = [heat_kernel_spectral(g, 0, 0, tau).value for tau in TAU_GRID]
            with self.subTest(graph=name):
                self.assertTrue(all(a >= b - 1e-15 for a, b in zip(values, values[1:])))


class HeatResidualTests(SimpleTestCase):
    def test_bessel_route(self):
        self.assertLess(heat_residual(K4, 0, 1.0, 1e-4), 1e-6)
        self.assertLess(heat_residual(CORPUS["cycle(6)"], 0, 0.5, 1e-4), 1e-6)

    def test_spectral_route(self):
        for name, g in CORPUS.items():
            with self.subTest(graph=name):
                self.assertLess(heat_residual(g, 0, 1.0, 1e-4, route="spectral"), 1e-12)

    def test_step_must_be_smaller_than_tau(self):
        with self.assertRaises(ParameterDomain):
            heat_residual(K4, 0, 1e-5, 1e-4)


class GTransformTests(SimpleTestCase):
    def test_bessel_package_orders_zero_and_one(self):
        u, t, q = 0.1, 0.2, 2
        for k, expected in ((0, 1 / u), (1, 1.0)):
            f, growth = bessel_package(k, t, q)
            with self.subTest(k=k):
                self.assertAlmostEqual(g_transform(f, u, t, q, growth=growth), expected, delta=1e-6)

    def test_bessel_package_order_five(self):
        f, growth = bessel_package(5, 0.3, 2)
        value = g_transform(f, 0.1, 0.3, 2, growth=growth)
        self.assertLess(abs(value - 0.1**4) / 0.1**4, 1e-6)

    def test_powers_of_u_on_grid(self):
        q = 2
        for t in (-0.3, 0.0, 0.3):
            for u in (0.05, 0.1, 0.2):
                for k in range(11):
                    f, growth = bessel_package(k, t, q)
                    with self.subTest(t=t, u=u, k=k):
                        value = g_transform(f, u, t, q, growth=growth)
                        self.assertLess(abs(value - u ** (k - 1)) / u ** (k - 1), 1e-6)

    def test_domain(self):
        f, growth = bessel_package(0, 0.0, 2)
        with self.assertRaises(DomainError):
            g_transform(f, 1.0, 0.0, 2, growth=growth)
        with self.assertRaises(DomainError):
            g_transform(f, 0.1, 1.0, 2, growth=growth)

    def test_growth_beyond_decay(self):
        with self.assertRaises(NonconvergentTail):
            g_transform(np.exp, 0.5, 0.0, 2, growth=GrowthBound(constant=1.0, rate=10.0))


class TransformCheckTests(SimpleTestCase):
    def test_k4(self):
        report = section7_check(K4, 0, 0, 0.08, 0.25)
        self.assertTrue(report["passed"], report)
        self.assertLess(report["max_deviation"], 1e-6)

    def test_cycle_six(self):
        self.assertTrue(section7_check(CORPUS["cycle(6)"], 0, 0, 0.1, 0.0)["passed"])

    def test_off_diagonal_on_cube(self):
        report = section7_check(CORPUS["hypercube(3)"], 0, 3, 0.08, 0.1)
        self.assertTrue(report["passed"], report)

    def test_domain(self):
        with self.assertRaises(DomainError):
            section7_check(K4, 0, 0, 0.5, 0.25)
        with self.assertRaises(NotRegular):
            section7_check(CORPUS["path(4)"], 0, 0, 0.1, 0.0)
