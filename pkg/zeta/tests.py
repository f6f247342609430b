import math
from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from engine.calculus import alpha, cm_cbc_numeric
from graphs.generators import corpus, generate
from graphs.graph import operators
from series.algebra import binomial_power, evaluate, series_log
from series.tpoly import TPoly
from series.useries import USeries
from zeta.exceptions import DomainError, NotRegular
from zeta.routes import (
    bartholdi_determinant_series,
    euler_product_series,
    global_zeta_series,
    ihara_series,
    zeta_log_numeric,
    zeta_log_series,
    zeta_rhs_series,
)
from zeta.spectral import local_spectrum, local_spectrum_product, zeta_spectral

CORPUS = corpus()
TRIANGLE = CORPUS["triangle"]
K4 = CORPUS["K4"]


class LogSeriesTests(SimpleTestCase):
    def test_triangle_geodesics_at_t_zero(self):
        log_z = series_log(zeta_log_series(TRIANGLE, 0, 0, 10).series.substitute_t(0))
        self.assertEqual(log_z.coefficient(3), Fraction(2, 3))

    def test_cycle_four_at_t_zero(self):
        z = zeta_log_series(CORPUS["cycle(4)"], 0, 0, 10).series.substitute_t(0)
        expected = binomial_power(USeries.from_terms({0: 1, 4: -1}, 10), Fraction(-1, 2))
        self.assertEqual(z, expected)

    def test_no_loops_means_no_linear_term(self):
        for name, g in CORPUS.items():
            with self.subTest(graph=name):
                z = zeta_log_series(g, 0, 0, 4).series
                self.assertEqual(z.constant_term, 1)
                self.assertTrue(z.coefficient(1).is_zero())

    def test_off_diagonal_constant_term(self):
        z = zeta_log_series(K4, 0, 1, 4).series
        self.assertEqual(z.constant_term, 1)
        self.assertEqual(z.coefficient(1), 1)

    def test_order_must_be_positive(self):
        with self.assertRaises(ValueError):
            zeta_log_series(K4, 0, 0, 0)


class RouteEquivalenceTests(SimpleTestCase):
    def test_rhs_matches_log_series_on_every_root(self):
        for name, g in CORPUS.items():
            for x0 in range(g.vertex_count):
                with self.subTest(graph=name, root=x0):
                    self.assertEqual(zeta_rhs_series(g, x0, x0, 10).series, zeta_log_series(g, x0, x0, 10).series)

    def test_rhs_matches_log_series_off_diagonal(self):
        for name, x0, x in (("K4", 0, 1), ("path(4)", 0, 1), ("star(4)", 1, 2), ("tree_ball(3,3)", 0, 4)):
            g = CORPUS[name]
            with self.subTest(graph=name, root=x0, target=x):
                self.assertEqual(zeta_rhs_series(g, x0, x, 8).series, zeta_log_series(g, x0, x, 8).series)

    def test_euler_product_matches_log_series_on_every_root(self):
        for name, g in CORPUS.items():
            for x0 in range(g.vertex_count):
                with self.subTest(graph=name, root=x0):
                    self.assertEqual(euler_product_series(g, x0, 10).series, zeta_log_series(g, x0, x0, 10).series)

    def test_single_euler_factor(self):
        factor = binomial_power(USeries.from_terms({0: 1, 2: -TPoly.monomial(2)}, 4), Fraction(-1, 2))
        self.assertEqual(factor.coefficient(2), TPoly.monomial(2, Fraction(1, 2)))

    def test_t_zero_substitution_on_k4(self):
        rhs = zeta_rhs_series(K4, 0, 0, 8).series.substitute_t(0)
        self.assertEqual(rhs, ihara_series(K4, 0, 8).series)

    def test_ihara_is_t_zero_column(self):
        for name, g in CORPUS.items():
            with self.subTest(graph=name):
                self.assertEqual(ihara_series(g, 0, 8).series, zeta_log_series(g, 0, 0, 8).series.substitute_t(0))


class GlobalZetaTests(SimpleTestCase):
    def test_determinant_formula(self):
        for name in ("triangle", "K4", "cycle(4)"):
            g = CORPUS[name]
            with self.subTest(graph=name):
                self.assertEqual(bartholdi_determinant_series(g, 8), global_zeta_series(g, 8))

    def test_product_of_rooted_zetas(self):
        for name in ("triangle", "K4", "star(4)"):
            g = CORPUS[name]
            product = USeries.one(8)
            for x0 in range(g.vertex_count):
                product = product * zeta_log_series(g, x0, x0, 8).series
            with self.subTest(graph=name):
                self.assertEqual(product, global_zeta_series(g, 8))


class LocalSpectrumTests(SimpleTestCase):
    def test_complete_graph(self):
        spectrum = local_spectrum(K4, 0)
        np.testing.assert_allclose(spectrum.eigenvalues, [0, 4], atol=1e-12)
        np.testing.assert_allclose(spectrum.weights, [0.25, 0.75], atol=1e-12)
        self.assertEqual(spectrum.multiplicities, (1, 3))

    def test_cycle_four(self):
        spectrum = local_spectrum(CORPUS["cycle(4)"], 0)
        np.testing.assert_allclose(spectrum.eigenvalues, [0, 2, 4], atol=1e-12)
        self.assertEqual(spectrum.multiplicities, (1, 2, 1))
        self.assertAlmostEqual(spectrum.weights[0], 0.25, places=12)

    def test_resolution_of_identity_and_degree(self):
        for name, g in CORPUS.items():
            for x0 in range(g.vertex_count):
                spectrum = local_spectrum(g, x0)
                with self.subTest(graph=name, root=x0):
                    self.assertAlmostEqual(spectrum.weights.sum(), 1.0, places=10)
                    self.assertTrue(np.all(spectrum.weights > -1e-12))
                    self.assertAlmostEqual(spectrum.integrate(lambda lam: lam), g.degrees[x0], places=9)

    def test_off_diagonal_weights_sum_to_zero(self):
        spectrum = local_spectrum(CORPUS["star(4)"], 0, 1)
        self.assertAlmostEqual(spectrum.weights.sum(), 0.0, places=12)
        # Σ λ μ_{x0,x} = Δ(x0, x) = -1 para vizinhos
        self.assertAlmostEqual(spectrum.integrate(lambda lam: lam), -1.0, places=10)


class SpectralZetaTests(SimpleTestCase):
    def test_k4_against_log_series(self):
        expected = evaluate(zeta_log_series(K4, 0, 0, 20).series, 0.25, 0.1)
        result = zeta_spectral(K4, 0, 0, 0.1, 0.25)
        self.assertLess(abs(result.value - expected) / expected, 1e-9)
        self.assertEqual(result.order, 20)

    def test_small_u_limit(self):
        self.assertAlmostEqual(zeta_spectral(CORPUS["petersen"], 0, 0, 1e-9, 0.3).value, 1.0, places=12)

    def test_petersen_at_t_zero(self):
        expected = evaluate(ihara_series(CORPUS["petersen"], 0, 12).series, 0, 0.05)
        result = zeta_spectral(CORPUS["petersen"], 0, 0, 0.05, 0.0)
        self.assertLess(abs(result.value - expected) / expected, 1e-9)

    def test_numeric_grid(self):
        for name in ("K4", "hypercube(3)", "petersen", "cycle(6)"):
            g = CORPUS[name]
            for t in (-0.5, -0.25, 0.0, 0.25, 0.5):
                limit = 1 / alpha(g, abs(t))
                for fraction in (0.16, 0.32, 0.48, 0.64, 0.8):
                    u = fraction * limit
                    with self.subTest(graph=name, t=t, u=u):
                        spectral = zeta_spectral(g, 0, 0, u, t).value
                        reference = zeta_log_numeric(g, 0, 0, u, t).value
                        self.assertLess(abs(spectral - reference) / reference, 1e-9)

    def test_two_point_value(self):
        spectral = zeta_spectral(K4, 0, 1, 0.1, 0.25).value
        reference = zeta_log_numeric(K4, 0, 1, 0.1, 0.25).value
        self.assertLess(abs(spectral - reference) / reference, 1e-9)

    def test_product_form_equals_integral_form(self):
        g = CORPUS["petersen"]
        u, t = 0.1, 0.3
        r = (1 - t) * (2 + t)
        integral = local_spectrum(g, 0).integrate(lambda lam: -np.log(1 - (3 - lam) * u + r * u * u))
        self.assertAlmostEqual(local_spectrum_product(g, 0, u, t), math.exp(integral), places=12)

    def test_domain_errors(self):
        with self.assertRaises(NotRegular):
            zeta_spectral(CORPUS["star(4)"], 0, 0, 0.1, 0.2)
        with self.assertRaises(DomainError):
            zeta_spectral(K4, 0, 0, 1.0, 0.2)
        with self.assertRaises(DomainError):
            zeta_spectral(K4, 0, 0, 0.1, 1.0)

    def test_non_regular_graphs_are_rejected(self):
        for name in ("star(4)", "path(4)", "tree_ball(3,3)"):
            g = CORPUS[name]
            self.assertFalse(g.is_regular())
            with self.subTest(graph=name):
                with self.assertRaises(NotRegular):
                    zeta_spectral(g, 0, 0, 0.05, 0.2)
                with self.assertRaises(NotRegular):
                    zeta_spectral(g, 0, 1, 0.05, 0.0)
                with self.assertRaises(NotRegular):
                    local_spectrum_product(g, 0, 0.05, 0.2)

    def test_log_numeric_against_exact_series(self):
        g = CORPUS["path(4)"]
        exact_log = evaluate(series_log(zeta_log_series(g, 1, 1, 12).series), 0.4, 0.1)
        numeric = zeta_log_numeric(g, 1, 1, 0.1, 0.4, order=12)
        self.assertEqual(numeric.order, 12)
        self.assertAlmostEqual(math.log(numeric.value), exact_log, places=12)

    def test_diagonal_terms_within_walk_count(self):
        # |C_m^cbc(x0, x0)| <= (A^m)(x0, x0) <= α^m sustenta a cota da cauda na diagonal
        for name in ("K4", "star(4)", "petersen", "tree_ball(3,3)"):
            g = CORPUS[name]
            walks = np.linalg.matrix_power(operators(g).adjacency.astype(float), 12)
            for t in (-0.9, -0.5, 0.0, 0.5, 0.9):
                cbc = cm_cbc_numeric(g, t, 12)
                with self.subTest(graph=name, t=t):
                    diagonal = np.abs(np.diagonal(cbc[12]))
                    self.assertTrue(np.all(diagonal <= np.diagonal(walks) * (1 + 1e-8) + 1e-8))
                    self.assertLessEqual(walks.diagonal().max(), alpha(g, abs(t)) ** 12)
