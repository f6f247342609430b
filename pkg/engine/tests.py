import math

import numpy as np
from django.test import SimpleTestCase

from engine.calculus import (
    alpha,
    cbc_sequence,
    cm_cbc,
    cm_cbc_numeric,
    cm_numeric,
    cm_sequence,
    delta_diag,
    r_m,
    r_m_numeric,
)
from engine.exceptions import IdentityViolation
from engine.identities import check_cbc, check_fC, check_fNC, check_R_generating
from graphs.generators import corpus, generate
from graphs.graph import operators
from paths.oracle import Weight, cm_bruteforce, count_closed_geodesics, count_non_backtracking_paths, enumerate_closed_weighted
from series.tpoly import ZERO, TPoly

CORPUS = corpus()
VERTEX_TRANSITIVE = ("triangle", "cycle(4)", "cycle(6)", "K4", "hypercube(3)", "petersen")


class CmSequenceTests(SimpleTestCase):
    def test_triangle_second_term(self):
        seq = cm_sequence(CORPUS["triangle"], 2)
        self.assertEqual(seq[2].diagonal_entries(), (TPoly((0, 2)),) * 3)

    def test_matches_path_oracle(self):
        for name, g in CORPUS.items():
            seq = cm_sequence(g, 8)
            for m in range(9):
                with self.subTest(graph=name, m=m):
                    self.assertEqual(seq[m], cm_bruteforce(g, m))

    def test_symmetry(self):
        for name, g in CORPUS.items():
            for m, C in enumerate(cm_sequence(g, 10)):
                with self.subTest(graph=name, m=m):
                    self.assertTrue(C.is_symmetric())

    def test_specializations(self):
        for name, g in CORPUS.items():
            A = operators(g).adjacency
            power = np.eye(g.vertex_count, dtype=np.int64)
            for m, C in enumerate(cm_sequence(g, 8)):
                with self.subTest(graph=name, m=m):
                    np.testing.assert_array_equal(C.evaluate(1), power)
                    np.testing.assert_array_equal(C.evaluate(0), count_non_backtracking_paths(g, m))
                power = power @ A

    def test_numeric_recursion_matches_exact(self):
        g = CORPUS["star(4)"]
        numeric = cm_numeric(g, 0.3, 8)
        for m, C in enumerate(cm_sequence(g, 8)):
            np.testing.assert_allclose(numeric[m], C.evaluate(0.3), rtol=1e-10, atol=1e-7)


class DeltaAndRTests(SimpleTestCase):
    def test_delta_vanishes_on_vertex_transitive(self):
        for name in VERTEX_TRANSITIVE:
            g = CORPUS[name]
            for C in cm_sequence(g, 6):
                self.assertEqual(delta_diag(g, C), (ZERO,) * g.vertex_count)

    def test_path_three_center(self):
        g = generate("path", n=3)
        C2 = cm_sequence(g, 2)[2]
        self.assertEqual(C2.diagonal_entries(), (TPoly((0, 1)), TPoly((0, 2)), TPoly((0, 1))))
        self.assertEqual(delta_diag(g, C2)[1], TPoly((0, 2)))

    def test_star_center(self):
        g = CORPUS["star(4)"]
        values = delta_diag(g, cm_sequence(g, 2)[2])
        self.assertEqual(values[0], TPoly((0, 12)))
        self.assertEqual(values[1], TPoly((0, -3)))

    def test_r_vanishes_for_small_m(self):
        g = CORPUS["path(4)"]
        self.assertEqual(r_m(g, 1), (ZERO,) * 4)
        self.assertEqual(r_m(g, 2), (ZERO,) * 4)

    def test_r_vanishes_on_vertex_transitive(self):
        for name in VERTEX_TRANSITIVE:
            g = CORPUS[name]
            seq = cm_sequence(g, 10)
            for m in range(1, 11):
                with self.subTest(graph=name, m=m):
                    self.assertEqual(r_m(g, m, seq=seq), (ZERO,) * g.vertex_count)

    def test_r_is_nonzero_on_path(self):
        self.assertTrue(any(r_m(CORPUS["path(4)"], 5)))

    def test_numeric_r_matches_exact(self):
        g = CORPUS["tree_ball(3,3)"]
        numeric = r_m_numeric(g, -0.4, 8)
        seq = cm_sequence(g, 8)
        for m in range(1, 9):
            exact = np.array([float(v.evaluate(-0.4)) for v in r_m(g, m, seq=seq)])
            np.testing.assert_allclose(numeric[m], exact, rtol=1e-10, atol=1e-7)


class CbcTests(SimpleTestCase):
    def test_triangle_second_term(self):
        self.assertEqual(cm_cbc(CORPUS["triangle"], 2).diagonal_entries(), (TPoly((0, 0, 2)),) * 3)

    def test_diagonal_matches_enumeration(self):
        for name, g in CORPUS.items():
            seq = cbc_sequence(g, 8)
            for x0 in range(g.vertex_count):
                for m in range(1, 9):
                    with self.subTest(graph=name, root=x0, m=m):
                        self.assertEqual(seq[m].entry(x0, x0), enumerate_closed_weighted(g, x0, m, Weight.CBC))

    def test_t_zero_diagonal_counts_geodesics(self):
        for name, g in CORPUS.items():
            seq = cbc_sequence(g, 8)
            for m in range(1, 9):
                with self.subTest(graph=name, m=m):
                    self.assertEqual(seq[m].entry(0, 0).evaluate(0), count_closed_geodesics(g, 0, m))

    def test_numeric_matches_exact(self):
        g = CORPUS["path(4)"]
        numeric = cm_cbc_numeric(g, 0.25, 9)
        for m, C in enumerate(cbc_sequence(g, 9)):
            np.testing.assert_allclose(numeric[m], C.evaluate(0.25), rtol=1e-10, atol=1e-7)


class AlphaTests(SimpleTestCase):
    def test_formula(self):
        self.assertAlmostEqual(alpha(CORPUS["petersen"], 0.0), (3 + math.sqrt(21)) / 2)
        self.assertAlmostEqual(alpha(CORPUS["cycle(6)"], 0.0), 1 + math.sqrt(3))

    def test_norm_bound(self):
        for name, g in CORPUS.items():
            for t in (0.0, 0.5, -0.5):
                a = alpha(g, abs(t))
                numeric = cm_numeric(g, t, 8)
                for m in range(9):
                    norm = np.max(np.abs(np.linalg.eigvalsh(numeric[m])))
                    with self.subTest(graph=name, t=t, m=m):
                        self.assertLessEqual(norm, a**m * (1 + 1e-12))


class IdentityCheckTests(SimpleTestCase):
    def test_path_counting_identities_on_corpus(self):
        for name, g in CORPUS.items():
            for x0 in range(g.vertex_count):
                with self.subTest(graph=name, root=x0):
                    self.assertTrue(check_fNC(g, x0, 10)["pass"])
                    self.assertTrue(check_cbc(g, x0, 10)["pass"])
                    self.assertTrue(check_R_generating(g, x0, 10)["pass"])

    def test_operator_series_inverse_on_corpus(self):
        for name, g in CORPUS.items():
            with self.subTest(graph=name):
                self.assertTrue(check_fC(g, 10)["pass"])
        self.assertTrue(check_fC(generate("star", n=5), 10)["pass"])

    def test_report_shape(self):
        report = check_R_generating(CORPUS["star(4)"], 0, 10)
        self.assertEqual(report["identity"], "R_generating")
        self.assertEqual(report["order"], 10)
        self.assertIsNone(report["first_failure"])

    def test_operator_reading_of_laplacian_fails(self):
        with self.assertRaises(IdentityViolation) as ctx:
            check_cbc(CORPUS["path(4)"], 0, 10, laplacian="operator")
        failure = ctx.exception.report["first_failure"]
        self.assertEqual(failure["display"], "coefficient")
        self.assertEqual(failure["power"], 3)

    def test_order_precondition(self):
        with self.assertRaises(ValueError):
            check_fNC(CORPUS["triangle"], 0, 3)
