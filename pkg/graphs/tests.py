import random
import tempfile
from fractions import Fraction
from pathlib import Path

import networkx as nx
import numpy as np
import sympy
from django.test import SimpleTestCase

from graphs.exceptions import Disconnected, DuplicateEdge, EmptyGraph, InvalidParameter, InvalidVertex, LoopEdge
from graphs.generators import GraphFamily, corpus, generate
from graphs.graph import ball, build_graph, girth, operators
from graphs.io import dump_graph, load_graph, parse_edge_list


class BuildGraphTests(SimpleTestCase):
    def test_triangle(self):
        g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
        self.assertEqual(g.degrees, (2, 2, 2))
        self.assertEqual(len(g.directed_edges), 6)

    def test_complete_four(self):
        pairs = [(a, b) for a in range(4) for b in range(a + 1, 4)]
        self.assertEqual(build_graph(4, pairs).degrees, (3, 3, 3, 3))

    def test_axiom_violations(self):
        with self.assertRaises(DuplicateEdge):
            build_graph(2, [(0, 1), (0, 1)])
        with self.assertRaises(DuplicateEdge):
            build_graph(2, [(0, 1), (1, 0)])
        with self.assertRaises(LoopEdge):
            build_graph(2, [(0, 0), (0, 1)])
        with self.assertRaises(Disconnected):
            build_graph(4, [(0, 1), (2, 3)])
        with self.assertRaises(EmptyGraph):
            build_graph(0, [])
        with self.assertRaises(EmptyGraph):
            build_graph(1, [])
        with self.assertRaises(InvalidVertex):
            build_graph(2, [(0, 5)])

    def test_twin_axioms_on_corpus(self):
        for name, g in corpus().items():
            with self.subTest(graph=name):
                for edge in g.directed_edges:
                    twin = g.directed_edges[edge.twin]
                    self.assertNotEqual(edge.twin, edge.id)
                    self.assertEqual(twin.twin, edge.id)
                    self.assertEqual(edge.origin, twin.terminus)
                    self.assertNotEqual(edge.origin, edge.terminus)
                self.assertEqual(sum(g.degrees), len(g.directed_edges))
                for x, edges in enumerate(g.out_edges):
                    self.assertTrue(all(g.origin(e) == x for e in edges))


class GeneratorTests(SimpleTestCase):
    def test_cycle_four(self):
        g = generate("cycle", n=4)
        self.assertEqual(g.vertex_count, 4)
        self.assertEqual(len(g.directed_edges), 8)
        self.assertTrue(g.is_regular())

    def test_petersen(self):
        g = generate(GraphFamily.PETERSEN)
        self.assertEqual(g.vertex_count, 10)
        self.assertEqual(set(g.degrees), {3})
        self.assertEqual(girth(g), 5)

    def test_girth_oracle(self):
        self.assertEqual(girth(generate("cycle", n=3)), 3)
        self.assertEqual(girth(generate("hypercube", d=3)), 4)
        self.assertEqual(girth(generate("path", n=4)), float("inf"))

    def test_tree_ball_counts(self):
        g = generate("tree_ball", q_plus_1=3, radius=2)
        self.assertEqual(g.vertex_count, 10)
        self.assertEqual(g.degrees[0], 3)
        self.assertEqual(generate("tree_ball", q_plus_1=3, radius=3).vertex_count, 22)

    def test_star_has_center_and_leaves(self):
        g = generate("star", n=4)
        self.assertEqual(g.vertex_count, 5)
        self.assertEqual(g.degrees[0], 4)

    def test_invalid_parameters(self):
        with self.assertRaises(InvalidParameter):
            generate("cycle", n=2)
        with self.assertRaises(InvalidParameter):
            generate("path", n=1)
        with self.assertRaises(InvalidParameter):
            generate("dodecahedron")
        with self.assertRaises(InvalidParameter):
            generate("complete")

    def test_family_aliases(self):
        self.assertIs(GraphFamily.parse(" Tree-Ball "), GraphFamily.TREE_BALL)
        self.assertIs(GraphFamily.parse("K"), GraphFamily.COMPLETE)


class OperatorTests(SimpleTestCase):
    def test_triangle(self):
        A, D, L = operators(generate("cycle", n=3))
        np.testing.assert_array_equal(A, np.ones((3, 3), dtype=int) - np.eye(3, dtype=int))
        np.testing.assert_array_equal(L, 2 * np.eye(3, dtype=int) - A)

    def test_path_degrees(self):
        _, D, _ = operators(generate("path", n=3))
        self.assertEqual(list(np.diag(D)), [1, 2, 1])

    def test_complete_four_spectrum_by_charpoly(self):
        _, _, L = operators(generate("complete", n=4))
        lam = sympy.symbols("lam")
        poly = sympy.Matrix(L.tolist()).charpoly(lam).as_expr()
        self.assertEqual(sympy.factor(poly), lam * (lam - 4) ** 3)

    def test_operator_invariants_on_corpus(self):
        rng = random.Random(31)
        for name, g in corpus().items():
            A, D, L = operators(g)
            with self.subTest(graph=name):
                np.testing.assert_array_equal(A, A.T)
                np.testing.assert_array_equal(L.sum(axis=1), np.zeros(g.vertex_count, dtype=int))
                np.testing.assert_array_equal(L, D - A)
                matrix = [[Fraction(int(v)) for v in row] for row in L.tolist()]
                for _ in range(100):
                    f = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(g.vertex_count)]
                    Lf = [sum(row[j] * f[j] for j in range(g.vertex_count)) for row in matrix]
                    self.assertGreaterEqual(sum(a * b for a, b in zip(Lf, f)), 0)


class BallTests(SimpleTestCase):
    def test_radius_zero(self):
        sub, mapping = ball(generate("petersen"), 3, 0)
        self.assertEqual(sub.vertex_count, 1)
        self.assertEqual(mapping, (3,))

    def test_cycle_ball_is_path(self):
        sub, mapping = ball(generate("cycle", n=10), 0, 2)
        self.assertEqual(sub.vertex_count, 5)
        self.assertTrue(nx.is_isomorphic(sub.to_networkx(), nx.path_graph(5)))
        self.assertEqual(set(mapping), {8, 9, 0, 1, 2})

    def test_tree_ball_localization(self):
        sub, _ = ball(generate("tree_ball", q_plus_1=3, radius=4), 0, 2)
        reference = generate("tree_ball", q_plus_1=3, radius=2)
        self.assertTrue(nx.is_isomorphic(sub.to_networkx(), reference.to_networkx()))


class GraphIOTests(SimpleTestCase):
    def test_edge_list_with_comments(self):
        g = parse_edge_list("# triângulo\n0 1\n1 2  # fecha\n2 0\n")
        self.assertEqual(g.degrees, (2, 2, 2))

    def test_json_file(self):
        g = generate("petersen")
        with tempfile.TemporaryDirectory() as folder:
            path = Path(folder) / "petersen.json"
            dump_graph(g, path)
            loaded = load_graph(path)
        self.assertEqual(loaded, g)
        self.assertEqual(loaded.name, "petersen")
