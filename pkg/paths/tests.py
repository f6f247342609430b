import numpy as np
from django.test import SimpleTestCase

from graphs.generators import corpus, generate
from graphs.graph import operators
from paths.exceptions import InvalidFilterEdge, NotClosed, PathLengthExceeded
from paths.oracle import (
    Path,
    PathFilter,
    Weight,
    bump_count,
    cm_bruteforce,
    count_closed_geodesics,
    count_non_backtracking_paths,
    cyclic_bump_count,
    enumerate_closed_weighted,
    primitive_rooted_closed_paths,
)
from series.operators import OperatorPoly
from series.tpoly import TPoly

TRIANGLE = generate("cycle", n=3)
K4 = generate("complete", n=4)


class BumpCountTests(SimpleTestCase):
    def test_single_bump(self):
        p = Path.from_vertices(TRIANGLE, [0, 1, 0])
        self.assertEqual(bump_count(p), 1)
        self.assertEqual(cyclic_bump_count(p), 2)

    def test_triangle_loop(self):
        p = Path.from_vertices(TRIANGLE, [0, 1, 2, 0])
        self.assertEqual(bump_count(p), 0)
        self.assertEqual(cyclic_bump_count(p), 0)

    def test_alternating(self):
        self.assertEqual(bump_count(Path.from_vertices(TRIANGLE, [0, 1, 0, 1, 0])), 3)

    def test_backtrack_in_the_middle(self):
        # (e, f, f̄, ē): bump em (f, f̄) e na posição cíclica (ē, e)
        p = Path.from_vertices(generate("path", n=3), [0, 1, 2, 1, 0])
        self.assertEqual(bump_count(p), 1)
        self.assertEqual(cyclic_bump_count(p), 2)

    def test_length_zero(self):
        p = Path(TRIANGLE, 1)
        self.assertEqual(bump_count(p), 0)
        self.assertEqual(cyclic_bump_count(p), 0)

    def test_not_closed(self):
        with self.assertRaises(NotClosed):
            cyclic_bump_count(Path.from_vertices(TRIANGLE, [0, 1, 2]))


class EnumerationTests(SimpleTestCase):
    def test_triangle_length_two(self):
        self.assertEqual(enumerate_closed_weighted(TRIANGLE, 0, 2, Weight.CBC), TPoly((0, 0, 2)))
        self.assertEqual(enumerate_closed_weighted(TRIANGLE, 0, 2, Weight.BC), TPoly((0, 2)))

    def test_k4_tail_free_triangles(self):
        self.assertEqual(enumerate_closed_weighted(K4, 0, 3, Weight.CBC, PathFilter.no_tail()), TPoly((6,)))

    def test_length_zero_contributes_one(self):
        self.assertEqual(enumerate_closed_weighted(K4, 2, 0), TPoly((1,)))

    def test_edge_filters_partition(self):
        g = generate("path", n=4)
        total = enumerate_closed_weighted(g, 1, 6, Weight.CBC)
        by_first = sum(
            (enumerate_closed_weighted(g, 1, 6, Weight.CBC, PathFilter.first_edge(e)) for e in g.out_edges[1]),
            TPoly(),
        )
        by_last = sum(
            (enumerate_closed_weighted(g, 1, 6, Weight.CBC, PathFilter.last_edge(g.twin(e))) for e in g.out_edges[1]),
            TPoly(),
        )
        self.assertEqual(by_first, total)
        self.assertEqual(by_last, total)

    def test_tail_split(self):
        # todo caminho fechado tem ou não tem cauda; com cauda: primeira e, última ē
        g = generate("star", n=3)
        total = enumerate_closed_weighted(g, 0, 4, Weight.CBC)
        no_tail = enumerate_closed_weighted(g, 0, 4, Weight.CBC, PathFilter.no_tail())
        tails = sum(
            (enumerate_closed_weighted(g, 0, 4, Weight.CBC, PathFilter.first_and_last(e)) for e in g.out_edges[0]),
            TPoly(),
        )
        self.assertEqual(no_tail + tails, total)

    def test_filter_edge_must_leave_root(self):
        with self.assertRaises(InvalidFilterEdge):
            enumerate_closed_weighted(TRIANGLE, 0, 2, Weight.CBC, PathFilter.first_edge(TRIANGLE.out_edges[1][0]))

    def test_length_cap(self):
        with self.assertRaises(PathLengthExceeded):
            enumerate_closed_weighted(TRIANGLE, 0, 13)
        self.assertEqual(enumerate_closed_weighted(TRIANGLE, 0, 13, cap=13).evaluate(1), 2730)

    def test_cyclic_vs_linear_bumps_on_corpus(self):
        for name, g in corpus().items():
            with self.subTest(graph=name):
                for m in range(2, 9):
                    bc = enumerate_closed_weighted(g, 0, m, Weight.BC)
                    cbc = enumerate_closed_weighted(g, 0, m, Weight.CBC)
                    no_tail_bc = enumerate_closed_weighted(g, 0, m, Weight.BC, PathFilter.no_tail())
                    no_tail_cbc = enumerate_closed_weighted(g, 0, m, Weight.CBC, PathFilter.no_tail())
                    self.assertEqual(no_tail_bc, no_tail_cbc)
                    # caminhos com cauda ganham exatamente um fator t
                    self.assertEqual(cbc - no_tail_cbc, (bc - no_tail_bc) * TPoly((0, 1)))


class BruteforceTests(SimpleTestCase):
    def test_length_one_is_adjacency(self):
        for name, g in corpus().items():
            with self.subTest(graph=name):
                self.assertEqual(cm_bruteforce(g, 1), OperatorPoly.from_array(operators(g).adjacency))

    def test_length_zero_is_identity(self):
        self.assertEqual(cm_bruteforce(K4, 0), OperatorPoly.identity(4))

    def test_triangle_diagonal(self):
        self.assertEqual(cm_bruteforce(TRIANGLE, 2).diagonal_entries(), (TPoly((0, 2)),) * 3)

    def test_weight_collapse_at_t_one(self):
        for name, g in corpus().items():
            A = operators(g).adjacency
            power = np.eye(g.vertex_count, dtype=np.int64)
            for m in range(1, 7):
                power = power @ A
                with self.subTest(graph=name, m=m):
                    np.testing.assert_array_equal(cm_bruteforce(g, m).evaluate(1), power)

    def test_symmetry(self):
        for name, g in corpus().items():
            for m in range(1, 9):
                with self.subTest(graph=name, m=m):
                    self.assertTrue(cm_bruteforce(g, m).is_symmetric())

    def test_t_zero_counts_non_backtracking_paths(self):
        for name, g in corpus().items():
            for m in range(1, 9):
                with self.subTest(graph=name, m=m):
                    np.testing.assert_array_equal(cm_bruteforce(g, m).evaluate(0), count_non_backtracking_paths(g, m))


class PrimitivePathTests(SimpleTestCase):
    def test_triangle(self):
        found = primitive_rooted_closed_paths(TRIANGLE, 0, 6)
        loops = [p for p, length, cbc in found if length == 3 and cbc == 0]
        bumps = [p for p, length, _ in found if length == 2]
        self.assertEqual(len(loops), 2)
        self.assertEqual(len(bumps), 2)
        repeated_loops = [p for p, length, _ in found if length == 6 and p.edges[:3] == p.edges[3:]]
        self.assertEqual(repeated_loops, [])

    def test_cycle_four(self):
        g = generate("cycle", n=4)
        found = primitive_rooted_closed_paths(g, 0, 4)
        self.assertEqual(sum(1 for _, length, _ in found if length == 2), 2)
        self.assertEqual(sum(1 for _, length, cbc in found if length == 4 and cbc == 0), 2)
        # 8 passeios fechados de comprimento 4, menos as duas repetições (e, ē, e, ē)
        self.assertEqual(sum(1 for _, length, _ in found if length == 4), 6)

    def test_repetitions_are_excluded(self):
        g = generate("path", n=3)
        found = {p.edges for p, _, _ in primitive_rooted_closed_paths(g, 1, 8)}
        for edges in list(found):
            self.assertNotIn(edges * 2, found)

    def test_cbc_of_powers(self):
        for name in ("triangle", "star(4)", "K4"):
            g = corpus()[name]
            for p, length, cbc in primitive_rooted_closed_paths(g, 0, 4):
                for k in (2, 3):
                    with self.subTest(graph=name, edges=p.edges, k=k):
                        self.assertEqual(cyclic_bump_count(Path(g, 0, p.edges * k)), k * cbc)
                        self.assertEqual(cyclic_bump_count(p), cbc)


class GeodesicTests(SimpleTestCase):
    def test_triangle_geodesics(self):
        self.assertEqual(count_closed_geodesics(TRIANGLE, 0, 3), 2)
        self.assertEqual(count_closed_geodesics(TRIANGLE, 0, 2), 0)

    def test_geodesics_are_constant_term_of_no_tail_tally(self):
        for name, g in corpus().items():
            for m in range(1, 9):
                with self.subTest(graph=name, m=m):
                    tally = enumerate_closed_weighted(g, 0, m, Weight.CBC, PathFilter.no_tail())
                    self.assertEqual(tally.coefficient(0), count_closed_geodesics(g, 0, m))
