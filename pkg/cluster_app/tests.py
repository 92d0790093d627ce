import json
import random
from fractions import Fraction
from io import StringIO

from django.core.management import CommandError, call_command
from django.test import SimpleTestCase

from swapping_app.bracket import bracket_fraction
from swapping_app.fraction_field import SwapFraction
from swapping_app.rank_model import eq_in_Qn

from .exceptions import BadTriangulation, DegenerateFlags, NotADiagonal, UnsupportedSize
from .seeds import Seed, fg_bracket, fg_field, mutate, rational_equal
from .theta import (check_flip_compat, check_flip_epsilon, check_flip_path, check_mutation_poisson,
                    check_theta_poisson, fg_from_points, theta, theta_rational)
from .triangulations import Triangulation, enumerate_triangulations, epsilon, flip, flip_graph, flip_path

SQUARE = Triangulation(4, ((0, 2),))
PENTAGON_FAN = Triangulation(5, ((0, 2), (0, 3)))
HEXAGON_FAN = Triangulation(6, ((0, 2), (0, 3), (0, 4)))
HEXAGON_OTHER_FAN = Triangulation(6, ((1, 3), (1, 4), (1, 5)))


class TriangulationTests(SimpleTestCase):

    def test_catalan_counts(self):
        for k, count in [(4, 2), (5, 5), (6, 14), (7, 42), (8, 132)]:
            triangulations = enumerate_triangulations(k)
            self.assertEqual(len(triangulations), count)
            self.assertEqual(len(set(triangulations)), count)

    def test_size_limits(self):
        with self.assertRaises(UnsupportedSize):
            enumerate_triangulations(3)
        with self.assertRaises(UnsupportedSize):
            enumerate_triangulations(11)

    def test_invalid_diagonals(self):
        with self.assertRaises(BadTriangulation):
            Triangulation(4, ((0, 1),))
        with self.assertRaises(BadTriangulation):
            Triangulation(5, ((0, 2), (1, 3)))
        with self.assertRaises(BadTriangulation):
            Triangulation(5, ((0, 2),))

    def test_triangles(self):
        self.assertEqual(PENTAGON_FAN.triangles, ((0, 1, 2), (0, 2, 3), (0, 3, 4)))

    def test_flip_square(self):
        flipped, new_edge = flip(SQUARE, (0, 2))
        self.assertEqual(new_edge, (1, 3))
        self.assertEqual(flipped, Triangulation(4, ((1, 3),)))
        self.assertEqual(flip(flipped, new_edge), (SQUARE, (0, 2)))

    def test_flip_is_an_involution(self):
        for t in enumerate_triangulations(6):
            for e in t.diagonals:
                flipped, new_edge = flip(t, e)
                self.assertEqual(flip(flipped, new_edge), (t, e))

    def test_flip_needs_a_diagonal(self):
        with self.assertRaises(NotADiagonal):
            flip(SQUARE, (1, 3))

    def test_pentagon_flip_graph_is_a_cycle(self):
        graph = flip_graph(5)
        self.assertEqual(len(graph), 5)
        for neighbours in graph.values():
            self.assertEqual(len(neighbours), 2)
        seen, current, previous = {0}, graph[0][0], 0
        while current != 0:
            seen.add(current)
            current, previous = next(n for n in graph[current] if n != previous), current
        self.assertEqual(len(seen), 5)

    def test_flip_path_between_fans(self):
        path = flip_path(HEXAGON_FAN, HEXAGON_OTHER_FAN)
        self.assertEqual(path[-1][1], HEXAGON_OTHER_FAN)
        self.assertEqual(flip_path(HEXAGON_FAN, HEXAGON_FAN), [])
        current = HEXAGON_FAN
        for edge, reached in path:
            current, _ = flip(current, edge)
            self.assertEqual(current, reached)


class EpsilonTests(SimpleTestCase):

    def test_square(self):
        self.assertEqual(epsilon(SQUARE).as_rows(), [[0]])

    def test_pentagon(self):
        eps = epsilon(PENTAGON_FAN)
        self.assertEqual(eps((0, 2), (0, 3)), 1)
        self.assertEqual(eps((0, 3), (0, 2)), -1)

    def test_hexagon_fan(self):
        eps = epsilon(HEXAGON_FAN)
        self.assertEqual(eps((0, 2), (0, 3)), 1)
        self.assertEqual(eps((0, 3), (0, 4)), 1)
        self.assertEqual(eps((0, 2), (0, 4)), 0)

    def test_antisymmetric(self):
        for t in enumerate_triangulations(7):
            rows = epsilon(t).as_rows()
            for i, row in enumerate(rows):
                for j, value in enumerate(row):
                    self.assertEqual(value, -rows[j][i])
                    self.assertIn(value, (-1, 0, 1))


class SeedTests(SimpleTestCase):

    def test_fg_bracket_on_generators(self):
        seed = Seed.fresh(PENTAGON_FAN)
        x13, x14 = seed.coords
        self.assertTrue(rational_equal(fg_bracket(seed.eps, x13, x14), x13 * x14))
        self.assertTrue(rational_equal(fg_bracket(seed.eps, x13, x13), seed.field.zero))
        self.assertTrue(rational_equal(fg_bracket(seed.eps, x13, seed.field.one * 5), seed.field.zero))

    def test_mutate_square(self):
        seed = Seed.fresh(SQUARE)
        mutated = mutate(seed, (0, 2))
        self.assertEqual(mutated.edges, ((1, 3),))
        self.assertEqual(mutated.eps, ((0,),))
        self.assertTrue(rational_equal(mutated.coords[0], 1 / seed.coords[0]))

    def test_mutate_pentagon(self):
        seed = Seed.fresh(PENTAGON_FAN)
        x13, x14 = seed.coords
        self.assertEqual(seed.eps[1][0], -1)
        mutated = mutate(seed, (0, 2))
        self.assertTrue(rational_equal(mutated.coords[1], x14 * (1 + x13)))
        self.assertTrue(rational_equal(mutated.coords[0], 1 / x13))

    def test_mutate_twice_restores_seed(self):
        for t in enumerate_triangulations(6):
            seed = Seed.fresh(t)
            for e in t.diagonals:
                mutated = mutate(seed, e)
                back = mutate(mutated, mutated.edges[seed.slot(e)])
                self.assertEqual(back.eps, seed.eps)
                self.assertEqual(back.edges, seed.edges)
                for before, after in zip(seed.coords, back.coords):
                    self.assertTrue(rational_equal(before, after))

    def test_field_cache_is_bounded(self):
        self.assertIs(fg_field(3), fg_field(3))
        self.assertEqual(fg_field.cache_info().maxsize, 16)

    def test_unknown_edge(self):
        with self.assertRaises(NotADiagonal):
            mutate(Seed.fresh(SQUARE), (1, 3))


class ThetaTests(SimpleTestCase):

    def test_square_formula(self):
        p = SQUARE.points.pair
        expected = SwapFraction(-(p('v2', 'v3') * p('v4', 'v1')), p('v4', 'v3') * p('v2', 'v1'))
        self.assertEqual(theta(SQUARE, (0, 2)), expected)

    def test_theta_of_inverse(self):
        seed = Seed.fresh(SQUARE)
        value = theta_rational(SQUARE, seed.coords[0]) * theta_rational(SQUARE, 1 / seed.coords[0])
        self.assertTrue(eq_in_Qn(value, 1, 2))

    def test_theta_is_multiplicative(self):
        seed = Seed.fresh(PENTAGON_FAN)
        x13, x14 = seed.coords
        self.assertTrue(eq_in_Qn(
            theta_rational(PENTAGON_FAN, x13 * x14),
            theta(PENTAGON_FAN, (0, 2)) * theta(PENTAGON_FAN, (0, 3)),
            2,
        ))

    def test_pentagon_bracket(self):
        a, b = theta(PENTAGON_FAN, (0, 2)), theta(PENTAGON_FAN, (0, 3))
        self.assertTrue(eq_in_Qn(bracket_fraction(a, b), a * b, 2))

    def test_theta_is_poisson(self):
        for k in (4, 5):
            for t in enumerate_triangulations(k):
                self.assertTrue(check_theta_poisson(t).ok, str(t))
        self.assertTrue(check_theta_poisson(HEXAGON_FAN).ok)

    def test_flip_compatibility(self):
        for k in (4, 5):
            for t in enumerate_triangulations(k):
                for e in t.diagonals:
                    check = check_flip_compat(t, e)
                    self.assertTrue(check.ok, check.failures)
        check = check_flip_compat(HEXAGON_FAN, (0, 3))
        self.assertTrue(check.ok, check.failures)

    def test_mutation_is_poisson(self):
        for k in (4, 5, 6):
            for t in enumerate_triangulations(k):
                for e in t.diagonals:
                    self.assertTrue(check_mutation_poisson(t, e).ok)
                    self.assertTrue(check_flip_epsilon(t, e).ok)

    def test_flip_path_keeps_brackets(self):
        check = check_flip_path(HEXAGON_FAN, HEXAGON_OTHER_FAN)
        self.assertTrue(check.ok, check.failures)
        self.assertGreater(check.checked, 0)


class FockGoncharovTests(SimpleTestCase):

    def test_square(self):
        self.assertEqual(fg_from_points([0, 1, 2, 3], SQUARE), {(0, 2): 3})

    def test_positive_on_ordered_points(self):
        rng = random.Random(0)
        for _ in range(100):
            values = sorted({Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(8)})[:4]
            if len(values) < 4:
                continue
            self.assertGreater(fg_from_points(values, SQUARE)[(0, 2)], 0)

    def test_degenerate(self):
        with self.assertRaises(DegenerateFlags):
            fg_from_points([0, 1, 1, 3], SQUARE)


class ClusterCommandTests(SimpleTestCase):

    def test_list(self):
        out = StringIO()
        call_command('cluster', 'list', k=5, stdout=out)
        self.assertIn('5 triangulations', out.getvalue())

    def test_epsilon_json(self):
        out = StringIO()
        call_command('cluster', 'epsilon', k=5, edges='1-3,1-4', json=True, stdout=out)
        data = json.loads(out.getvalue())
        self.assertEqual(data['edges'], ['1-3', '1-4'])
        self.assertEqual(data['rows'], [[0, 1], [-1, 0]])

    def test_flip(self):
        out = StringIO()
        call_command('cluster', 'flip', k=4, edges='1-3', at='1-3', stdout=out)
        self.assertIn('new diagonal 2-4', out.getvalue())

    def test_check(self):
        out = StringIO()
        call_command('cluster', 'check', k=5, stdout=out)
        self.assertIn('theta_poisson: pass', out.getvalue())
        self.assertIn('flip_compat: pass', out.getvalue())

    def test_path(self):
        out = StringIO()
        call_command('cluster', 'path', k=6, edges='1-3,1-4,1-5', to='2-4,2-5,2-6', stdout=out)
        self.assertIn('flip_path: pass', out.getvalue())

    def test_fg(self):
        out = StringIO()
        call_command('cluster', 'fg', k=4, edges='1-3', values='0,1,2,3', stdout=out)
        self.assertEqual(out.getvalue().strip(), 'X_1-3 = 3')

    def test_bad_input_exits_with_code_two(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('cluster', 'epsilon', k=5, edges='1-3,2-4', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)
        with self.assertRaises(CommandError) as ctx:
            call_command('cluster', 'list', k=12, stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)
