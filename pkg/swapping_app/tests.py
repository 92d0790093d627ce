import random
from fractions import Fraction
from io import StringIO
from itertools import combinations, permutations, product

from django.core.management import CommandError, call_command
from django.test import SimpleTestCase, override_settings
from rest_framework.exceptions import APIException

from .bracket import (_generator_bracket, bracket_fraction, bracket_generators, bracket_poly, linking_by_coordinates,
                      linking_number, log_bracket_expansion)
from .conf import swap_settings
from .cross_ratio import check_cross_ratio_conditions, check_rank_legal_denominators, cross_fraction
from .determinants import DeterminantSpec, delta_L, delta_R, delta_terms, determinant
from .evaluation import eval_expr
from .exceptions import (BadModel, BadSpec, BadTrialCount, DenominatorVanishesInZn, DivisionByZero, DuplicatePoint,
                         IllegalCrossFraction, InsufficientPoints, ParseError, PointSetMismatch,
                         SwapAlgebraError, UnknownPoint, UnsupportedRank)
from .expressions import BinOp, Bracket, Num, Pair, parse_expr, print_expr
from .fraction_field import SwapFraction
from .points import PairVar, make_point_set, point_set_of_size
from .polynomials import SwapPoly
from .rank_model import (RankModel, eq_in_Qn, expand_to_model, is_zero_Zn, normal_form_model,
                         random_zero_test)
from .sampling import random_element, random_spec


def random_recipe(names, rng, terms=3, max_degree=2):
    """(coefficient, [(left, right), ...]) pairs, independent of any point set."""
    recipe = []
    for _ in range(terms):
        pairs = [tuple(rng.sample(names, 2)) for _ in range(rng.randint(1, max_degree))]
        recipe.append((Fraction(rng.randint(-4, 4), rng.randint(1, 3)), pairs))
    return recipe


def from_recipe(points, recipe):
    total = SwapPoly.zero(points)
    for coeff, pairs in recipe:
        term = SwapPoly.constant(points, coeff)
        for left, right in pairs:
            term = term * points.pair(left, right)
        total = total + term
    return total


class PointSetTests(SimpleTestCase):

    def test_duplicate_names_are_rejected(self):
        with self.assertRaises(DuplicatePoint):
            make_point_set(['x', 'y', 'x'])

    def test_one_generator_per_ordered_pair(self):
        points = point_set_of_size(5)
        self.assertEqual(len(points.pair_vars), 20)
        self.assertEqual(points.names, ('x0', 'x1', 'x2', 'x3', 'x4'))

    def test_same_point_pair_is_zero(self):
        points = make_point_set('xy')
        self.assertTrue(points.pair('x', 'x').is_zero)
        self.assertNotEqual(points.pair('x', 'y'), points.pair('y', 'x'))

    def test_unknown_point(self):
        with self.assertRaises(UnknownPoint):
            make_point_set('xy').pair('x', 'q')

    def test_rotation_keeps_cyclic_order(self):
        points = make_point_set('abcd')
        self.assertEqual(points.rotate(1).names, ('b', 'c', 'd', 'a'))
        self.assertEqual(points.rotate(4), points)

    def test_rotation_keeps_bracket_and_zero_verdicts(self):
        points = make_point_set(['a', 'b', 'c', 'd', 'e'])
        rng = random.Random(23)
        for _ in range(10):
            f_recipe = random_recipe(points.names, rng)
            g_recipe = random_recipe(points.names, rng)
            xs = tuple(rng.sample(points.names, 3))
            ys = tuple(rng.sample(points.names, 3))
            a, b = rng.sample(points.names, 2)
            verdicts = set()
            brackets = set()
            for k in range(len(points.names)):
                rotated = points.rotate(k)
                f = from_recipe(rotated, f_recipe)
                g = from_recipe(rotated, g_recipe)
                with_det = bracket_poly(rotated.pair(a, b), determinant(DeterminantSpec(rotated, xs, ys)))
                brackets.add(tuple(sorted(bracket_poly(f, g).term_map().items())))
                verdicts.add((is_zero_Zn(f, 2), is_zero_Zn(f * g, 3), is_zero_Zn(with_det, 2, fast_path=False)))
            self.assertEqual(len(brackets), 1)
            self.assertEqual(len(verdicts), 1)
            self.assertTrue(next(iter(verdicts))[2])


class SwapPolyTests(SimpleTestCase):

    def setUp(self):
        self.points = make_point_set(['x', 'y', 'z', 't'])
        self.xy = self.points.pair('x', 'y')
        self.zt = self.points.pair('z', 't')

    def test_arithmetic_is_exact(self):
        f = self.xy * Fraction(1, 2) + self.xy * Fraction(1, 2)
        self.assertEqual(f, self.xy)
        self.assertTrue((f - self.xy).is_zero)

    def test_ring_axioms_on_random_triples(self):
        points = point_set_of_size(5)
        rng = random.Random(5)
        zero = SwapPoly.zero(points)
        for _ in range(1000):
            f, g, h = (random_element(points, rng, max_degree=2) for _ in range(3))
            self.assertEqual(f + g, g + f)
            self.assertEqual(f * g, g * f)
            self.assertEqual((f + g) + h, f + (g + h))
            self.assertEqual((f * g) * h, f * (g * h))
            self.assertEqual(f * (g + h), f * g + f * h)
            self.assertEqual(f - f, zero)

    def test_canonical_text(self):
        self.assertEqual(str(self.xy), 'p(x,y)')
        self.assertEqual(str(SwapPoly.zero(self.points)), '0')
        self.assertEqual(str(-self.xy * self.zt * Fraction(1, 2)), '-1/2*p(x,y)*p(z,t)')
        self.assertEqual(str(self.xy ** 2), 'p(x,y)*p(x,y)')

    def test_point_set_mismatch(self):
        other = make_point_set('xy').pair('x', 'y')
        with self.assertRaises(PointSetMismatch):
            self.xy + other

    def test_term_map_compares_across_orderings(self):
        rotated = self.points.rotate(2)
        self.assertEqual(self.xy.term_map(), rotated.pair('x', 'y').term_map())


class SwapFractionTests(SimpleTestCase):

    def setUp(self):
        self.points = make_point_set(['x', 'y', 'z', 't'])
        self.xy = self.points.pair('x', 'y')
        self.zt = self.points.pair('z', 't')

    def test_equality_by_cross_multiplication(self):
        self.assertEqual(SwapFraction(self.xy, self.zt), SwapFraction(self.xy * 2, self.zt * 2))
        self.assertNotEqual(SwapFraction(self.xy, self.zt), SwapFraction(self.zt, self.xy))

    def test_zero_denominator(self):
        with self.assertRaises(DivisionByZero):
            SwapFraction(self.xy, SwapPoly.zero(self.points))
        with self.assertRaises(DivisionByZero):
            SwapFraction.of(SwapPoly.zero(self.points)).invert()

    def test_field_operations(self):
        F = SwapFraction(self.xy, self.zt)
        self.assertEqual(F * F.invert(), 1)
        self.assertEqual(F - F, 0)
        self.assertEqual(F ** -2, SwapFraction(self.zt * self.zt, self.xy * self.xy))

    def test_equality_with_rationals(self):
        half = SwapFraction(self.xy * Fraction(1, 2), self.xy)
        self.assertEqual(half, Fraction(1, 2))
        self.assertNotEqual(half, Fraction(1, 3))
        self.assertEqual(SwapFraction(self.xy * 3, self.xy), 3)


class LinkingNumberTests(SimpleTestCase):

    def test_crossing_chords(self):
        self.assertEqual(linking_number(make_point_set('rsxy'), 'r', 'x', 's', 'y'), 1)

    def test_disjoint_chords(self):
        self.assertEqual(linking_number(make_point_set('rxsy'), 'r', 'x', 's', 'y'), 0)

    def test_shared_endpoints(self):
        points = make_point_set('rxy')
        self.assertEqual(linking_number(points, 'r', 'x', 'r', 'x'), 0)
        self.assertEqual(linking_number(points, 'r', 'x', 'r', 'y'), Fraction(1, 2))

    def test_values_and_cut_independence(self):
        points = point_set_of_size(5)
        for quadruple in product(points.names, repeat=4):
            value = linking_number(points, *quadruple)
            self.assertIn(value, (-1, Fraction(-1, 2), 0, Fraction(1, 2), 1))
            for k in range(1, 5):
                self.assertEqual(linking_number(points.rotate(k), *quadruple), value, quadruple)

    def test_cocycle_in_first_argument(self):
        points = point_set_of_size(5)
        for a, b, c, x, y in product(points.names, repeat=5):
            self.assertEqual(
                linking_number(points, a, b, x, y) - linking_number(points, a, c, x, y),
                linking_number(points, c, b, x, y),
                (a, b, c, x, y),
            )

    def test_additive_in_second_argument_through_any_auxiliary(self):
        coordinates = range(0, 10, 2)
        for a, b, x, y in product(coordinates, repeat=4):
            for u in range(-1, 11):
                self.assertEqual(
                    linking_by_coordinates(a, b, x, y),
                    linking_by_coordinates(a, b, x, u) + linking_by_coordinates(a, b, u, y),
                )


class BracketTests(SimpleTestCase):

    def test_generator_bracket_of_crossing_chords(self):
        points = make_point_set('rsxy')
        self.assertEqual(
            bracket_generators(points, PairVar('r', 'x'), PairVar('s', 'y')),
            points.pair('r', 'y') * points.pair('s', 'x'),
        )
        self.assertTrue(bracket_generators(points, PairVar('r', 'x'), PairVar('r', 'x')).is_zero)

    def test_generator_bracket_of_disjoint_chords(self):
        points = make_point_set('rxsy')
        self.assertTrue(bracket_generators(points, PairVar('r', 'x'), PairVar('s', 'y')).is_zero)

    def test_generator_cache_is_bounded(self):
        points = point_set_of_size(4)
        bracket_poly(points.pair('x0', 'x2'), points.pair('x1', 'x3'))
        info = _generator_bracket.cache_info()
        self.assertEqual(info.maxsize, 65536)
        self.assertLessEqual(info.currsize, info.maxsize)

    def test_bracket_with_constant(self):
        points = point_set_of_size(4)
        f = points.pair('x0', 'x2') * points.pair('x1', 'x3')
        self.assertTrue(bracket_poly(f, SwapPoly.constant(points, 3)).is_zero)

    def test_antisymmetry_on_random_elements(self):
        points = point_set_of_size(6)
        rng = random.Random(7)
        for _ in range(20):
            f, g = random_element(points, rng), random_element(points, rng)
            self.assertTrue((bracket_poly(f, g) + bracket_poly(g, f)).is_zero)

    def test_jacobi_on_all_generator_triples(self):
        points = point_set_of_size(4)
        gens = [points.pair(v.left, v.right) for v in points.pair_vars]
        for f, g, h in combinations(gens, 3):
            total = (bracket_poly(f, bracket_poly(g, h))
                     + bracket_poly(g, bracket_poly(h, f))
                     + bracket_poly(h, bracket_poly(f, g)))
            self.assertTrue(total.is_zero)

    def test_inverse_rule(self):
        points = point_set_of_size(4)
        xy = points.pair('x0', 'x2')
        zt = points.pair('x1', 'x3')
        inverse = SwapFraction.of(xy).invert()
        self.assertEqual(bracket_fraction(zt, inverse), SwapFraction(-bracket_poly(zt, xy), xy * xy))
        F = SwapFraction(xy, zt)
        self.assertTrue(bracket_fraction(F, F).num.is_zero)

    def test_log_bracket_expansion(self):
        points = point_set_of_size(6)
        rng = random.Random(3)
        for _ in range(10):
            cs = [points.pair(v.left, v.right) for v in rng.sample(points.pair_vars, 2)]
            ds = [points.pair(v.left, v.right) for v in rng.sample(points.pair_vars, 2)]
            c, d = cs[0] * cs[1], ds[0] * ds[1]
            self.assertEqual(bracket_fraction(c, d) / (c * d), log_bracket_expansion(cs, ds))

    def test_bracket_of_cross_fractions(self):
        points = point_set_of_size(6)
        rng = random.Random(11)
        for _ in range(10):
            F = cross_fraction(points, *rng.sample(points.names, 4)).value
            G = cross_fraction(points, *rng.sample(points.names, 4)).value
            expected = (log_bracket_expansion([F.num], [G.num])
                        - log_bracket_expansion([F.num], [G.den])
                        - log_bracket_expansion([F.den], [G.num])
                        + log_bracket_expansion([F.den], [G.den]))
            self.assertEqual(bracket_fraction(F, G) / (F * G), expected)


class DeterminantTests(SimpleTestCase):

    def setUp(self):
        self.points = make_point_set(['x', 't', 'z', 'y'])

    def test_two_by_two(self):
        p = self.points.pair
        spec = DeterminantSpec(self.points, ('x', 't'), ('z', 'y'))
        self.assertEqual(determinant(spec), p('x', 'z') * p('t', 'y') - p('x', 'y') * p('t', 'z'))

    def test_repeated_column_vanishes(self):
        spec = DeterminantSpec(self.points, ('x', 'z', 'y'), ('z', 'x', 'z'))
        self.assertTrue(determinant(spec).is_zero)

    def test_three_by_three_matches_cofactor_expansion(self):
        xs, ys = ('x', 'z', 'y'), ('z', 'x', 't')
        m = [[self.points.pair(x, y) for y in ys] for x in xs]
        cofactor = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                    - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        self.assertEqual(determinant(DeterminantSpec(self.points, xs, ys)), cofactor)

    def test_length_mismatch(self):
        with self.assertRaises(BadSpec):
            DeterminantSpec(self.points, ('x', 'z'), ('z',))

    def test_single_term_with_repeated_column(self):
        spec = DeterminantSpec(self.points, ('x', 'z', 'y'), ('z', 'x', 't'))
        terms = delta_terms('x', 'z', spec)
        self.assertEqual(len(terms), 1)
        weight, var, det_spec = terms[0]
        self.assertEqual(weight, -1)
        self.assertEqual(var, PairVar('x', 't'))
        self.assertEqual(det_spec, DeterminantSpec(self.points, ('x', 'z', 'y'), ('z', 'x', 'z')))
        self.assertTrue(bracket_poly(self.points.pair('x', 'z'), determinant(spec)).is_zero)

    def test_bracket_with_three_by_three_vanishes_in_rank_two_for_every_arrangement(self):
        for order in permutations('xyzt'):
            points = make_point_set(order)
            spec = DeterminantSpec(points, ('x', 'z', 'y'), ('z', 'x', 't'))
            self.assertTrue(is_zero_Zn(bracket_poly(points.pair('x', 'z'), determinant(spec)), 2), order)

    def test_all_points_left_of_chord(self):
        points = point_set_of_size(8)
        spec = DeterminantSpec(points, ('x3', 'x4', 'x5'), ('x6', 'x5', 'x7'))
        self.assertTrue(delta_R('x0', 'x2', spec).is_zero)

    def test_chord_starting_at_a_row_point(self):
        points = point_set_of_size(8)
        spec = DeterminantSpec(points, ('x0', 'x4', 'x5'), ('x6', 'x5', 'x7'))
        self.assertEqual(
            delta_R('x0', 'x2', spec),
            points.pair('x0', 'x2') * determinant(spec) * Fraction(1, 2),
        )

    def test_delta_sums_equal_the_bracket_exhaustively(self):
        points = point_set_of_size(6)
        names = points.names
        for xs in combinations(names, 3):
            for ys in combinations(names, 3):
                spec = DeterminantSpec(points, xs, ys)
                det = determinant(spec)
                for a, b in [('x0', 'x3'), ('x4', 'x1'), ('x2', 'x5')]:
                    right = delta_R(a, b, spec)
                    self.assertEqual(right, bracket_poly(points.pair(a, b), det), (a, b, xs, ys))
                    self.assertEqual(right, delta_L(a, b, spec))

    def test_delta_sums_on_random_configurations(self):
        points = point_set_of_size(8)
        rng = random.Random(5)
        for size in (3, 4):
            for _ in range(5):
                spec = random_spec(points, rng, size)
                a, b = rng.sample(points.names, 2)
                bracket = bracket_poly(points.pair(a, b), determinant(spec))
                self.assertEqual(delta_R(a, b, spec), bracket)
                self.assertEqual(delta_L(a, b, spec), bracket)


class RankModelTests(SimpleTestCase):

    def setUp(self):
        self.points = make_point_set(['x', 'y', 'z', 't'])
        self.p = self.points.pair

    def test_expand_pair(self):
        model = RankModel.for_points(self.points, 2)
        expected = model.a(0, 0) * model.b(1, 0) + model.a(0, 1) * model.b(1, 1)
        self.assertEqual(expand_to_model(self.p('x', 'y'), model), expected)
        self.assertFalse(expand_to_model(self.p('x', 'x'), model))

    def test_model_too_small(self):
        with self.assertRaises(BadModel):
            expand_to_model(self.p('x', 't'), RankModel(2, 2))

    def test_basis_elements_reduce_to_zero(self):
        model = RankModel(3, 2)
        g = model.basis[0]
        self.assertFalse(normal_form_model(g, model))
        self.assertFalse(normal_form_model(g * model.a(1, 0) * model.b(0, 2), model))
        q = model.a(0, 0) * model.b(1, 0)
        self.assertEqual(normal_form_model(q, model), q)

    def test_normal_form_does_not_depend_on_division_order(self):
        rng = random.Random(2)
        for n, size in ((2, 5), (3, 6)):
            points = point_set_of_size(size)
            model = RankModel.for_points(points, n)
            for _ in range(200):
                q = expand_to_model(random_element(points, rng, max_degree=2), model)
                order = list(range(model.p))
                rng.shuffle(order)
                self.assertEqual(normal_form_model(q, model), normal_form_model(q, model, order=order))

    def test_rank_two_relation(self):
        points = make_point_set('yzt')
        p = points.pair
        f = p('y', 'z') * p('z', 't') * p('t', 'y') + p('t', 'z') * p('z', 'y') * p('y', 't')
        self.assertTrue(is_zero_Zn(f, 2))
        self.assertTrue(is_zero_Zn(f, 2, fast_path=False))

    def test_generator_is_nonzero(self):
        self.assertFalse(is_zero_Zn(self.p('x', 'y'), 2))
        self.assertFalse(is_zero_Zn(self.p('x', 'y'), 2, fast_path=False))

    def test_determinants_vanish_in_lower_rank(self):
        points = point_set_of_size(8)
        three = DeterminantSpec(points, ('x0', 'x1', 'x2'), ('x3', 'x4', 'x5'))
        four = DeterminantSpec(points, ('x0', 'x1', 'x2', 'x3'), ('x4', 'x5', 'x6', 'x7'))
        self.assertTrue(is_zero_Zn(determinant(three), 2, fast_path=False))
        self.assertFalse(is_zero_Zn(determinant(three), 3))
        self.assertTrue(is_zero_Zn(determinant(four), 2, fast_path=False))
        self.assertTrue(is_zero_Zn(determinant(four), 3))

    def test_rank_one_is_refused(self):
        with self.assertRaises(UnsupportedRank):
            is_zero_Zn(self.p('x', 'y'), 1)
        with self.assertRaises(UnsupportedRank):
            random_zero_test(self.p('x', 'y'), 1, 3, 0)

    def test_rank_one_has_zero_divisors(self):
        witness = DeterminantSpec(self.points, ('x', 'y'), ('y', 'z'))
        self.assertEqual(determinant(witness), self.p('x', 'y') * self.p('y', 'z'))

    def test_random_zero_test(self):
        self.assertTrue(random_zero_test(SwapPoly.zero(self.points), 2, 1, 9))
        for seed in range(5):
            self.assertFalse(random_zero_test(self.p('x', 'y'), 2, 5, seed))

    def test_random_zero_test_needs_a_trial(self):
        with self.assertRaises(BadTrialCount):
            random_zero_test(self.p('x', 'y'), 2, 0, 1)

    def test_no_zero_divisors(self):
        points = point_set_of_size(5)
        rng = random.Random(13)
        for _ in range(10):
            f = random_element(points, rng, max_degree=2)
            g = random_element(points, rng, max_degree=2)
            if is_zero_Zn(f, 2) or is_zero_Zn(g, 2):
                continue
            self.assertFalse(is_zero_Zn(f * g, 2, fast_path=False))

    def test_fast_path_agrees_with_normal_form(self):
        points = point_set_of_size(6)
        rng = random.Random(17)
        for _ in range(25):
            f = random_element(points, rng)
            self.assertEqual(is_zero_Zn(f, 2), is_zero_Zn(f, 2, fast_path=False))

    def test_eq_in_Qn(self):
        F = SwapFraction(self.p('x', 'z'), self.p('x', 't'))
        self.assertTrue(eq_in_Qn(F, F, 2))
        self.assertFalse(eq_in_Qn(F, F.invert(), 2))
        spec = DeterminantSpec(self.points, ('x', 'z', 'y'), ('z', 'x', 't'))
        with self.assertRaises(DenominatorVanishesInZn):
            eq_in_Qn(SwapFraction(self.p('x', 'y'), determinant(spec)), F, 2)

    @override_settings(SWAPALG={'FAST_PATH': False, 'ZERO_TEST_TRIALS': 1})
    def test_settings_override(self):
        self.assertFalse(swap_settings.FAST_PATH)
        self.assertEqual(swap_settings.ZERO_TEST_TRIALS, 1)
        self.assertEqual(swap_settings.SAMPLE_BOUND, 64)


class CrossRatioTests(SimpleTestCase):

    def setUp(self):
        self.points = make_point_set('abcdef')

    def test_normalizations(self):
        self.assertEqual(cross_fraction(self.points, 'a', 'a', 'c', 'd').value, 1)
        self.assertTrue(cross_fraction(self.points, 'a', 'b', 'a', 'd').value.num.is_zero)

    def test_illegal(self):
        with self.assertRaises(IllegalCrossFraction):
            cross_fraction(self.points, 'a', 'b', 'c', 'a')

    def test_conditions(self):
        report = check_cross_ratio_conditions(self.points)
        self.assertTrue(report.ok)
        self.assertTrue(report['cocycle'].holds)
        self.assertTrue(report['second_cocycle'].holds)
        printed = report['second_cocycle_as_printed']
        self.assertFalse(printed.holds)
        self.assertEqual(printed.failed, printed.checked)

    def test_too_few_points(self):
        with self.assertRaises(InsufficientPoints):
            check_cross_ratio_conditions(make_point_set('abcde'))

    def test_denominators_are_legal_in_every_rank(self):
        check = check_rank_legal_denominators(make_point_set('abcd'), ranks=(2, 3))
        self.assertTrue(check.holds)


class ExpressionTests(SimpleTestCase):

    def setUp(self):
        self.points = make_point_set(['x', 'y', 'z', 't'])

    def test_parse_nodes(self):
        self.assertEqual(parse_expr('p(x,y)', self.points), Pair('x', 'y'))
        self.assertEqual(parse_expr('1/2 * p(x,y)', self.points),
                         BinOp('*', Num(Fraction(1, 2)), Pair('x', 'y')))
        self.assertEqual(parse_expr('br(p(x,y), p(z,t))', self.points),
                         Bracket(Pair('x', 'y'), Pair('z', 't')))

    def test_cross_fraction_expands(self):
        cr = eval_expr(parse_expr('cr(x,y,z,t)', self.points), self.points).value
        expanded = eval_expr(parse_expr('p(x,z)*p(y,t)/(p(x,t)*p(y,z))', self.points), self.points).value
        self.assertEqual(cr, expanded)

    def test_parse_errors(self):
        with self.assertRaises(ParseError) as ctx:
            parse_expr('p(x,)', self.points)
        self.assertEqual((ctx.exception.line, ctx.exception.column), (1, 5))
        with self.assertRaises(ParseError) as ctx:
            parse_expr('p(x,y) +\n  * p(z,t)', self.points)
        self.assertEqual((ctx.exception.line, ctx.exception.column), (2, 3))
        with self.assertRaises(ParseError):
            parse_expr('det([x,y],[z])', self.points)
        with self.assertRaises(ParseError):
            parse_expr('   ', self.points)
        with self.assertRaises(UnknownPoint):
            parse_expr('p(x,w)', self.points)
        with self.assertRaises(IllegalCrossFraction):
            parse_expr('cr(x,y,z,x)', self.points)

    def test_print_parse_round_trip(self):
        texts = [
            '1/2*p(x,y) - (p(x,y) - p(y,x))/3',
            '-(p(x,y) + 1)*--p(z,t)',
            '2/3/4 - p(x,y)/2/3',
            'br(cr(x,y,z,t), det([x,y],[z,t]))/(1 - p(x,z))',
            'p(x,y) - (p(z,t) - p(t,z)) + (1 + 2)',
        ]
        for text in texts:
            node = parse_expr(text, self.points)
            printed = print_expr(node)
            self.assertEqual(parse_expr(printed, self.points), node, text)
            self.assertEqual(print_expr(parse_expr(printed, self.points)), printed)

    def test_cross_fraction_normalization(self):
        points = make_point_set('acd')
        result = eval_expr(parse_expr('cr(a,a,c,d) - 1', points), points)
        self.assertTrue(result.is_zero)

    def test_bracket_with_determinant_in_rank_two(self):
        result = eval_expr(parse_expr('br(p(x,z), det([x,z,y],[z,x,t]))', self.points), self.points, 2)
        self.assertTrue(result.is_zero)
        self.assertFalse(result.numerator_normal_form)

    def test_vanishing_denominator(self):
        node = parse_expr('p(x,y)/det([x,z,y],[z,x,t])', self.points)
        self.assertFalse(eval_expr(node, self.points).is_zero)
        with self.assertRaises(DenominatorVanishesInZn):
            eval_expr(node, self.points, 2)

    def test_division_by_zero(self):
        with self.assertRaises(DivisionByZero):
            eval_expr(parse_expr('p(x,y)/(p(z,t) - p(z,t))', self.points), self.points)


class CommandTests(SimpleTestCase):

    def test_eval(self):
        out = StringIO()
        call_command('eval', 'p(x,y) + p(x,y)', points='x,y', stdout=out)
        self.assertEqual(out.getvalue().strip(), '2*p(x,y)')

    def test_eval_json(self):
        out = StringIO()
        call_command('eval', 'cr(x,y,z,t)', points='x,y,z,t', rank=2, json=True, stdout=out)
        self.assertIn('"rank": 2', out.getvalue())
        self.assertIn('"is_zero": false', out.getvalue())

    def test_bracket(self):
        out = StringIO()
        call_command('bracket', 'p(r,x)', 'p(s,y)', points='r,s,x,y', stdout=out)
        self.assertEqual(out.getvalue().strip(), 'p(r,y)*p(s,x)')

    def test_reduce(self):
        out = StringIO()
        call_command('reduce', 'det([x,y,z],[y,z,t])', points='x,y,z,t', rank=2, stdout=out)
        self.assertIn('zero in Z_2(P): yes', out.getvalue())

    def test_errors_exit_with_code_two(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('eval', 'p(x,)', points='x,y', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)
        with self.assertRaises(CommandError) as ctx:
            call_command('reduce', 'p(x,y)', points='x,y', rank=1, stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)

    def test_errors_are_drf_exceptions(self):
        with self.assertRaises(SwapAlgebraError) as ctx:
            make_point_set(['x', 'x'])
        self.assertIsInstance(ctx.exception, APIException)
        self.assertEqual(ctx.exception.get_codes(), 'duplicate_point')
        self.assertEqual(str(ctx.exception), "Point 'x' appears twice.")
        with self.assertRaises(ParseError) as ctx:
            parse_expr('p(x,)', make_point_set('xy'))
        self.assertEqual(ctx.exception.get_codes(), 'parse_error')
        self.assertTrue(str(ctx.exception).startswith('line 1, column 5: '))

    @override_settings(SWAPALG={'ZERO_TEST_TRIALS': 0})
    def test_zero_trial_setting_exits_with_code_two(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('reduce', 'p(x,y)', points='x,y', rank=2, stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)
