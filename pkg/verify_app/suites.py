"""
The property suites behind ``manage.py verify``.

A suite lists its cases up front, then checks each case on its own and
returns the failures. Random suites hand every trial its own seed,
``seed * 1_000_003 + index``, and draw all of the trial's inputs inside
the check. A report therefore does not depend on how trials are
scheduled, and any failing trial can be replayed alone.
"""

import random
from fractions import Fraction
from itertools import combinations, permutations, product

from cluster_app.theta import (check_flip_compat, check_flip_epsilon, check_mutation_poisson,
                               check_theta_poisson, fg_from_points)
from cluster_app.triangulations import Triangulation, enumerate_triangulations
from swapping_app.bracket import bracket_poly
from swapping_app.cross_ratio import check_cross_ratio_conditions, check_rank_legal_denominators
from swapping_app.determinants import DeterminantSpec, delta_L, delta_R, determinant
from swapping_app.points import point_set_of_size
from swapping_app.rank_model import is_zero_Zn, random_zero_test
from swapping_app.sampling import random_element, random_monomial, random_spec

from .exceptions import UnknownSuite
from .reports import Failure

TRIAL_SEED_STRIDE = 1_000_003

SUITES = {}


def register(cls):
    SUITES[cls.name] = cls()
    return cls


def get_suite(name):
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuite(f"Unknown suite {name!r}; known suites: {', '.join(SUITES)}.")


def trial_seed(seed, index):
    return seed * TRIAL_SEED_STRIDE + index


def trial_seeds(seed, trials):
    return [(index, trial_seed(seed, index)) for index in range(trials)]


def names_text(points):
    return ','.join(points.names)


class Suite:
    name = None
    defaults = {}

    def cases(self, params, seed):
        raise NotImplementedError

    def check(self, case, params):
        raise NotImplementedError


def _from_cluster_check(check):
    return [Failure(*failure) for failure in check.failures]


@register
class JacobiSuite(Suite):
    """Antisymmetry and the Jacobi identity of the swapping bracket."""

    name = 'jacobi'
    defaults = {'points': 5, 'mode': 'exhaustive', 'trials': 1000}

    def cases(self, params, seed):
        points = point_set_of_size(params['points'])
        if params['mode'] == 'exhaustive':
            return list(product(range(len(points.pair_vars)), repeat=3))
        return trial_seeds(seed, params['trials'])

    def _elements(self, case, params):
        points = point_set_of_size(params['points'])
        if params['mode'] == 'exhaustive':
            return [points.pair(v.left, v.right) for v in (points.pair_vars[i] for i in case)]
        rng = random.Random(case[1])
        return [random_monomial(points, rng, rng.randint(1, 3)) for _ in range(3)]

    def check(self, case, params):
        f, g, h = self._elements(case, params)
        label = (f"points={names_text(f.points)} f={f.canonical_text()} "
                 f"g={g.canonical_text()} h={h.canonical_text()}")
        failures = []
        antisymmetry = bracket_poly(f, g) + bracket_poly(g, f)
        if not antisymmetry.is_zero:
            failures.append(Failure(f"antisymmetry {label}", '0', antisymmetry.canonical_text()))
        jacobi = (bracket_poly(f, bracket_poly(g, h))
                  + bracket_poly(g, bracket_poly(h, f))
                  + bracket_poly(h, bracket_poly(f, g)))
        if not jacobi.is_zero:
            failures.append(Failure(f"jacobi {label}", '0', jacobi.canonical_text()))
        return failures


@register
class PoissonIdealSuite(Suite):
    """{ab, Δ} lies in R_n(P) for every generator ab and (n+1)×(n+1) determinant Δ."""

    name = 'poisson_ideal'
    defaults = {'n': 2, 'points': 6, 'trials': 200}

    def cases(self, params, seed):
        return trial_seeds(seed, params['trials'])

    def check(self, case, params):
        n = params['n']
        points = point_set_of_size(params['points'])
        spec = random_spec(points, random.Random(case[1]), n + 1)
        delta = determinant(spec)
        failures = []
        for var in points.pair_vars:
            value = bracket_poly(points.pair(var.left, var.right), delta)
            if not is_zero_Zn(value, n):
                failures.append(Failure(
                    f"reduce --rank {n} --points {names_text(points)} 'br(p({var.left},{var.right}),{spec})'",
                    '0', value.canonical_text(),
                ))
        return failures


@register
class DeltaSuite(Suite):
    """{ab, Δ} = Δ^R(a,b) = Δ^L(a,b) exactly in Z(P)."""

    name = 'delta_r_l'
    defaults = {'n': 2, 'points': 6, 'mode': 'exhaustive', 'trials': 100}

    def cases(self, params, seed):
        points = point_set_of_size(params['points'])
        if params['mode'] == 'random':
            return trial_seeds(seed, params['trials'])
        size = params['n'] + 1
        chords = list(permutations(points.names, 2))
        rows = list(combinations(points.names, size))
        return [(a, b, xs, ys) for a, b in chords for xs in rows for ys in rows]

    def check(self, case, params):
        points = point_set_of_size(params['points'])
        if params['mode'] == 'random':
            rng = random.Random(case[1])
            a, b = rng.sample(points.names, 2)
            spec = random_spec(points, rng, params['n'] + 1)
        else:
            a, b, xs, ys = case
            spec = DeterminantSpec(points, xs, ys)
        bracket = bracket_poly(points.pair(a, b), determinant(spec))
        label = f"bracket --points {names_text(points)} 'p({a},{b})' '{spec}'"
        failures = []
        for side, value in (('right', delta_R(a, b, spec)), ('left', delta_L(a, b, spec))):
            if value != bracket:
                failures.append(Failure(f"{label} side={side}", bracket.canonical_text(), value.canonical_text()))
        return failures


@register
class DomainSuite(Suite):
    """Products of certified-nonzero elements of Z_n(P) stay nonzero."""

    name = 'domain'
    defaults = {'n': 2, 'points': 5, 'trials': 100}

    @staticmethod
    def _nonzero_element(points, rng, n):
        while True:
            f = random_element(points, rng, max_degree=2)
            if not f.is_zero and not random_zero_test(f, n, seed=rng.randrange(2 ** 32)):
                return f

    def cases(self, params, seed):
        return trial_seeds(seed, params['trials'])

    def check(self, case, params):
        n = params['n']
        points = point_set_of_size(params['points'])
        rng = random.Random(case[1])
        f = self._nonzero_element(points, rng, n)
        g = self._nonzero_element(points, rng, n)
        if is_zero_Zn(f * g, n, fast_path=False):
            return [Failure(
                f"reduce --rank {n} --points {names_text(points)} '({f.canonical_text()})*({g.canonical_text()})'",
                'nonzero', '0',
            )]
        return []


@register
class CrossRatioSuite(Suite):
    """The cross-ratio conditions and the rank 2, 3 denominators of legal cross fractions."""

    name = 'cross_ratio'
    defaults = {'points': 6}

    def cases(self, params, seed):
        return ['conditions', 'rank_legal_denominators']

    def check(self, case, params):
        points = point_set_of_size(params['points'])
        if case == 'conditions':
            checks = check_cross_ratio_conditions(points).checks
        else:
            checks = [check_rank_legal_denominators(points)]
        failures = []
        for check in checks:
            if not check.ok:
                expected = 'holds' if check.expected_to_hold else 'fails somewhere'
                got = f"{check.failed} of {check.checked} tuples fail" if check.failed else 'holds everywhere'
                witnesses = ' '.join(','.join(str(part) for part in w) for w in check.witnesses)
                failures.append(Failure(f"{check.name} points={names_text(points)} {witnesses}".strip(), expected, got))
        return failures


@register
class NestingSuite(Suite):
    """(n+2)×(n+2) determinants already vanish in Z_n(P)."""

    name = 'nesting'
    defaults = {'n': 2, 'points': 8, 'trials': 20}

    def cases(self, params, seed):
        return trial_seeds(seed, params['trials'])

    def check(self, case, params):
        n = params['n']
        points = point_set_of_size(params['points'])
        spec = random_spec(points, random.Random(case[1]), n + 2)
        if not is_zero_Zn(determinant(spec), n):
            return [Failure(f"reduce --rank {n} --points {names_text(points)} '{spec}'", '0', 'nonzero')]
        return []


def _triangulations(params):
    return [t for k in params['k'] for t in enumerate_triangulations(k)]


def _diagonal_cases(params):
    return [(t, e) for t in _triangulations(params) for e in t.diagonals]


@register
class ThetaPoissonSuite(Suite):
    name = 'theta_poisson'
    defaults = {'k': [5, 6]}

    def cases(self, params, seed):
        return _triangulations(params)

    def check(self, case, params):
        return _from_cluster_check(check_theta_poisson(case))


@register
class FlipCompatSuite(Suite):
    name = 'flip_compat'
    defaults = {'k': [5, 6]}

    def cases(self, params, seed):
        return _diagonal_cases(params)

    def check(self, case, params):
        return _from_cluster_check(check_flip_compat(*case))


@register
class MutationPoissonSuite(Suite):
    name = 'mutation_poisson'
    defaults = {'k': [5, 6]}

    def cases(self, params, seed):
        return _diagonal_cases(params)

    def check(self, case, params):
        return (_from_cluster_check(check_mutation_poisson(*case))
                + _from_cluster_check(check_flip_epsilon(*case)))


@register
class OracleAgreementSuite(Suite):
    """The five-point random zero test against the deterministic normal form."""

    name = 'oracle_agreement'
    defaults = {'n': 2, 'points': 6, 'trials': 500}
    zero_test_trials = 5

    def cases(self, params, seed):
        return trial_seeds(seed, params['trials'])

    def check(self, case, params):
        n = params['n']
        points = point_set_of_size(params['points'])
        f = random_element(points, random.Random(case[1]))
        probably_zero = random_zero_test(f, n, trials=self.zero_test_trials, seed=case[1])
        zero = is_zero_Zn(f, n, fast_path=False)
        if probably_zero == zero:
            return []
        verdict = {True: 'zero', False: 'nonzero'}
        return [Failure(
            f"reduce --rank {n} --points {names_text(points)} '{f.canonical_text()}' zero_test_seed={case[1]}",
            verdict[zero], verdict[probably_zero],
        )]


@register
class FockGoncharovPositivitySuite(Suite):
    """Numeric FG coordinates: 3 on the square 0,1,2,3 and positive on ordered quadruples."""

    name = 'fg_positivity'
    defaults = {'trials': 100}
    square = Triangulation(4, ((0, 2),))

    def cases(self, params, seed):
        return [(None, None)] + trial_seeds(seed, params['trials'])

    def check(self, case, params):
        index, seed = case
        if index is None:
            values = [0, 1, 2, 3]
        else:
            rng = random.Random(seed)
            values = set()
            while len(values) < 4:
                values.add(Fraction(rng.randint(-50, 50), rng.randint(1, 9)))
            values = sorted(values)
        x = fg_from_points(values, self.square)[(0, 2)]
        label = f"cluster fg --k 4 --edges 1-3 --values {','.join(str(v) for v in values)}"
        if index is None and x != 3:
            return [Failure(label, '3', str(x))]
        if x <= 0:
            return [Failure(label, 'positive', str(x))]
        return []
