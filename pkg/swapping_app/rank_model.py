"""
Equality in the rank-n quotient Z_n(P).

Z_n(P) embeds in K[a_{i,k}, b_{i,k}] / L, where ``xy`` goes to
⟨a_x|b_y⟩ = Σ_k a_{x,k}·b_{y,k} and L is generated by the
g_i = ⟨a_i|b_i⟩. The generators are listed b_{1,n} … b_{p,n} first and
the ring uses lex, so LT(g_i) = a_{i,n}·b_{i,n}. Those leading terms are
pairwise coprime, the g_i are a Gröbner basis, and division by them
gives a unique normal form that vanishes exactly on L.
"""

import logging
import random
from dataclasses import dataclass
from functools import cached_property

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing

from .conf import swap_settings
from .exceptions import BadModel, BadTrialCount, DenominatorVanishesInZn, UnsupportedRank
from .fraction_field import SwapFraction
from .polynomials import SwapPoly

logger = logging.getLogger(__name__)


def check_rank(n):
    if n < 2:
        raise UnsupportedRank(f"Rank {n} is not supported; the rank must be at least 2.")


@dataclass(frozen=True)
class RankModel:
    """The model ring for rank ``n`` and points 1..``p``; indices here are 0-based."""

    n: int
    p: int

    def __post_init__(self):
        check_rank(self.n)
        if self.p < 1:
            raise BadModel("A model needs at least one point.")

    @classmethod
    def for_points(cls, points, n):
        return cls(n, len(points))

    @cached_property
    def ring(self):
        n, p = self.n, self.p
        symbols = [Symbol(f"b[{i + 1},{n}]") for i in range(p)]
        for i in range(p):
            symbols += [Symbol(f"a[{i + 1},{k + 1}]") for k in range(n)]
            symbols += [Symbol(f"b[{i + 1},{k + 1}]") for k in range(n - 1)]
        return PolyRing(symbols, QQ, lex)

    @cached_property
    def _gens(self):
        n, p = self.n, self.p
        gens = self.ring.gens
        a = [[None] * n for _ in range(p)]
        b = [[None] * n for _ in range(p)]
        for i in range(p):
            b[i][n - 1] = gens[i]
        position = p
        for i in range(p):
            for k in range(n):
                a[i][k] = gens[position]
                position += 1
            for k in range(n - 1):
                b[i][k] = gens[position]
                position += 1
        return a, b

    def a(self, i, k):
        return self._gens[0][i][k]

    def b(self, i, k):
        return self._gens[1][i][k]

    def pairing(self, i, j):
        """⟨a_i|b_j⟩."""
        return sum((self.a(i, k) * self.b(j, k) for k in range(self.n)), self.ring.zero)

    @cached_property
    def basis(self):
        return tuple(self.pairing(i, i) for i in range(self.p))

    @cached_property
    def leading_indices(self):
        """Generator positions of (a_{i,n}, b_{i,n}) for each point i."""
        n, p = self.n, self.p
        return tuple((p + i * (2 * n - 1) + n - 1, i) for i in range(p))

    @cached_property
    def _tail_powers(self):
        return {}

    def tail_power(self, i, m):
        """(−Σ_{k<n} a_{i,k}·b_{i,k})^m, the rewrite of (a_{i,n}·b_{i,n})^m."""
        key = (i, m)
        if key not in self._tail_powers:
            tail = self.pairing(i, i) - self.a(i, self.n - 1) * self.b(i, self.n - 1)
            self._tail_powers[key] = (-tail) ** m
        return self._tail_powers[key]


def strip_monomial_content(f):
    """
    ``f`` divided by the largest monomial dividing all of its terms.
    Pair monomials are nonzero in the domain Z_n(P), so this does not
    change whether f lies in R_n(P).
    """
    monoms = list(f.poly.itermonoms())
    if not monoms:
        return f
    content = [min(exponents) for exponents in zip(*monoms)]
    if not any(content):
        return f
    ring = f.points.ring
    poly = ring.from_dict({
        tuple(e - c for e, c in zip(monom, content)): coeff
        for monom, coeff in f.poly.iterterms()
    })
    return SwapPoly(f.points, poly)


def expand_to_model(f, model):
    """Image of ``f`` under xy ↦ ⟨a_x|b_y⟩, points numbered by position."""
    points = f.points
    if len(points) > model.p:
        raise BadModel(f"The model has {model.p} points but the polynomial lives on {len(points)}.")
    images = {}
    for index in f.variables():
        var = points.pair_vars[index]
        images[index] = model.pairing(points.index(var.left), points.index(var.right))
    ring = model.ring
    result = ring.zero
    for monom, coeff in f.poly.iterterms():
        term = ring.ground_new(coeff)
        for index, exponent in enumerate(monom):
            if exponent:
                term = term * images[index] ** exponent
        result = result + term
    return result


def normal_form_model(q, model, order=None):
    """
    Normal form of ``q`` modulo L.

    By default every (a_{i,n}·b_{i,n})^m is rewritten in one pass, which
    leaves no monomial divisible by a leading term. With ``order`` the
    remainder is computed by division by the g_i in that order instead;
    both give the same polynomial.
    """
    if order is not None:
        return q.rem([model.basis[i] for i in order])
    ring = model.ring
    plain = {}
    result = ring.zero
    for monom, coeff in q.iterterms():
        exponents = list(monom)
        factor = None
        for i, (a_index, b_index) in enumerate(model.leading_indices):
            m = min(exponents[a_index], exponents[b_index])
            if m:
                exponents[a_index] -= m
                exponents[b_index] -= m
                power = model.tail_power(i, m)
                factor = power if factor is None else factor * power
        if factor is None:
            plain[monom] = coeff
        else:
            result = result + ring.from_dict({tuple(exponents): coeff}) * factor
    return result + ring.from_dict(plain)


def _random_model_point(model, rng, bound):
    n = model.n
    a_vectors, b_vectors = [], []
    for _ in range(model.p):
        a = [QQ(rng.randint(-bound, bound)) for _ in range(n)]
        while not any(a):
            a = [QQ(rng.randint(-bound, bound)) for _ in range(n)]
        b = [QQ(rng.randint(-bound, bound)) for _ in range(n)]
        # project b into the hyperplane ⟨a|b⟩ = 0
        ratio = sum(x * y for x, y in zip(a, b)) / sum(x * x for x in a)
        b = [y - ratio * x for x, y in zip(a, b)]
        a_vectors.append(a)
        b_vectors.append(b)
    return a_vectors, b_vectors


def evaluate_at_model_point(f, a_vectors, b_vectors):
    points = f.points
    values = {}
    for index in f.variables():
        var = points.pair_vars[index]
        a = a_vectors[points.index(var.left)]
        b = b_vectors[points.index(var.right)]
        values[index] = sum((x * y for x, y in zip(a, b)), QQ(0))
    total = QQ(0)
    for monom, coeff in f.poly.iterterms():
        term = coeff
        for index, exponent in enumerate(monom):
            if exponent:
                term *= values[index] ** exponent
        total += term
    return total


def random_zero_test(f, n, trials=None, seed=None):
    """
    False as soon as ``f`` is nonzero at a random point of the model
    variety, which certifies f ∉ R_n(P). True only means "probably zero".
    """
    check_rank(n)
    trials = swap_settings.ZERO_TEST_TRIALS if trials is None else trials
    seed = swap_settings.DEFAULT_SEED if seed is None else seed
    if trials < 1:
        raise BadTrialCount(f"random_zero_test needs at least one trial, got {trials}.")
    if f.is_zero:
        return True
    model = RankModel.for_points(f.points, n)
    rng = random.Random(seed)
    for _ in range(trials):
        a_vectors, b_vectors = _random_model_point(model, rng, swap_settings.SAMPLE_BOUND)
        if evaluate_at_model_point(f, a_vectors, b_vectors):
            return False
    return True


def is_zero_Zn(f, n, fast_path=None):
    """True iff ``f`` lies in R_n(P). Deterministic; the fast path only settles nonzero cases."""
    check_rank(n)
    if f.is_zero:
        return True
    f = strip_monomial_content(f)
    fast_path = swap_settings.FAST_PATH if fast_path is None else fast_path
    if fast_path and not random_zero_test(f, n):
        return False
    model = RankModel.for_points(f.points, n)
    remainder = normal_form_model(expand_to_model(f, model), model)
    logger.debug("rank %s normal form of %d-term polynomial has %d terms", n, len(f), len(remainder))
    return not remainder


def eq_in_Qn(F, G, n, fast_path=None):
    """Equality of two fractions in Q_n(P), by cross-multiplication."""
    check_rank(n)
    F = SwapFraction.of(F)
    G = F._coerce(G)
    for den in (F.den, G.den):
        if is_zero_Zn(den, n, fast_path):
            raise DenominatorVanishesInZn(f"Denominator {den} vanishes in rank {n}.")
    difference = F.cross_difference(G)
    if difference.is_zero:
        return True
    return is_zero_Zn(difference, n, fast_path)
