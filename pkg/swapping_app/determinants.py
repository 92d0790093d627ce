"""
Determinants Δ((x₁..x_{m}), (y₁..y_{m})) of pair variables and the
right/left substitution sums that compute {ab, Δ}.
"""

from dataclasses import dataclass
from itertools import permutations

from sympy.combinatorics import Permutation

from .bracket import coordinate, linking_by_coordinates
from .exceptions import BadSpec, DegeneratePair
from .polynomials import SwapPoly

RIGHT = 'right'
LEFT = 'left'


@dataclass(frozen=True)
class DeterminantSpec:
    """Row points ``xs`` and column points ``ys``; repeats are allowed and give zero."""

    points: object
    xs: tuple
    ys: tuple

    def __post_init__(self):
        xs, ys = tuple(self.xs), tuple(self.ys)
        if not xs:
            raise BadSpec("A determinant needs at least one row.")
        if len(xs) != len(ys):
            raise BadSpec(f"Row list has {len(xs)} points but column list has {len(ys)}.")
        for name in xs + ys:
            self.points.index(name)
        object.__setattr__(self, 'xs', xs)
        object.__setattr__(self, 'ys', ys)

    @property
    def size(self):
        return len(self.xs)

    def with_x(self, slot, name):
        return DeterminantSpec(self.points, self.xs[:slot] + (name,) + self.xs[slot + 1:], self.ys)

    def with_y(self, slot, name):
        return DeterminantSpec(self.points, self.xs, self.ys[:slot] + (name,) + self.ys[slot + 1:])

    def __str__(self):
        return f"det([{','.join(self.xs)}],[{','.join(self.ys)}])"


def determinant(spec):
    """Σ_σ sgn(σ)·Π xᵢ y_σ(i), expanded in full."""
    points = spec.points
    ring = points.ring
    index = points.generator_index
    if len(set(spec.xs)) < spec.size or len(set(spec.ys)) < spec.size:
        return SwapPoly.zero(points)
    result = ring.zero
    for sigma in permutations(range(spec.size)):
        term = ring.one
        for row, col in enumerate(sigma):
            x, y = spec.xs[row], spec.ys[col]
            if x == y:
                term = ring.zero
                break
            term = term * ring.gens[index[(x, y)]]
        if term:
            result = result + term * Permutation(list(sigma)).signature()
    return SwapPoly(points, result)


def _auxiliary_coordinate(points, a, b, side):
    # u = b + ½ lies strictly left of a→b; v = a + ½ strictly right.
    if side == RIGHT:
        return coordinate(points, b) + 1
    if side == LEFT:
        return coordinate(points, a) + 1
    raise ValueError(f"side must be {RIGHT!r} or {LEFT!r}, not {side!r}")


def delta_terms(a, b, spec, side=RIGHT):
    """
    The substitution sum for {ab, Δ} as unexpanded terms
    ``(coefficient, PairVar, DeterminantSpec)``, like terms merged and
    zero coefficients dropped, in order of first appearance.

    ``side='right'`` uses an auxiliary point strictly left of a→b, so
    only entries on the right side (a and b included) contribute;
    ``side='left'`` is the mirror image.
    """
    points = spec.points
    points.index(a)
    points.index(b)
    if a == b:
        raise DegeneratePair(f"The chord {a}{b} is degenerate.")
    ca, cb = coordinate(points, a), coordinate(points, b)
    cu = _auxiliary_coordinate(points, a, b, side)
    merged = {}
    for slot, x in enumerate(spec.xs):
        weight = linking_by_coordinates(ca, cb, coordinate(points, x), cu)
        if weight and x != b:
            key = ((x, b), spec.with_x(slot, a))
            merged[key] = merged.get(key, 0) + weight
    for slot, y in enumerate(spec.ys):
        weight = linking_by_coordinates(ca, cb, cu, coordinate(points, y))
        if weight and a != y:
            key = ((a, y), spec.with_y(slot, b))
            merged[key] = merged.get(key, 0) + weight
    return [
        (weight, points.pair_vars[points.generator_index[pair]], det_spec)
        for (pair, det_spec), weight in merged.items()
        if weight
    ]


def expand_delta_terms(points, terms):
    total = SwapPoly.zero(points)
    for weight, var, det_spec in terms:
        total = total + points.pair(var.left, var.right) * determinant(det_spec) * weight
    return total


def delta_R(a, b, spec):
    return expand_delta_terms(spec.points, delta_terms(a, b, spec, RIGHT))


def delta_L(a, b, spec):
    return expand_delta_terms(spec.points, delta_terms(a, b, spec, LEFT))
