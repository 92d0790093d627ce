"""
The embedding θ_T of the cluster X-space into the rank 2 multifraction
algebra, Fock–Goncharov coordinates of points on the line, and the
checks that tie θ_T to ε, flips and mutations.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from swapping_app.bracket import bracket_fraction
from swapping_app.fraction_field import SwapFraction
from swapping_app.polynomials import SwapPoly
from swapping_app.rank_model import eq_in_Qn

from .exceptions import DegenerateFlags
from .seeds import Seed, fg_bracket, mutate, rational_equal
from .triangulations import edge_text, epsilon, flip, flip_path, vertex_name

logger = logging.getLogger(__name__)

RANK = 2


@dataclass
class ClusterCheck:
    """Per-case verdicts of one check; ``failures`` holds (input, expected, got)."""

    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def record(self, label, passed, expected='', got=''):
        self.checked += 1
        if not passed:
            self.failures.append((label, str(expected), str(got)))

    def merge(self, other):
        self.checked += other.checked
        self.failures.extend(other.failures)
        return self


def theta(triangulation, edge):
    """θ_T(X_xz) = −(yz·tx)/(tz·yx) with x, y, z, t anticlockwise around xz."""
    x, y, z, t = (vertex_name(v) for v in triangulation.quadrilateral(edge))
    p = triangulation.points.pair
    return SwapFraction(-(p(y, z) * p(t, x)), p(t, z) * p(y, x))


def _evaluate(poly, values, points):
    total = SwapFraction.of(SwapPoly.zero(points))
    for monom, coeff in poly.iterterms():
        term = SwapFraction.of(SwapPoly.constant(points, coeff))
        for slot, exponent in enumerate(monom):
            if exponent:
                term = term * values[slot] ** exponent
        total = total + term
    return total


def theta_rational(triangulation, f, edges=None):
    """θ_T on a rational function of the slot variables; slot i stands for ``edges[i]``."""
    edges = triangulation.diagonals if edges is None else edges
    points = triangulation.points
    values = [theta(triangulation, edge) for edge in edges]
    return _evaluate(f.numer, values, points) / _evaluate(f.denom, values, points)


def fg_from_points(values, triangulation):
    """
    Numeric coordinates X_xz = −((y−z)/(t−z))·((t−x)/(y−x)) from one
    rational value per vertex.
    """
    values = [Fraction(values[v]) for v in range(triangulation.k)]
    if len(set(values)) != len(values):
        raise DegenerateFlags("Vertex values must be pairwise distinct.")
    result = {}
    for edge in triangulation.diagonals:
        x, y, z, t = (values[v] for v in triangulation.quadrilateral(edge))
        result[edge] = -((y - z) / (t - z)) * ((t - x) / (y - x))
    return result


def check_theta_poisson(triangulation):
    check = ClusterCheck('theta_poisson')
    edges = triangulation.diagonals
    eps = epsilon(triangulation)
    thetas = {edge: theta(triangulation, edge) for edge in edges}
    for e in edges:
        for f in edges:
            got = bracket_fraction(thetas[e], thetas[f])
            expected = thetas[e] * thetas[f] * eps(e, f)
            check.record(
                f"T={triangulation} i={edge_text(e)} j={edge_text(f)}",
                eq_in_Qn(got, expected, RANK), expected, got,
            )
    return check


def check_flip_compat(triangulation, edge):
    check = ClusterCheck('flip_compat')
    seed = Seed.fresh(triangulation)
    mutated = mutate(seed, edge)
    flipped = mutated.triangulation
    for slot, new_edge in enumerate(mutated.edges):
        got = theta_rational(triangulation, mutated.coords[slot])
        expected = theta(flipped, new_edge)
        check.record(
            f"T={triangulation} e={edge_text(edge)} i={edge_text(seed.edges[slot])}",
            eq_in_Qn(got, expected, RANK), expected, got,
        )
    return check


def _check_mutated_seed(check, initial_eps, after, label):
    for i, g_i in enumerate(after.coords):
        for j, g_j in enumerate(after.coords):
            got = fg_bracket(initial_eps, g_i, g_j)
            expected = g_i * g_j * after.eps[i][j]
            check.record(f"{label} i={edge_text(after.edges[i])} j={edge_text(after.edges[j])}",
                         rational_equal(got, expected), expected, got)


def check_mutation_poisson(triangulation, edge):
    """Brackets of the g_e(X_i), taken with the old ε, match the mutated ε′."""
    check = ClusterCheck('mutation_poisson')
    seed = Seed.fresh(triangulation)
    mutated = mutate(seed, edge)
    _check_mutated_seed(check, seed.eps, mutated, f"T={triangulation} e={edge_text(edge)}")
    return check


def check_flip_path(source, target):
    """
    Mutates along a shortest flip path: at every step the seed's ε must
    agree with ``epsilon`` of the triangulation reached, and the bracket
    of the new coordinates must still be governed by the new ε.
    """
    check = ClusterCheck('flip_path')
    seed = Seed.fresh(source)
    initial_eps = seed.eps
    for edge, reached in flip_path(source, target):
        mutated = mutate(seed, edge)
        label = f"T={seed.triangulation} e={edge_text(edge)}"
        fresh = epsilon(reached).as_rows(mutated.edges)
        check.record(f"{label} epsilon", mutated.triangulation == reached
                     and [list(row) for row in mutated.eps] == fresh, fresh, mutated.eps)
        _check_mutated_seed(check, initial_eps, mutated, label)
        seed = mutated
    return check


def check_flip_epsilon(triangulation, edge):
    """ε produced by ``mutate`` equals ``epsilon`` of the flipped triangulation."""
    check = ClusterCheck('flip_epsilon')
    mutated = mutate(Seed.fresh(triangulation), edge)
    flipped, _ = flip(triangulation, edge)
    fresh = epsilon(flipped).as_rows(mutated.edges)
    check.record(f"T={triangulation} e={edge_text(edge)}", [list(row) for row in mutated.eps] == fresh,
                 fresh, mutated.eps)
    return check
