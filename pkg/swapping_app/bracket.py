"""
The linking number and the swapping bracket.

Points sit at even coordinates ``2 * position``; auxiliary points that
are not in P (see ``determinants.delta_terms``) take odd coordinates.
Coordinates are read linearly, as if the circle were cut just before
position 0. The linking number does not depend on where the cut is.
"""

import logging
from functools import lru_cache

from sympy.polys.domains import QQ

from .fraction_field import SwapFraction
from .polynomials import SwapPoly

logger = logging.getLogger(__name__)


def _sign(value):
    return (value > 0) - (value < 0)


def coordinate(points, name):
    return 2 * points.index(name)


def linking_by_coordinates(r, x, s, y):
    """J(rx, sy) for four real coordinates on the cut circle."""
    first = _sign(r - x) * _sign(r - y) * _sign(y - x)
    second = _sign(r - x) * _sign(r - s) * _sign(s - x)
    return QQ(first - second, 2)


def linking_number(points, r, x, s, y):
    """J(rx, sy), a value in {0, ±1/2, ±1}."""
    return linking_by_coordinates(
        coordinate(points, r), coordinate(points, x),
        coordinate(points, s), coordinate(points, y),
    )


@lru_cache(maxsize=65536)
def _generator_bracket(points, i, j):
    u = points.pair_vars[i]
    v = points.pair_vars[j]
    if u.left == v.right or v.left == u.right:
        return points.ring.zero
    j_value = linking_number(points, u.left, u.right, v.left, v.right)
    if not j_value:
        return points.ring.zero
    ring = points.ring
    ry = ring.gens[points.generator_index[(u.left, v.right)]]
    sx = ring.gens[points.generator_index[(v.left, u.right)]]
    return ry * sx * j_value


def bracket_generators(points, u, v):
    """{rx, sy} = J(rx, sy)·ry·sx for pair variables u = rx, v = sy."""
    i = points.var_index(u.left, u.right)
    j = points.var_index(v.left, v.right)
    return SwapPoly(points, _generator_bracket(points, i, j))


def bracket_poly(f, g):
    """The swapping bracket on Z(P), extended from generators by Leibniz's rule."""
    f._check(g)
    points = f.points
    ring = points.ring
    result = ring.zero
    g_vars = g.variables()
    if not g_vars:
        return SwapPoly(points, result)
    g_partials = {j: g.poly.diff(ring.gens[j]) for j in g_vars}
    for i in f.variables():
        f_partial = f.poly.diff(ring.gens[i])
        for j in g_vars:
            generator_bracket = _generator_bracket(points, i, j)
            if generator_bracket:
                result = result + f_partial * g_partials[j] * generator_bracket
    return SwapPoly(points, result)


def bracket_fraction(F, G):
    """
    The bracket on Q(P), from {a, 1/b} = −{a, b}/b²:

        {a/b, c/d} = ({a,c}·bd − {a,d}·bc − {b,c}·ad + {b,d}·ac) / (b²d²)
    """
    F = SwapFraction.of(F)
    G = SwapFraction.of(G)
    a, b, c, d = F.num, F.den, G.num, G.den
    num = (bracket_poly(a, c) * b * d
           - bracket_poly(a, d) * b * c
           - bracket_poly(b, c) * a * d
           + bracket_poly(b, d) * a * c)
    return SwapFraction(num, b * b * d * d)


def log_bracket_expansion(cs, ds):
    """Σᵢⱼ {cᵢ, dⱼ}/(cᵢ·dⱼ) for nonzero polynomials cᵢ, dⱼ."""
    total = None
    for c in cs:
        for d in ds:
            term = SwapFraction(bracket_poly(c, d), c * d)
            total = term if total is None else total + term
    if total is None:
        raise ValueError("log_bracket_expansion needs at least one factor on each side.")
    return total
