"""
Seeds of the cluster X-space and their mutations.

Coordinates are rational functions in the variables X0, X1, … of the
initial seed, one per slot. A slot keeps its variable through every
mutation; only the edge it names changes (e becomes e′ on a flip).
"""

from dataclasses import dataclass
from functools import lru_cache

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.fields import FracField
from sympy.polys.orderings import lex

from .exceptions import NotADiagonal
from .triangulations import canonical_edge, edge_text, epsilon, flip


@lru_cache(maxsize=16)
def fg_field(size):
    return FracField([Symbol(f"X{slot}") for slot in range(size)], QQ, lex)


@dataclass(frozen=True)
class Seed:
    triangulation: object
    edges: tuple
    eps: tuple
    coords: tuple

    @classmethod
    def fresh(cls, triangulation):
        edges = triangulation.diagonals
        field = fg_field(len(edges))
        rows = epsilon(triangulation).as_rows(edges)
        return cls(triangulation, edges, tuple(map(tuple, rows)), tuple(field.gens))

    @property
    def field(self):
        return fg_field(len(self.edges))

    def slot(self, edge):
        edge = canonical_edge(*edge)
        try:
            return self.edges.index(edge)
        except ValueError:
            raise NotADiagonal(f"{edge_text(edge)} is not an edge of this seed.")


def mutate_matrix(eps, e):
    size = len(eps)
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            if e in (i, j):
                row.append(-eps[i][j])
            else:
                row.append(eps[i][j] + eps[i][e] * max(0, eps[i][e] * eps[e][j]))
        rows.append(tuple(row))
    return tuple(rows)


def transition(eps, e, values):
    """g_e applied to ``values`` (the current X_i, one per slot)."""
    x_e = values[e]
    one = x_e.field.one
    result = []
    for i, x_i in enumerate(values):
        if i == e:
            result.append(1 / x_e)
            continue
        weight = eps[i][e]
        if weight <= 0:
            result.append(x_i * (one + x_e) ** (-weight))
        else:
            result.append(x_i * (one + 1 / x_e) ** (-weight))
    return tuple(result)


def mutate(seed, edge):
    """Flip at ``edge``: new triangulation, mutated ε, coordinates composed with g_e."""
    e = seed.slot(edge)
    triangulation, new_edge = flip(seed.triangulation, seed.edges[e])
    edges = seed.edges[:e] + (new_edge,) + seed.edges[e + 1:]
    return Seed(
        triangulation,
        edges,
        mutate_matrix(seed.eps, e),
        transition(seed.eps, e, seed.coords),
    )


def fg_bracket(eps, f, g):
    """{f, g} = Σ ε_ij·X_i·X_j·∂_i f·∂_j g on rational functions of the slot variables."""
    field = f.field
    gens = field.gens
    result = field.zero
    f_partials = [f.diff(x) for x in gens]
    g_partials = [g.diff(x) for x in gens]
    for i, x_i in enumerate(gens):
        if not f_partials[i]:
            continue
        for j, x_j in enumerate(gens):
            if eps[i][j] and g_partials[j]:
                result += x_i * x_j * f_partials[i] * g_partials[j] * eps[i][j]
    return result


def rational_equal(f, g):
    return not (f.numer * g.denom - g.numer * f.denom)
