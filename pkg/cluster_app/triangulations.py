"""
Triangulations of a convex k-gon with vertices 0..k-1 in anticlockwise
order. An inner edge is a sorted pair ``(i, j)`` with ``i < j``.
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from swapping_app.points import make_point_set

from .exceptions import BadTriangulation, NotADiagonal, UnsupportedSize

logger = logging.getLogger(__name__)

MIN_SIZE = 4
MAX_SIZE = 10


def vertex_name(i):
    return f"v{i + 1}"


def edge_text(edge):
    return f"{edge[0] + 1}-{edge[1] + 1}"


def canonical_edge(u, v):
    return (u, v) if u < v else (v, u)


def is_side(k, edge):
    i, j = edge
    return j - i == 1 or (i == 0 and j == k - 1)


def crosses(e, f):
    (a, b), (c, d) = e, f
    return a < c < b < d or c < a < d < b


@dataclass(frozen=True)
class Triangulation:
    k: int
    diagonals: tuple

    def __post_init__(self):
        if self.k < 3:
            raise BadTriangulation(f"A polygon needs at least 3 vertices, got {self.k}.")
        diagonals = tuple(sorted({canonical_edge(*edge) for edge in self.diagonals}))
        for edge in diagonals:
            if edge[0] < 0 or edge[1] >= self.k or edge[0] == edge[1] or is_side(self.k, edge):
                raise BadTriangulation(f"{edge_text(edge)} is not a diagonal of the {self.k}-gon.")
        if len(diagonals) != self.k - 3:
            raise BadTriangulation(f"A {self.k}-gon needs {self.k - 3} diagonals, got {len(diagonals)}.")
        for e, f in combinations(diagonals, 2):
            if crosses(e, f):
                raise BadTriangulation(f"Diagonals {edge_text(e)} and {edge_text(f)} cross.")
        object.__setattr__(self, 'diagonals', diagonals)

    @cached_property
    def points(self):
        return make_point_set([vertex_name(i) for i in range(self.k)])

    @cached_property
    def edges(self):
        sides = {canonical_edge(i, (i + 1) % self.k) for i in range(self.k)}
        return sides | set(self.diagonals)

    @cached_property
    def triangles(self):
        """Triangles as anticlockwise vertex triples (a, b, c), a < b < c."""
        edges = self.edges
        return tuple(
            (a, b, c) for a, b, c in combinations(range(self.k), 3)
            if (a, b) in edges and (b, c) in edges and (a, c) in edges
        )

    def quadrilateral(self, edge):
        """
        ``(x, y, z, t)`` anticlockwise around the diagonal ``edge = (x, z)``:
        y is the apex on the arc from x to z, t the apex on the other side.
        """
        edge = canonical_edge(*edge)
        if edge not in self.diagonals:
            raise NotADiagonal(f"{edge_text(edge)} is not a diagonal of this triangulation.")
        x, z = edge
        apexes = [next(v for v in tri if v not in edge) for tri in self.triangles if x in tri and z in tri]
        y = next(v for v in apexes if x < v < z)
        t = next(v for v in apexes if not x < v < z)
        return x, y, z, t

    def __str__(self):
        return ','.join(edge_text(edge) for edge in self.diagonals)


def triangulation_from_text(k, text):
    """Diagonals written 1-based, e.g. ``"1-3,1-4"``."""
    diagonals = []
    for chunk in filter(None, (part.strip() for part in text.split(','))):
        try:
            u, v = (int(part) - 1 for part in chunk.split('-'))
        except ValueError:
            raise BadTriangulation(f"Cannot read edge {chunk!r}; expected e.g. 1-3.")
        diagonals.append(canonical_edge(u, v))
    return Triangulation(k, tuple(diagonals))


def edge_from_text(text):
    try:
        u, v = (int(part) - 1 for part in text.split('-'))
    except ValueError:
        raise NotADiagonal(f"Cannot read edge {text!r}; expected e.g. 1-3.")
    return canonical_edge(u, v)


def _polygon_triangulations(vertices):
    if len(vertices) < 3:
        return [frozenset()]
    first, last = vertices[0], vertices[-1]
    results = []
    for apex in range(1, len(vertices) - 1):
        here = set()
        if apex > 1:
            here.add((first, vertices[apex]))
        if apex < len(vertices) - 2:
            here.add((vertices[apex], last))
        for left in _polygon_triangulations(vertices[:apex + 1]):
            for right in _polygon_triangulations(vertices[apex:]):
                results.append(frozenset(here) | left | right)
    return results


def enumerate_triangulations(k):
    if not MIN_SIZE <= k <= MAX_SIZE:
        raise UnsupportedSize(f"k must be between {MIN_SIZE} and {MAX_SIZE}, got {k}.")
    found = sorted(tuple(sorted(diagonals)) for diagonals in _polygon_triangulations(list(range(k))))
    return [Triangulation(k, diagonals) for diagonals in found]


def flip(triangulation, edge):
    """Replace the diagonal (x, z) by (y, t); returns ``(T', e')``."""
    x, y, z, t = triangulation.quadrilateral(edge)
    new_edge = canonical_edge(y, t)
    diagonals = [new_edge if d == (x, z) else d for d in triangulation.diagonals]
    return Triangulation(triangulation.k, tuple(diagonals)), new_edge


def flip_graph(k):
    """Adjacency lists over ``enumerate_triangulations(k)``, by list index."""
    triangulations = enumerate_triangulations(k)
    index = {t: i for i, t in enumerate(triangulations)}
    return {
        i: sorted(index[flip(t, e)[0]] for e in t.diagonals)
        for i, t in enumerate(triangulations)
    }


def flip_path(source, target):
    """A shortest list of ``(edge, triangulation after the flip)`` steps from source to target."""
    if source.k != target.k:
        raise BadTriangulation("Both triangulations must belong to the same polygon.")
    previous = {source: None}
    queue = deque([source])
    while queue:
        current = queue.popleft()
        if current == target:
            break
        for edge in current.diagonals:
            neighbour, _ = flip(current, edge)
            if neighbour not in previous:
                previous[neighbour] = (current, edge)
                queue.append(neighbour)
    steps = []
    current = target
    while previous[current] is not None:
        before, edge = previous[current]
        steps.append((edge, current))
        current = before
    steps.reverse()
    logger.debug("flip path of length %d between %s and %s", len(steps), source, target)
    return steps


@dataclass(frozen=True)
class ExchangeMatrix:
    """Sparse antisymmetric matrix on inner edges; missing entries are 0."""

    edges: tuple
    entries: dict

    def __call__(self, e, f):
        return self.entries.get((canonical_edge(*e), canonical_edge(*f)), 0)

    def as_rows(self, order=None):
        order = self.edges if order is None else order
        return [[self(e, f) for f in order] for e in order]


def _orientation(a, b, d, k):
    # +1 when (a, b, d) runs anticlockwise
    return 1 if (b - a) % k < (d - a) % k else -1


def epsilon(triangulation):
    k = triangulation.k
    diagonals = set(triangulation.diagonals)
    entries = {}
    for triangle in triangulation.triangles:
        for a in triangle:
            b, d = (v for v in triangle if v != a)
            e, f = canonical_edge(a, b), canonical_edge(a, d)
            if e in diagonals and f in diagonals:
                value = _orientation(a, b, d, k)
                entries[(e, f)] = entries.get((e, f), 0) + value
                entries[(f, e)] = entries.get((f, e), 0) - value
    entries = {key: value for key, value in entries.items() if value}
    return ExchangeMatrix(triangulation.diagonals, entries)
