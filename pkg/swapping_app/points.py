from dataclasses import dataclass, field
from functools import cached_property

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

from .exceptions import DegeneratePair, DuplicatePoint, UnknownPoint
from .polynomials import SwapPoly


@dataclass(frozen=True)
class PairVar:
    """The ordered pair variable ``xy``; ``yx`` is a different variable."""

    left: str
    right: str

    def __post_init__(self):
        if self.left == self.right:
            raise DegeneratePair(f"p({self.left},{self.right}) is zero, not a variable.")

    def __str__(self):
        return f"p({self.left},{self.right})"


@dataclass(frozen=True)
class PointSet:
    """
    A finite set of named points on the circle, listed anticlockwise.

    The polynomial ring Z(P) hangs off the point set: one generator per
    ordered pair of distinct points, ordered by (left position, right
    position), with graded lex on monomials.
    """

    names: tuple
    position: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        names = tuple(self.names)
        if not names:
            raise DuplicatePoint("A point set needs at least one point.")
        position = {}
        for index, name in enumerate(names):
            if name in position:
                raise DuplicatePoint(f"Point {name!r} appears twice.")
            position[name] = index
        object.__setattr__(self, 'names', names)
        object.__setattr__(self, 'position', position)

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self.position

    def index(self, name):
        try:
            return self.position[name]
        except KeyError:
            raise UnknownPoint(f"Unknown point {name!r}; known points: {', '.join(self.names)}.")

    def rotate(self, k):
        """Same cyclic order, index origin moved forward by ``k``."""
        k %= len(self.names)
        return PointSet(self.names[k:] + self.names[:k])

    @cached_property
    def pair_vars(self):
        return tuple(
            PairVar(left, right)
            for left in self.names
            for right in self.names
            if left != right
        )

    @cached_property
    def generator_index(self):
        return {(var.left, var.right): i for i, var in enumerate(self.pair_vars)}

    @cached_property
    def ring(self):
        symbols = [Symbol(str(var)) for var in self.pair_vars]
        return PolyRing(symbols, QQ, grlex)

    def var_index(self, left, right):
        self.index(left)
        self.index(right)
        if left == right:
            raise DegeneratePair(f"p({left},{right}) is zero, not a variable.")
        return self.generator_index[(left, right)]

    def pair(self, x, y):
        """The generator ``xy`` of Z(P); ``xx`` is the zero polynomial."""
        self.index(x)
        self.index(y)
        if x == y:
            return SwapPoly.zero(self)
        return SwapPoly(self, self.ring.gens[self.generator_index[(x, y)]])


def make_point_set(names):
    return PointSet(tuple(names))


def point_set_of_size(m):
    return PointSet(tuple(f"x{i}" for i in range(m)))
