"""Seeded random elements of Z(P) for the property suites."""

from fractions import Fraction

from .determinants import DeterminantSpec
from .polynomials import SwapPoly

COEFFICIENTS = (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2))


def random_pair(points, rng):
    return rng.choice(points.pair_vars)


def random_monomial(points, rng, degree):
    result = SwapPoly.constant(points, 1)
    for _ in range(degree):
        var = random_pair(points, rng)
        result = result * points.pair(var.left, var.right)
    return result


def random_element(points, rng, max_degree=3, max_terms=4):
    """A sum of up to ``max_terms`` monomials of degree 1..``max_degree``; may cancel to zero."""
    result = SwapPoly.zero(points)
    for _ in range(rng.randint(1, max_terms)):
        monomial = random_monomial(points, rng, rng.randint(1, max_degree))
        result = result + monomial * rng.choice(COEFFICIENTS)
    return result


def random_spec(points, rng, size):
    """Rows and columns each of ``size`` distinct points."""
    return DeterminantSpec(
        points,
        tuple(rng.sample(points.names, size)),
        tuple(rng.sample(points.names, size)),
    )
