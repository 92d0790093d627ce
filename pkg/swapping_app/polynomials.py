from dataclasses import dataclass
from fractions import Fraction

from sympy.polys.domains import QQ

from .exceptions import PointSetMismatch


def to_coefficient(value):
    """Exact rational coefficient from an int, a Fraction or a QQ element."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


def coefficient_text(c):
    num, den = int(c.numerator), int(c.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


@dataclass(frozen=True, eq=False)
class SwapPoly:
    """
    An element of Z(P): a sparse polynomial with exact rational
    coefficients in the pair variables of ``points``.

    ``poly`` is a sympy ``PolyElement`` of ``points.ring``; it is never
    mutated after construction.
    """

    points: object
    poly: object

    @classmethod
    def zero(cls, points):
        return cls(points, points.ring.zero)

    @classmethod
    def constant(cls, points, value):
        return cls(points, points.ring.ground_new(to_coefficient(value)))

    def _check(self, other):
        if self.points != other.points:
            raise PointSetMismatch(
                f"Cannot combine polynomials over {self.points.names} and {other.points.names}.")

    def _coerce(self, other):
        if isinstance(other, SwapPoly):
            self._check(other)
            return other
        return SwapPoly.constant(self.points, other)

    def __add__(self, other):
        other = self._coerce(other)
        return SwapPoly(self.points, self.poly + other.poly)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return SwapPoly(self.points, self.poly - other.poly)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, SwapPoly):
            self._check(other)
            return SwapPoly(self.points, self.poly * other.poly)
        return self.scalar_mul(other)

    __rmul__ = __mul__

    def __neg__(self):
        return SwapPoly(self.points, -self.poly)

    def __pow__(self, exponent):
        return SwapPoly(self.points, self.poly ** exponent)

    def scalar_mul(self, value):
        return SwapPoly(self.points, self.poly * to_coefficient(value))

    def __eq__(self, other):
        if isinstance(other, SwapPoly):
            self._check(other)
            return self.poly == other.poly
        if isinstance(other, (int, Fraction)):
            return self.poly == self.points.ring.ground_new(to_coefficient(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.points, self.poly))

    def __bool__(self):
        return bool(self.poly)

    @property
    def is_zero(self):
        return not self.poly

    def __len__(self):
        return len(self.poly)

    def terms(self):
        """(monomial, coefficient) pairs in the ring's canonical order, highest first."""
        return self.poly.terms()

    def variables(self):
        """Indices of the generators that occur in the polynomial."""
        seen = set()
        for monom in self.poly.itermonoms():
            seen.update(i for i, e in enumerate(monom) if e)
        return sorted(seen)

    def factors(self, monom):
        """The pair variables of a monomial, repeated by multiplicity."""
        pair_vars = self.points.pair_vars
        return [pair_vars[i] for i, e in enumerate(monom) for _ in range(e)]

    def term_map(self):
        """Name-keyed view of the terms, comparable across point sets."""
        pair_vars = self.points.pair_vars
        return {
            tuple(sorted(((pair_vars[i].left, pair_vars[i].right), e)
                         for i, e in enumerate(monom) if e)): coeff
            for monom, coeff in self.poly.iterterms()
        }

    def canonical_text(self):
        if not self.poly:
            return "0"
        chunks = []
        for monom, coeff in self.terms():
            factors = [str(var) for var in self.factors(monom)]
            sign = '-' if coeff < 0 else '+'
            magnitude = -coeff if coeff < 0 else coeff
            if not factors:
                body = coefficient_text(magnitude)
            elif magnitude == 1:
                body = '*'.join(factors)
            else:
                body = '*'.join([coefficient_text(magnitude)] + factors)
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.canonical_text()

    def __repr__(self):
        return f"SwapPoly({self.canonical_text()})"
