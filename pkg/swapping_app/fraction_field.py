from dataclasses import dataclass
from fractions import Fraction

from .exceptions import DivisionByZero
from .polynomials import SwapPoly


@dataclass(frozen=True, eq=False)
class SwapFraction:
    """
    A formal fraction num/den of Z(P) elements, an element of Q(P).

    Nothing is cancelled. ``==`` decides equality in Q(P) by
    cross-multiplication; equality in Q_n(P) is
    ``rank_model.eq_in_Qn``.
    """

    num: SwapPoly
    den: SwapPoly

    def __post_init__(self):
        self.num._check(self.den)
        if self.den.is_zero:
            raise DivisionByZero(f"Denominator of {self.num}/({self.den}) is zero.")

    @classmethod
    def of(cls, value):
        if isinstance(value, SwapFraction):
            return value
        return cls(value, SwapPoly.constant(value.points, 1))

    @property
    def points(self):
        return self.num.points

    def _coerce(self, other):
        if isinstance(other, SwapFraction):
            return other
        if isinstance(other, SwapPoly):
            return SwapFraction.of(other)
        return SwapFraction.of(SwapPoly.constant(self.points, other))

    def __add__(self, other):
        other = self._coerce(other)
        if self.den == other.den:
            return SwapFraction(self.num + other.num, self.den)
        return SwapFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return SwapFraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return SwapFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def invert(self):
        if self.num.is_zero:
            raise DivisionByZero("Cannot invert a fraction whose numerator is zero.")
        return SwapFraction(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).invert()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, exponent):
        if exponent < 0:
            return self.invert() ** -exponent
        return SwapFraction(self.num ** exponent, self.den ** exponent)

    def cross_difference(self, other):
        """num·other.den − other.num·den; zero iff the fractions agree in Q(P)."""
        other = self._coerce(other)
        return self.num * other.den - other.num * self.den

    def __eq__(self, other):
        if isinstance(other, (SwapFraction, SwapPoly, int, Fraction)):
            return self.cross_difference(other).is_zero
        return NotImplemented

    __hash__ = None

    def __str__(self):
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"SwapFraction({self})"