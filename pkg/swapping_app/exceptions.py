"""
Errors raised by the swapping algebra.

All of them are DRF ``APIException`` subclasses, so ``detail`` and
``get_codes()`` come from DRF. The management commands turn them into
``CommandError`` with exit code 2.
"""

from rest_framework.exceptions import APIException


class SwapAlgebraError(APIException):
    default_detail = 'Swapping algebra error.'
    default_code = 'error'


class DuplicatePoint(SwapAlgebraError):
    default_detail = 'Point names must be pairwise distinct.'
    default_code = 'duplicate_point'


class UnknownPoint(SwapAlgebraError):
    default_detail = 'Point is not in the point set.'
    default_code = 'unknown_point'


class DegeneratePair(SwapAlgebraError):
    default_detail = 'A pair variable needs two different endpoints; xx is zero.'
    default_code = 'degenerate_pair'


class PointSetMismatch(SwapAlgebraError):
    default_detail = 'Operands live over different point sets.'
    default_code = 'point_set_mismatch'


class DivisionByZero(SwapAlgebraError):
    default_detail = 'Division by the zero polynomial.'
    default_code = 'division_by_zero'


class BadSpec(SwapAlgebraError):
    default_detail = 'Malformed determinant specification.'
    default_code = 'bad_spec'


class BadModel(SwapAlgebraError):
    default_detail = 'Point index outside of the rank model.'
    default_code = 'bad_model'


class BadTrialCount(SwapAlgebraError):
    default_detail = 'The random zero test needs at least one trial.'
    default_code = 'bad_trial_count'


class UnsupportedRank(SwapAlgebraError):
    default_detail = 'Rank must be at least 2; Z_1(P) is not an integral domain.'
    default_code = 'unsupported_rank'


class DenominatorVanishesInZn(SwapAlgebraError):
    default_detail = 'Denominator is zero in the rank n swapping ring.'
    default_code = 'denominator_vanishes'


class IllegalCrossFraction(SwapAlgebraError):
    default_detail = 'A cross fraction [x,y,z,t] needs x != t and y != z.'
    default_code = 'illegal_cross_fraction'


class InsufficientPoints(SwapAlgebraError):
    default_detail = 'Not enough points for this check.'
    default_code = 'insufficient_points'


class ParseError(SwapAlgebraError):
    """Carries the 1-based ``line`` and ``column`` of the offending token."""
    default_detail = 'Syntax error.'
    default_code = 'parse_error'

    def __init__(self, detail=None, line=1, column=1):
        self.line = line
        self.column = column
        super().__init__(detail)

    def __str__(self):
        return f"line {self.line}, column {self.column}: {self.detail}"
