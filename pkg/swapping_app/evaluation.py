import logging
from dataclasses import dataclass
from typing import Optional

from .bracket import bracket_fraction, bracket_poly
from .cross_ratio import cross_fraction
from .determinants import DeterminantSpec, determinant
from .exceptions import DenominatorVanishesInZn
from .expressions import BinOp, Bracket, Cross, Det, Neg, Num, Pair, print_expr
from .fraction_field import SwapFraction
from .polynomials import SwapPoly
from .rank_model import RankModel, check_rank, expand_to_model, is_zero_Zn, normal_form_model

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvalResult:
    """
    Value of an expression. In rank mode (``rank`` set) the normal forms of
    the numerator and denominator images in the model ring are attached.
    """

    expression: str
    points: object
    value: object
    rank: Optional[int] = None
    is_zero: bool = False
    numerator_normal_form: object = None
    denominator_normal_form: object = None

    @property
    def numerator(self):
        return self.value.num if isinstance(self.value, SwapFraction) else self.value

    @property
    def denominator(self):
        if isinstance(self.value, SwapFraction):
            return self.value.den
        return SwapPoly.constant(self.points, 1)


def _lift(left, right):
    if isinstance(left, SwapFraction) or isinstance(right, SwapFraction):
        return SwapFraction.of(left), SwapFraction.of(right)
    return left, right


def evaluate(node, points):
    """Value of ``node`` in Z(P) or, once a division appears, in Q(P)."""
    if isinstance(node, Num):
        return SwapPoly.constant(points, node.value)
    if isinstance(node, Pair):
        return points.pair(node.x, node.y)
    if isinstance(node, Cross):
        return cross_fraction(points, node.x, node.y, node.z, node.t).value
    if isinstance(node, Det):
        return determinant(DeterminantSpec(points, node.xs, node.ys))
    if isinstance(node, Bracket):
        left, right = _lift(evaluate(node.left, points), evaluate(node.right, points))
        if isinstance(left, SwapFraction):
            return bracket_fraction(left, right)
        return bracket_poly(left, right)
    if isinstance(node, Neg):
        return -evaluate(node.operand, points)
    left, right = evaluate(node.left, points), evaluate(node.right, points)
    if node.op == '/':
        return SwapFraction.of(left) / right
    left, right = _lift(left, right)
    if node.op == '+':
        return left + right
    if node.op == '-':
        return left - right
    return left * right


def eval_expr(node, points, rank=None):
    value = evaluate(node, points)
    text = print_expr(node)
    if rank is None:
        numerator = value.num if isinstance(value, SwapFraction) else value
        return EvalResult(text, points, value, is_zero=numerator.is_zero)

    check_rank(rank)
    result = EvalResult(text, points, value, rank)
    model = RankModel.for_points(points, rank)
    if is_zero_Zn(result.denominator, rank):
        raise DenominatorVanishesInZn(f"The denominator of {text} vanishes in rank {rank}.")
    numerator_nf = normal_form_model(expand_to_model(result.numerator, model), model)
    denominator_nf = normal_form_model(expand_to_model(result.denominator, model), model)
    logger.debug("evaluated %s in rank %s", text, rank)
    return EvalResult(
        text, points, value, rank,
        is_zero=not numerator_nf,
        numerator_normal_form=numerator_nf,
        denominator_normal_form=denominator_nf,
    )
