"""
Cross fractions [x,y,z,t] = (xz/xt)·(yt/yz) and the cross-ratio
conditions they satisfy.
"""

import logging
from dataclasses import dataclass, field
from itertools import permutations, product

from .exceptions import IllegalCrossFraction, InsufficientPoints
from .fraction_field import SwapFraction
from .rank_model import eq_in_Qn, is_zero_Zn

logger = logging.getLogger(__name__)

MAX_WITNESSES = 5


@dataclass(frozen=True)
class CrossFraction:
    x: str
    y: str
    z: str
    t: str
    value: SwapFraction

    def __str__(self):
        return f"cr({self.x},{self.y},{self.z},{self.t})"


def is_legal(x, y, z, t):
    return x != t and y != z


def cross_fraction(points, x, y, z, t):
    for name in (x, y, z, t):
        points.index(name)
    if not is_legal(x, y, z, t):
        raise IllegalCrossFraction(f"[{x},{y},{z},{t}] needs {x} != {t} and {y} != {z}.")
    value = SwapFraction(
        points.pair(x, z) * points.pair(y, t),
        points.pair(x, t) * points.pair(y, z),
    )
    return CrossFraction(x, y, z, t, value)


def _cr(points, *names):
    return cross_fraction(points, *names).value


@dataclass
class IdentityCheck:
    """Outcome of one identity over every tuple it was tried on."""

    name: str
    expected_to_hold: bool = True
    checked: int = 0
    failed: int = 0
    witnesses: list = field(default_factory=list)

    @property
    def holds(self):
        return self.checked > 0 and self.failed == 0

    @property
    def ok(self):
        return self.holds == self.expected_to_hold

    def record(self, names, passed):
        self.checked += 1
        if not passed:
            self.failed += 1
            if len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append(tuple(names))


@dataclass
class CrossRatioReport:
    checks: list

    @property
    def ok(self):
        return all(check.ok for check in self.checks)

    def __getitem__(self, name):
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)


def _equal(points, left, right, rank):
    if rank is None:
        return left == right
    return eq_in_Qn(left, right, rank)


def check_cross_ratio_conditions(points, rank=None):
    """
    Checks symmetry, both normalizations, the two cocycle identities,
    and the second cocycle as it is usually misprinted with a free sixth
    point (expected to fail). Equality is exact in Q(P), or in Q_n(P)
    when ``rank`` is given.
    """
    names = points.names
    if len(names) < 6:
        raise InsufficientPoints(f"The cross-ratio conditions need 6 points, got {len(names)}.")

    symmetry = IdentityCheck('symmetry')
    normal_one = IdentityCheck('normalization_one')
    normal_zero = IdentityCheck('normalization_zero')
    for a, b, c, d in product(names, repeat=4):
        if not is_legal(a, b, c, d):
            continue
        value = _cr(points, a, b, c, d)
        symmetry.record((a, b, c, d), _equal(points, value, _cr(points, b, a, d, c), rank))
        is_one = value.cross_difference(1).is_zero
        normal_one.record((a, b, c, d), is_one == (a == b or c == d))
        is_zero = value.num.is_zero
        normal_zero.record((a, b, c, d), is_zero == (a == c or b == d))

    cocycle = IdentityCheck('cocycle')
    second_cocycle = IdentityCheck('second_cocycle')
    for a, b, c, d, e in permutations(names, 5):
        cocycle.record(
            (a, b, c, d, e),
            _equal(points, _cr(points, a, b, c, d) * _cr(points, a, b, d, e), _cr(points, a, b, c, e), rank),
        )
        second_cocycle.record(
            (a, b, c, d, e),
            _equal(points, _cr(points, a, b, d, e) * _cr(points, b, c, d, e), _cr(points, a, c, d, e), rank),
        )

    printed = IdentityCheck('second_cocycle_as_printed', expected_to_hold=False)
    for a, b, c, d, e, f in permutations(names, 6):
        printed.record(
            (a, b, c, d, e, f),
            _equal(points, _cr(points, a, b, d, e) * _cr(points, b, c, d, e), _cr(points, a, c, e, f), rank),
        )

    report = CrossRatioReport([symmetry, normal_one, normal_zero, cocycle, second_cocycle, printed])
    for check in report.checks:
        if not check.ok:
            logger.warning("cross-ratio identity %s: %d of %d tuples failed", check.name, check.failed, check.checked)
    return report


def check_rank_legal_denominators(points, ranks=(2, 3)):
    """Every legal cross fraction keeps a nonzero denominator in each Z_n(P)."""
    check = IdentityCheck('rank_legal_denominators')
    for n in ranks:
        for x, y, z, t in product(points.names, repeat=4):
            if is_legal(x, y, z, t):
                den = _cr(points, x, y, z, t).den
                check.record((n, x, y, z, t), not is_zero_Zn(den, n))
    return check
