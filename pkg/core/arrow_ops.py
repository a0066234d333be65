"""Partial arrow addition, constructive scalar multiplication, direction classes.

Arrow addition is only defined head-to-tail; the failures are part of the
contract (UndefinedAddition), not edge cases.
"""

import logging
from enum import Enum
from fractions import Fraction

from core.arrows import EUCLIDEAN, Arrow, MetricModel, check_same_dim
from core.errors import UndefinedAddition
from core.rational import Scalar, as_rational

logger = logging.getLogger(__name__)


class DirectionClass(str, Enum):
    SAME = "same"
    OPPOSITE = "opposite"
    PERPENDICULAR = "perpendicular"
    OBLIQUE = "oblique"
    DEGENERATE = "degenerate"


def add_arrows(a: Arrow, b: Arrow) -> Arrow:
    """AB +_A BC = AC. Raises UndefinedAddition when a.head != b.tail."""
    check_same_dim(a, b, "arrows")
    if a.head != b.tail:
        raise UndefinedAddition(a.head.label, b.tail.label)
    return Arrow(a.tail, b.head)


def scalar_mul(t: Scalar, a: Arrow) -> Arrow:
    """
    (t)AB = AD with D = A + t(B - A).

    The zero scalar and the degenerate arrow both give AA. Otherwise
    ||AD||^2 = t^2 ||AB||^2 and <AB, AD> = t ||AB||^2, whose sign is the sign of t.
    """
    t = as_rational(t)
    if t == 0 or a.is_degenerate:
        return Arrow(a.tail, a.tail)
    head = a.tail.translated(tuple(t * d for d in a.displacement))
    return Arrow(a.tail, head)


def direction_relation(a: Arrow, b: Arrow, model: MetricModel = EUCLIDEAN) -> DirectionClass:
    """Classify the pair by the sign and size of the normalized pre-inner product."""
    check_same_dim(a, b, "arrows")
    ip = model.pre_inner(a, b)
    if ip == 0:
        return DirectionClass.PERPENDICULAR
    if a.is_degenerate or b.is_degenerate:
        # unreachable for a valid model: <AA, CD> = 0
        return DirectionClass.DEGENERATE
    if ip * ip == model.measure_sq(a) * model.measure_sq(b):
        return DirectionClass.SAME if ip > 0 else DirectionClass.OPPOSITE
    return DirectionClass.OBLIQUE


def checked_mixed_sum(s: Scalar, a: Arrow, b: Arrow) -> Arrow:
    """(s)(a +_A b); raises UndefinedAddition when a and b do not meet."""
    return scalar_mul(s, add_arrows(a, b))


def distributed_sum(s: Scalar, a: Arrow, b: Arrow) -> Arrow:
    """
    (s)a +_A (s)b.

    Scaling moves the head of a away from the tail of b unless s = 1, so for
    distinct A, B, C this raises UndefinedAddition.
    """
    return add_arrows(scalar_mul(s, a), scalar_mul(s, b))


def split_scalar_sum(s: Scalar, t: Scalar, a: Arrow) -> Arrow:
    """
    (s)a +_A (t)a.

    Both terms share the tail of a, so the sum exists only when (s)a is
    degenerate, i.e. s = 0 or a degenerate; it then equals (s + t)a.
    """
    return add_arrows(scalar_mul(s, a), scalar_mul(t, a))


def sum_chain(*arrows: Arrow) -> Arrow:
    """Left fold of add_arrows over a head-to-tail chain."""
    if not arrows:
        raise ValueError("sum_chain needs at least one arrow")
    total = arrows[0]
    for nxt in arrows[1:]:
        total = add_arrows(total, nxt)
    return total


def scale_factor(a: Arrow, b: Arrow) -> Fraction:
    """The t with b = (t)a for a nondegenerate a sharing b's tail, else ValueError."""
    if a.is_degenerate or a.tail != b.tail:
        raise ValueError("scale_factor needs a nondegenerate arrow sharing the tail")
    da, db = a.displacement, b.displacement
    i = next(k for k, x in enumerate(da) if x != 0)
    t = db[i] / da[i]
    if scalar_mul(t, a) != b:
        raise ValueError("arrows are not scalar multiples")
    logger.debug(f"scale factor {t} between {a.label} and {b.label}")
    return t
