"""Lines as loci of scalar multiples of a nondegenerate arrow.

A line l_AB is the set of heads D with AD = (t)AB for some rational t, so every
point on it has a unique rational parameter.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from core.arrow_ops import scalar_mul
from core.arrows import EUCLIDEAN, Arrow, MetricModel, Point, check_same_dim
from core.errors import (
    DegenerateArrow,
    DegenerateBetween,
    DegenerateLine,
    NotCollinear,
    NotOnLine,
)


@dataclass(frozen=True)
class Line:
    base: Point
    gen: Arrow

    def __post_init__(self):
        if self.gen.tail != self.base:
            raise ValueError("line generator must start at the base point")
        if self.gen.is_degenerate:
            raise DegenerateLine(self.base.label)

    @property
    def dim(self) -> int:
        return self.base.dim

    def point_at(self, t: Fraction) -> Point:
        """Head of (t)gen."""
        return scalar_mul(t, self.gen).head


def line_through(a: Point, b: Point) -> Line:
    check_same_dim(a, b, "points")
    if a == b:
        raise DegenerateLine(a.label)
    return Line(a, Arrow(a, b))


def parameter_of(a: Point, b: Point, d: Point) -> Optional[Fraction]:
    """
    Solve AD = (t)AB for t, componentwise.

    The first nonzero coordinate of B - A fixes t; every other coordinate must
    agree with it.
    """
    gen = Arrow(a, b).displacement
    offset = Arrow(a, d).displacement
    pivot = next(i for i, x in enumerate(gen) if x != 0)
    t = offset[pivot] / gen[pivot]
    if all(o == t * g for o, g in zip(offset, gen)):
        return t
    return None


def contains(l: Line, d: Point) -> Optional[Fraction]:
    """The parameter of d on l, or None when d is off the line."""
    check_same_dim(l, d, "line and point")
    return parameter_of(l.base, l.gen.head, d)


def between(a: Point, b: Point, c: Point, model: MetricModel = EUCLIDEAN) -> bool:
    """
    Is b between a and c?

    Exact form of <BA/||BA||, BC/||BC||> = -1:
    <BA, BC> < 0 and <BA, BC>^2 = ||BA||^2 ||BC||^2.
    """
    check_same_dim(a, b, "points")
    check_same_dim(b, c, "points")
    for x, y in ((a, b), (b, c), (a, c)):
        if x == y:
            raise DegenerateBetween(x.label)
    if contains(line_through(a, c), b) is None:
        raise NotCollinear()

    ba, bc = Arrow(b, a), Arrow(b, c)
    ip = model.pre_inner(ba, bc)
    return ip < 0 and ip * ip == model.measure_sq(ba) * model.measure_sq(bc)


def parallel_on_line(l: Line, ab: Arrow, p: Point) -> Tuple[Point, Point]:
    """
    The points K, K' on l with PK and K'P related to AB.

    With AP = (t)AB, K is the head of (t + 1)AB and K' the head of (t - 1)AB.
    """
    if ab.is_degenerate:
        raise DegenerateArrow(ab.label)
    for point in (ab.tail, ab.head, p):
        if contains(l, point) is None:
            raise NotOnLine(point.label)

    t = parameter_of(ab.tail, ab.head, p)
    k = scalar_mul(t + 1, ab).head
    k_prime = scalar_mul(t - 1, ab).head
    return k, k_prime


def line_eq(l1: Line, l2: Line) -> bool:
    """Same point set: each line's defining points lie on the other."""
    check_same_dim(l1, l2, "lines")
    return all(
        contains(other, point) is not None
        for this, other in ((l1, l2), (l2, l1))
        for point in (this.base, this.gen.head)
    )


def related_on_line(l: Line, a: Arrow, b: Arrow, model: MetricModel = EUCLIDEAN) -> bool:
    """
    The relation R_l, restricted to arrows whose endpoints lie on l.

    Same test as the full-space relation, with the pre-inner product of the
    ambient space restricted to the line.
    """
    for point in (a.tail, a.head, b.tail, b.head):
        if contains(l, point) is None:
            raise NotOnLine(point.label)
    if a.is_degenerate and b.is_degenerate:
        return True
    ma = model.measure_sq(a)
    return ma == model.measure_sq(b) and model.pre_inner(a, b) == ma
