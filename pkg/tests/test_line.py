from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.arrows import Arrow, Point, measure_sq, pre_inner
from core.errors import (
    DegenerateArrow,
    DegenerateBetween,
    DegenerateLine,
    NotCollinear,
    NotOnLine,
)
from core.equivalence import related
from core.line import (
    Line,
    between,
    contains,
    line_eq,
    line_through,
    parallel_on_line,
    parameter_of,
    related_on_line,
)
from strategies import dim_and, distinct_points, rationals

O = Point.of(0, 0)
X_AXIS = line_through(O, Point.of(1, 0))
Y_AXIS = line_through(O, Point.of(0, 1))


def test_line_through_examples():
    assert X_AXIS.gen == Arrow(O, Point.of(1, 0))
    with pytest.raises(DegenerateLine):
        line_through(O, Point.of(0, 0))


def test_line_generator_must_start_at_base():
    with pytest.raises(ValueError):
        Line(O, Arrow(Point.of(1, 1), Point.of(2, 2)))


def test_contains_examples():
    l = line_through(O, Point.of(2, 0))
    assert contains(l, Point.of(5, 0)) == Fraction(5, 2)
    assert contains(l, O) == 0
    assert contains(l, Point.of(1, 1)) is None


def test_between_examples():
    assert between(Point.of(0, 0), Point.of(1, 0), Point.of(2, 0))
    assert not between(Point.of(0, 0), Point.of(2, 0), Point.of(1, 0))
    with pytest.raises(DegenerateBetween):
        between(Point.of(0, 0), Point.of(0, 0), Point.of(1, 0))
    with pytest.raises(NotCollinear):
        between(Point.of(0, 0), Point.of(1, 1), Point.of(2, 0))


def test_parallel_on_line_examples():
    ab = Arrow(O, Point.of(1, 0))
    assert parallel_on_line(X_AXIS, ab, Point.of(3, 0)) == (Point.of(4, 0), Point.of(2, 0))
    k, _ = parallel_on_line(X_AXIS, ab, ab.tail)
    assert k == ab.head
    with pytest.raises(NotOnLine):
        parallel_on_line(X_AXIS, ab, Point.of(3, 1))
    with pytest.raises(DegenerateArrow):
        parallel_on_line(X_AXIS, Arrow(O, O), Point.of(3, 0))


def test_line_eq_examples():
    assert line_eq(X_AXIS, line_through(Point.of(2, 0), Point.of(5, 0)))
    a, b = Point.of(1, 2), Point.of(3, -1)
    l = line_through(a, b)
    m, p = l.point_at(Fraction(7, 3)), l.point_at(-2)
    assert line_eq(l, line_through(m, p))
    assert not line_eq(X_AXIS, Y_AXIS)


def test_related_on_line_requires_points_on_line():
    ab = Arrow(O, Point.of(1, 0))
    assert related_on_line(X_AXIS, ab, Arrow(Point.of(5, 0), Point.of(6, 0)))
    assert not related_on_line(X_AXIS, ab, Arrow(Point.of(6, 0), Point.of(5, 0)))
    with pytest.raises(NotOnLine):
        related_on_line(X_AXIS, ab, Arrow(Point.of(0, 1), Point.of(1, 1)))


@given(dim_and(lambda d: distinct_points(2, d)), rationals)
def test_point_at_and_contains_agree(case, t):
    _, (a, b) = case
    l = line_through(a, b)
    assert contains(l, l.point_at(t)) == t
    assert parameter_of(a, b, l.point_at(t)) == t


@given(dim_and(lambda d: distinct_points(2, d)), st.lists(rationals, min_size=2, max_size=2, unique=True))
def test_plus_minus_one_law(case, params):
    _, (a, b) = case
    l = line_through(a, b)
    ml = Arrow(l.point_at(params[0]), l.point_at(params[1]))
    ip = pre_inner(ml, l.gen)
    assert ip * ip == measure_sq(ml) * measure_sq(l.gen)


@given(dim_and(lambda d: distinct_points(2, d)), st.lists(rationals, min_size=3, max_size=3, unique=True))
def test_betweenness_trichotomy(case, params):
    _, (a, b) = case
    l = line_through(a, b)
    x, y, z = (l.point_at(t) for t in params)
    assert [between(x, y, z), between(y, x, z), between(x, z, y)].count(True) == 1


@given(dim_and(lambda d: distinct_points(2, d)), st.lists(rationals, min_size=3, max_size=3, unique=True))
def test_parallel_on_line_parameters(case, params):
    _, (a, b) = case
    l = line_through(a, b)
    c, d, p = (l.point_at(t) for t in params)
    cd = Arrow(c, d)
    k, k_prime = parallel_on_line(l, cd, p)
    t = parameter_of(c, d, p)
    assert parameter_of(c, d, k) == t + 1
    assert parameter_of(c, d, k_prime) == t - 1
    assert related(cd, Arrow(p, k))
    assert related(cd, Arrow(k_prime, p))


def test_dim_one_every_point_is_on_the_line():
    l = line_through(Point.of(0), Point.of(3))
    assert contains(l, Point.of(-7)) == Fraction(-7, 3)
