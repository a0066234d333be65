import pytest
from hypothesis import given

from core.arrow_ops import scalar_mul
from core.arrows import Arrow, Point, measure_sq
from core.equivalence import canonical_rep, check_axiom4, parallel_transport, related
from core.errors import PreconditionViolated
from core.line import line_through
from strategies import arrows, dim_and, nondegenerate_arrows, points, rationals


def arrow(tail, head) -> Arrow:
    return Arrow(Point.of(*tail), Point.of(*head))


def test_related_examples():
    assert related(arrow((1, 1), (1, 1)), arrow((3, 4), (3, 4)))
    assert related(arrow((0, 0), (1, 0)), arrow((5, 5), (6, 5)))
    assert not related(arrow((0, 0), (1, 0)), arrow((0, 0), (0, 1)))
    assert not related(arrow((0, 0), (1, 0)), arrow((0, 0), (2, 0)))


def test_parallel_transport_examples():
    a = arrow((0, 0), (1, 2))
    moved = parallel_transport(a, Point.of(10, 10))
    assert moved.tail_anchored == arrow((10, 10), (11, 12))
    assert moved.head_anchored == arrow((9, 8), (10, 10))
    assert related(a, moved.tail_anchored) and related(a, moved.head_anchored)
    assert parallel_transport(a, a.tail).tail_anchored == a


def test_parallel_transport_of_degenerate_arrow():
    p = Point.of(3, -1)
    moved = parallel_transport(arrow((2, 2), (2, 2)), p)
    assert moved.tail_anchored == moved.head_anchored == Arrow(p, p)


def test_canonical_rep_examples():
    assert canonical_rep(arrow((5, 5), (6, 7))) == arrow((0, 0), (1, 2))
    assert canonical_rep(arrow((5, 5), (5, 5))) == arrow((0, 0), (0, 0))


def test_check_axiom4_examples():
    a, c = arrow((0, 0), (1, 2)), arrow((1, 1), (4, 0))
    assert check_axiom4(a, a, c, c)
    b = parallel_transport(a, Point.of(-3, 7)).tail_anchored
    d = parallel_transport(c, Point.of(2, 2)).head_anchored
    assert check_axiom4(a, b, c, d)


def test_check_axiom4_on_a_line():
    l = line_through(Point.of(0, 0), Point.of(2, 1))
    ab = Arrow(l.point_at(1), l.point_at(3))
    ef = Arrow(l.point_at(-4), l.point_at(-2))
    cd = Arrow(l.point_at(5), l.point_at(0))
    gh = Arrow(l.point_at(10), l.point_at(5))
    assert check_axiom4(ab, ef, cd, gh)


def test_check_axiom4_requires_related_pairs():
    with pytest.raises(PreconditionViolated):
        check_axiom4(arrow((0, 0), (1, 0)), arrow((0, 0), (0, 1)), arrow((0, 0), (1, 0)), arrow((0, 0), (1, 0)))


@given(dim_and(arrows))
def test_reflexive(case):
    _, a = case
    assert related(a, a)


@given(dim_and(lambda d: arrows(d).flatmap(lambda a: points(d).flatmap(
    lambda p: points(d).map(lambda q: (a, p, q))))))
def test_symmetric_and_transitive(case):
    _, (a, p, q) = case
    b = parallel_transport(a, p).tail_anchored
    c = parallel_transport(b, q).head_anchored
    assert related(a, b) and related(b, a)
    assert related(b, c) and related(a, c)


@given(dim_and(lambda d: arrows(d).flatmap(lambda a: points(d).map(lambda p: (a, p)))), rationals)
def test_scaling_compatibility(case, t):
    _, (a, p) = case
    b = parallel_transport(a, p).tail_anchored
    assert related(scalar_mul(t, a), scalar_mul(t, b))


@given(dim_and(lambda d: nondegenerate_arrows(d).flatmap(lambda a: points(d).map(lambda p: (a, p)))))
def test_degenerate_arrows_only_relate_to_degenerate(case):
    _, (a, p) = case
    assert not related(Arrow(p, p), a)


@given(dim_and(arrows))
def test_canonical_rep_is_related_and_idempotent(case):
    dim, a = case
    rep = canonical_rep(a)
    assert rep.tail == Point.zero(dim)
    assert related(a, rep)
    assert canonical_rep(rep) == rep
    assert measure_sq(rep) == measure_sq(a)
