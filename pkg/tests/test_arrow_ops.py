from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from core.arrow_ops import (
    DirectionClass,
    add_arrows,
    checked_mixed_sum,
    direction_relation,
    distributed_sum,
    scalar_mul,
    scale_factor,
    split_scalar_sum,
    sum_chain,
)
from core.arrows import Arrow, Point, measure_sq, negate, pre_inner
from core.errors import UndefinedAddition
from strategies import chains, dim_and, distinct_points, nondegenerate_arrows, rationals


def P(*coords, name=None) -> Point:
    return Point.of(*coords, name=name)


A, B, C, D = P(0, 0, name="A"), P(1, 0, name="B"), P(1, 1, name="C"), P(4, 2, name="D")


# === Addition ===

def test_add_head_to_tail():
    assert add_arrows(Arrow(A, B), Arrow(B, C)) == Arrow(P(0, 0), P(1, 1))


def test_add_is_not_commutative():
    ab, ba = Arrow(A, B), Arrow(B, A)
    assert add_arrows(ab, ba) == Arrow(A, A)
    assert add_arrows(ba, ab) == Arrow(B, B)
    assert add_arrows(ab, ba) != add_arrows(ba, ab)


def test_add_undefined_names_the_points():
    with pytest.raises(UndefinedAddition, match="undefined addition: head B != tail C"):
        add_arrows(Arrow(A, B), Arrow(C, D))


def test_sum_chain():
    assert sum_chain(Arrow(A, B), Arrow(B, C), Arrow(C, A)) == Arrow(A, A)
    with pytest.raises(ValueError):
        sum_chain()


@given(dim_and(lambda d: chains(3, d)))
def test_associativity(case):
    _, (ab, bc, cd) = case
    assert add_arrows(add_arrows(ab, bc), cd) == add_arrows(ab, add_arrows(bc, cd))


# === Scalar multiplication ===

def test_scalar_mul_examples():
    ab = Arrow(P(0, 0), P(3, 4))
    assert scalar_mul(0, ab) == Arrow(P(0, 0), P(0, 0))
    assert scalar_mul(1, ab) == ab
    doubled = scalar_mul(2, ab)
    assert doubled == Arrow(P(0, 0), P(6, 8))
    assert measure_sq(doubled) == 100 == 4 * measure_sq(ab)


def test_scalar_mul_of_degenerate_arrow():
    aa = Arrow(P(2, 3), P(2, 3))
    assert scalar_mul(Fraction(7, 2), aa) == aa


def test_minus_one_is_not_negation():
    ab = Arrow(A, B)
    assert scalar_mul(-1, ab) == Arrow(P(0, 0), P(-1, 0))
    assert scalar_mul(-1, ab) != negate(ab)


@given(dim_and(nondegenerate_arrows), rationals)
def test_scalar_mul_definition(case, t):
    _, ab = case
    ad = scalar_mul(t, ab)
    assert ad.tail == ab.tail
    assert measure_sq(ad) == t * t * measure_sq(ab)
    assert pre_inner(ab, ad) == t * measure_sq(ab)


@given(dim_and(nondegenerate_arrows), rationals, rationals)
def test_scalar_associativity_and_injectivity(case, s, t):
    _, ab = case
    assert scalar_mul(s * t, ab) == scalar_mul(s, scalar_mul(t, ab))
    assert (scalar_mul(s, ab) == scalar_mul(t, ab)) == (s == t)
    assert scale_factor(ab, scalar_mul(t, ab)) == t


def test_scale_factor_rejects_non_multiples():
    with pytest.raises(ValueError):
        scale_factor(Arrow(A, B), Arrow(A, C))
    with pytest.raises(ValueError):
        scale_factor(Arrow(A, A), Arrow(A, B))


# === Direction classes ===

def test_direction_examples():
    ab = Arrow(A, B)
    assert direction_relation(ab, scalar_mul(3, ab)) == DirectionClass.SAME
    assert direction_relation(ab, negate(ab)) == DirectionClass.OPPOSITE
    assert direction_relation(Arrow(P(0, 0), P(1, 0)), Arrow(P(5, 5), P(5, 6))) == DirectionClass.PERPENDICULAR
    assert direction_relation(ab, Arrow(A, C)) == DirectionClass.OBLIQUE
    assert direction_relation(Arrow(A, A), ab) == DirectionClass.PERPENDICULAR


# === Mixed sums ===

def test_distributed_sum_defined_only_at_one():
    ab, bc = Arrow(A, B), Arrow(B, C)
    assert distributed_sum(1, ab, bc) == Arrow(A, C)
    with pytest.raises(UndefinedAddition):
        distributed_sum(2, ab, bc)
    assert checked_mixed_sum(2, ab, bc) == Arrow(P(0, 0), P(2, 2))


@given(dim_and(lambda d: distinct_points(3, d)), rationals)
def test_distributed_sum_undefined_when_ends_move(case, s):
    _, (a, b, c) = case
    assume(s != 1)
    with pytest.raises(UndefinedAddition):
        distributed_sum(s, Arrow(a, b), Arrow(b, c))


@given(dim_and(nondegenerate_arrows), st.tuples(rationals, rationals))
def test_split_scalar_sum(case, scalars):
    _, ab = case
    s, t = scalars
    assert split_scalar_sum(0, t, ab) == scalar_mul(t, ab)
    if s != 0:
        with pytest.raises(UndefinedAddition):
            split_scalar_sum(s, t, ab)
