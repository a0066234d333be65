"""The quotient of the arrow space by R: vectors, +_V, scalar action, inner product.

A vector is stored as its canonical displacement. vec_add works on
displacements directly; vec_add_at goes the long way round, through parallel
transport and head-to-tail arrow addition at a chosen point. The two agree
for every transport point, which is what makes +_V well defined.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from core.arrow_ops import add_arrows, scalar_mul
from core.arrows import EUCLIDEAN, Arrow, MetricModel, Point, check_same_dim
from core.equivalence import canonical_rep, parallel_transport
from core.rational import Scalar, as_rational, format_coords


@dataclass(frozen=True)
class Vector:
    """Equivalence class [AB], kept as the head of its representative at the origin."""
    displacement: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.displacement) == 0:
            raise ValueError("a vector needs at least one component")
        object.__setattr__(
            self, "displacement", tuple(as_rational(x) for x in self.displacement)
        )

    @classmethod
    def of(cls, *components: Scalar) -> "Vector":
        return cls(tuple(components))

    @property
    def dim(self) -> int:
        return len(self.displacement)

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.displacement)

    def __str__(self) -> str:
        return format_coords(self.displacement)


def zero_vector(dim: int) -> Vector:
    return Vector(tuple(Fraction(0) for _ in range(dim)))


def to_vector(a: Arrow) -> Vector:
    """[a]."""
    return Vector(canonical_rep(a).head.coords)


def representative(u: Vector, at: Optional[Point] = None) -> Arrow:
    """The arrow of class u whose tail is `at` (the origin by default)."""
    tail = at if at is not None else Point.zero(u.dim)
    check_same_dim(u, tail, "vector and point")
    return Arrow(tail, tail.translated(u.displacement))


def vec_add_at(u: Vector, v: Vector, p: Point) -> Vector:
    """
    [KP +_A PL] = [KL], with KP related to u and PL related to v.

    Representatives of u and v are transported to meet at p, then added head
    to tail.
    """
    check_same_dim(u, v, "vectors")
    check_same_dim(u, p, "vector and point")
    kp = parallel_transport(representative(u), p).head_anchored
    pl = parallel_transport(representative(v), p).tail_anchored
    return to_vector(add_arrows(kp, pl))


def vec_add(u: Vector, v: Vector) -> Vector:
    check_same_dim(u, v, "vectors")
    return Vector(tuple(x + y for x, y in zip(u.displacement, v.displacement)))


def vec_scalar_mul(t: Scalar, u: Vector) -> Vector:
    """t[AB] = [(t)AB]."""
    return to_vector(scalar_mul(t, representative(u)))


def vec_inner(u: Vector, v: Vector, model: MetricModel = EUCLIDEAN) -> Fraction:
    """<[AB], [CD]>_V = <AB, CD>_A for any representatives."""
    check_same_dim(u, v, "vectors")
    return model.pre_inner(representative(u), representative(v))


def vec_neg(u: Vector) -> Vector:
    """[-AB] = [BA]."""
    return Vector(tuple(-x for x in u.displacement))


def vec_sum(vectors: Iterable[Vector], at: Optional[Point] = None) -> Vector:
    """Sum by repeated vec_add_at at `at` (the origin by default)."""
    vectors = list(vectors)
    if not vectors:
        raise ValueError("vec_sum needs at least one vector")
    total = vectors[0]
    point = at if at is not None else Point.zero(total.dim)
    for v in vectors[1:]:
        total = vec_add_at(total, v, point)
    return total
