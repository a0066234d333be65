"""Points, arrows and the pre-inner product models.

A point is an element of Q^n, an arrow an ordered (tail, head) pair of points
of one space. The pre-inner product is supplied by a MetricModel; the shipped
model is the Euclidean dot product of displacements.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from core.errors import DimensionMismatch
from core.rational import Scalar, as_rational, format_coords


@dataclass(frozen=True)
class Point:
    """Element of Q^n. The optional name is a label and never takes part in equality."""
    coords: Tuple[Fraction, ...]
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.coords) == 0:
            raise ValueError("a point needs at least one coordinate")
        object.__setattr__(self, "coords", tuple(as_rational(c) for c in self.coords))

    @classmethod
    def of(cls, *coords: Scalar, name: Optional[str] = None) -> "Point":
        return cls(tuple(coords), name)

    @classmethod
    def zero(cls, dim: int) -> "Point":
        return cls(tuple(Fraction(0) for _ in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def label(self) -> str:
        return self.name if self.name else format_coords(self.coords)

    def translated(self, displacement: Sequence[Fraction]) -> "Point":
        return Point(tuple(c + d for c, d in zip(self.coords, displacement)))


@dataclass(frozen=True)
class Arrow:
    """Ordered pair of points <tail, head>."""
    tail: Point
    head: Point

    def __post_init__(self):
        if self.tail.dim != self.head.dim:
            raise DimensionMismatch(self.tail.dim, self.head.dim, "tail and head")

    @property
    def dim(self) -> int:
        return self.tail.dim

    @property
    def is_degenerate(self) -> bool:
        return self.tail == self.head

    @property
    def displacement(self) -> Tuple[Fraction, ...]:
        return tuple(h - t for t, h in zip(self.tail.coords, self.head.coords))

    @property
    def label(self) -> str:
        if self.tail.name and self.head.name:
            return f"{self.tail.name}{self.head.name}"
        return f"{self.tail.label} -> {self.head.label}"


def check_same_dim(a, b, what: str = "operands") -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(a.dim, b.dim, what)


class MetricModel(ABC):
    """
    A pre-inner product on the arrow space.

    Implementations must satisfy positive definiteness, symmetry, head-to-tail
    additivity, the negation rule and scalar linearity, and must pass the
    harness axiom suite (including the related-pairs and transport checks)
    before anything else is built on them.
    """

    name = "abstract"

    @abstractmethod
    def pre_inner(self, a: Arrow, b: Arrow) -> Fraction:
        """<a, b>_A for two arrows of the same dimension."""

    def measure_sq(self, a: Arrow) -> Fraction:
        return self.pre_inner(a, a)


class EuclideanRational(MetricModel):
    """Dot product of displacements on Q^n."""

    name = "euclidean"

    def pre_inner(self, a: Arrow, b: Arrow) -> Fraction:
        check_same_dim(a, b, "arrows")
        return sum(
            (x * y for x, y in zip(a.displacement, b.displacement)),
            Fraction(0),
        )

    def __repr__(self) -> str:
        return "EuclideanRational()"


class WeightedRational(MetricModel):
    """Diagonal form sum_i w_i (B_i - A_i)(D_i - C_i) with every weight positive."""

    name = "weighted"

    def __init__(self, weights: Sequence[Scalar]):
        self.weights = tuple(as_rational(w) for w in weights)
        if not self.weights or any(w <= 0 for w in self.weights):
            raise ValueError("weights must be a nonempty list of positive rationals")

    def pre_inner(self, a: Arrow, b: Arrow) -> Fraction:
        check_same_dim(a, b, "arrows")
        if a.dim != len(self.weights):
            raise DimensionMismatch(len(self.weights), a.dim, "weights and arrows")
        return sum(
            (w * x * y for w, x, y in zip(self.weights, a.displacement, b.displacement)),
            Fraction(0),
        )

    def __repr__(self) -> str:
        return f"WeightedRational({[str(w) for w in self.weights]})"


EUCLIDEAN = EuclideanRational()


# === Operations ===

def point_eq(a: Point, b: Point) -> bool:
    """True iff the points coincide coordinate by coordinate."""
    check_same_dim(a, b, "points")
    return a.coords == b.coords


def pre_inner(a: Arrow, b: Arrow, model: MetricModel = EUCLIDEAN) -> Fraction:
    return model.pre_inner(a, b)


def measure_sq(a: Arrow, model: MetricModel = EUCLIDEAN) -> Fraction:
    """Squared measure ||a||_A^2; zero exactly for degenerate arrows."""
    return model.measure_sq(a)


def negate(a: Arrow) -> Arrow:
    """-AB = BA."""
    return Arrow(a.head, a.tail)


def is_unit(a: Arrow, model: MetricModel = EUCLIDEAN) -> bool:
    return model.measure_sq(a) == 1
