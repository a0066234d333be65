"""Seeded random points, arrows and scalars for the harness.

Every trial gets its own `random.Random` seeded from (seed, check name, trial
index), so trials are independent and can run in any order or in parallel.
Chains are sampled point by point, which makes every head-to-tail instance
well formed without rejection.
"""

import random
from fractions import Fraction
from typing import List

from core.arrows import Arrow, Point
from core.line import Line, line_through


def trial_rng(seed: int, check: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{check}:{index}")


class TrialGenerator:
    """Random exact objects of one dimension with bounded numerators and denominators."""

    def __init__(self, rng: random.Random, dim: int, coord_bound: int, denom_bound: int):
        self.rng = rng
        self.dim = dim
        self.coord_bound = coord_bound
        self.denom_bound = denom_bound

    def rational(self) -> Fraction:
        return Fraction(
            self.rng.randint(-self.coord_bound, self.coord_bound),
            self.rng.randint(1, self.denom_bound),
        )

    def nonzero_rational(self) -> Fraction:
        q = self.rational()
        return q if q != 0 else Fraction(self.rng.choice((-1, 1)), self.rng.randint(1, self.denom_bound))

    def point(self) -> Point:
        return Point(tuple(self.rational() for _ in range(self.dim)))

    def points(self, n: int) -> List[Point]:
        return [self.point() for _ in range(n)]

    def distinct_points(self, n: int) -> List[Point]:
        """n pairwise distinct points; a collision is nudged along the first axis."""
        chosen: List[Point] = []
        for _ in range(n):
            p = self.point()
            while p in chosen:
                p = p.translated((Fraction(1),) + (Fraction(0),) * (self.dim - 1))
            chosen.append(p)
        return chosen

    def distinct_rationals(self, n: int) -> List[Fraction]:
        chosen: List[Fraction] = []
        for _ in range(n):
            q = self.rational()
            while q in chosen:
                q += 1
            chosen.append(q)
        return chosen

    def arrow(self) -> Arrow:
        return Arrow(self.point(), self.point())

    def nondegenerate_arrow(self) -> Arrow:
        a, b = self.distinct_points(2)
        return Arrow(a, b)

    def maybe_degenerate_arrow(self, chance: float = 0.1) -> Arrow:
        """Mostly generic arrows, with an explicit share of degenerate ones."""
        if self.rng.random() < chance:
            p = self.point()
            return Arrow(p, p)
        return self.arrow()

    def line(self) -> Line:
        a, b = self.distinct_points(2)
        return line_through(a, b)

    def points_on(self, l: Line, n: int) -> List[Point]:
        """n distinct points of l at distinct random parameters."""
        return [l.point_at(t) for t in self.distinct_rationals(n)]

    def chain(self, n: int) -> List[Point]:
        """Consecutive points P_0 .. P_n of a head-to-tail chain of n arrows."""
        return self.points(n + 1)
