"""Affine applications: projection onto a line, Cauchy-Schwarz, barycenters."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Sequence

from core.arrow_ops import add_arrows, scalar_mul
from core.arrows import EUCLIDEAN, Arrow, MetricModel, Point, check_same_dim
from core.equivalence import parallel_transport
from core.errors import (
    DegenerateLine,
    DimensionMismatch,
    DuplicatePoints,
    PathDisagreement,
    WeightSumNotOne,
)
from core.rational import as_rational, format_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProjectionResult:
    """Foot W of the perpendicular from P, its parameter on l_OG, and ||WP||^2."""
    foot: Point
    parameter: Fraction
    residual_sq: Fraction


class CauchySchwarz(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    tight: bool


@dataclass(frozen=True)
class BarycenterSpec:
    points: List[Point]
    weights: List[Fraction]

    def __post_init__(self):
        object.__setattr__(self, "points", list(self.points))
        object.__setattr__(self, "weights", [as_rational(w) for w in self.weights])

    @classmethod
    def of(cls, pairs: Sequence) -> "BarycenterSpec":
        """Build from (point, weight) pairs."""
        return cls([p for p, _ in pairs], [w for _, w in pairs])

    @property
    def is_convex(self) -> bool:
        return all(w >= 0 for w in self.weights)


def project_point(o: Point, g: Point, p: Point, model: MetricModel = EUCLIDEAN) -> ProjectionResult:
    """
    Foot of the perpendicular from p to l_OG.

    t = <OG, OP> / <OG, OG> and W is the head of (t)OG. A point already on the
    line is its own foot.
    """
    check_same_dim(o, g, "points")
    check_same_dim(o, p, "points")
    if o == g:
        raise DegenerateLine(o.label)

    og, op = Arrow(o, g), Arrow(o, p)
    t = model.pre_inner(og, op) / model.measure_sq(og)
    foot = scalar_mul(t, og).head
    return ProjectionResult(
        foot=foot,
        parameter=t,
        residual_sq=model.measure_sq(Arrow(foot, p)),
    )


def distance_sq_to_line(o: Point, g: Point, p: Point, model: MetricModel = EUCLIDEAN) -> Fraction:
    return project_point(o, g, p, model).residual_sq


def cauchy_schwarz(a: Arrow, b: Arrow, model: MetricModel = EUCLIDEAN) -> CauchySchwarz:
    """<a, b>^2 <= ||a||^2 ||b||^2, tight exactly when one is a multiple of the other."""
    check_same_dim(a, b, "arrows")
    ip = model.pre_inner(a, b)
    lhs = ip * ip
    rhs = model.measure_sq(a) * model.measure_sq(b)
    return CauchySchwarz(lhs, rhs, lhs == rhs)


def _validate(spec: BarycenterSpec, origin: Point) -> None:
    if not spec.points or len(spec.points) != len(spec.weights):
        raise ValueError("barycenter needs as many weights as points, and at least one")
    for p in spec.points:
        if p.dim != origin.dim:
            raise DimensionMismatch(origin.dim, p.dim, "origin and point")
    seen = set()
    for p in spec.points:
        if p in seen:
            raise DuplicatePoints(p.label)
        seen.add(p)
    total = sum(spec.weights, Fraction(0))
    if total != 1:
        raise WeightSumNotOne(format_rational(total))


def barycenter_by_transport(spec: BarycenterSpec, origin: Point) -> Point:
    """
    M with [OM] = sum [(l_i) OP_i], built by chaining transports.

    OQ_i = (l_i)OP_i; each OQ_i is transported to the current head R and added
    head to tail, n - 1 times.
    """
    scaled = [scalar_mul(w, Arrow(origin, p)) for p, w in zip(spec.points, spec.weights)]
    running = scaled[0]
    for oq in scaled[1:]:
        step = parallel_transport(oq, running.head).tail_anchored
        running = add_arrows(running, step)
    return running.head


def barycenter_by_displacement(spec: BarycenterSpec, origin: Point) -> Point:
    """M = O + sum l_i (P_i - O)."""
    total = [Fraction(0)] * origin.dim
    for p, w in zip(spec.points, spec.weights):
        for i, d in enumerate(Arrow(origin, p).displacement):
            total[i] += w * d
    return origin.translated(total)


def barycenter(spec: BarycenterSpec, origin: Point) -> Point:
    """The barycenter of spec seen from origin; the answer does not depend on origin."""
    _validate(spec, origin)
    by_transport = barycenter_by_transport(spec, origin)
    by_displacement = barycenter_by_displacement(spec, origin)
    if by_transport != by_displacement:
        logger.error(f"barycenter paths disagree: {by_transport.label} vs {by_displacement.label}")
        raise PathDisagreement("transport and displacement barycenters differ")
    if not spec.is_convex:
        logger.debug("barycenter with negative weights is an affine, not convex, combination")
    return by_transport
