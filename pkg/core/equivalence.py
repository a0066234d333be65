"""The relation R on arrows, parallel transport, and canonical representatives."""

from dataclasses import dataclass

from core.arrows import EUCLIDEAN, Arrow, MetricModel, Point, check_same_dim
from core.errors import PreconditionViolated


@dataclass(frozen=True)
class TransportResult:
    """PK (tail at P) and K'P (head at P), both related to the source arrow."""
    tail_anchored: Arrow
    head_anchored: Arrow


def related(a: Arrow, b: Arrow, model: MetricModel = EUCLIDEAN) -> bool:
    """
    a R b: both degenerate, or equal measure and normalized product 1.

    Squared form: ||a||^2 = ||b||^2 and <a, b> = ||a||^2.
    """
    check_same_dim(a, b, "arrows")
    if a.is_degenerate and b.is_degenerate:
        return True
    ma = model.measure_sq(a)
    return ma == model.measure_sq(b) and model.pre_inner(a, b) == ma


def parallel_transport(a: Arrow, p: Point) -> TransportResult:
    """Move a so that it starts at p (PK) and so that it ends at p (K'P)."""
    check_same_dim(a, p, "arrow and point")
    if a.is_degenerate:
        return TransportResult(Arrow(p, p), Arrow(p, p))
    d = a.displacement
    k = p.translated(d)
    k_prime = p.translated(tuple(-x for x in d))
    return TransportResult(Arrow(p, k), Arrow(k_prime, p))


def check_axiom4(a: Arrow, b: Arrow, c: Arrow, d: Arrow, model: MetricModel = EUCLIDEAN) -> bool:
    """
    With a R b and c R d, does <a, c> = <b, d> hold?

    Raises:
        PreconditionViolated: a, b or c, d are not related
    """
    if not related(a, b, model):
        raise PreconditionViolated(f"{a.label} and {b.label} are not related")
    if not related(c, d, model):
        raise PreconditionViolated(f"{c.label} and {d.label} are not related")
    return model.pre_inner(a, c) == model.pre_inner(b, d)


def canonical_rep(a: Arrow) -> Arrow:
    """The arrow related to a whose tail is the origin of Q^n."""
    return parallel_transport(a, Point.zero(a.dim)).tail_anchored
