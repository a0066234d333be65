"""Named axiom and theorem checks.

A check is a sampler, which draws a witness (a dict of points, scalars and
lists of them) from a TrialGenerator, and a predicate over that witness. The
witness holds only raw points and scalars, so the harness can shrink a failing
one coordinate by coordinate and re-run the predicate on it.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Dict, List, Tuple

from core.affine import (
    BarycenterSpec,
    barycenter,
    barycenter_by_displacement,
    barycenter_by_transport,
    cauchy_schwarz,
    project_point,
)
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
from core.arrows import Arrow, MetricModel, Point, negate
from core.equivalence import canonical_rep, check_axiom4, parallel_transport, related
from core.errors import UndefinedAddition
from core.generators import TrialGenerator
from core.line import (
    between,
    contains,
    line_eq,
    line_through,
    parallel_on_line,
    parameter_of,
    related_on_line,
)
from core.vector_space import (
    Vector,
    to_vector,
    vec_add,
    vec_add_at,
    vec_inner,
    vec_neg,
    vec_scalar_mul,
    zero_vector,
)

Witness = Dict[str, Any]


@dataclass(frozen=True)
class CheckContext:
    model: MetricModel
    # desk-scale rational parameter grid used by the uniqueness checks
    grid: Tuple[Fraction, ...]


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    sample: Callable[[TrialGenerator], Witness]
    holds: Callable[[Witness, CheckContext], bool]


class CheckSuite:
    """Registry of checks, filled through the `check` decorator."""

    def __init__(self, name: str):
        self.name = name
        self.checks: Dict[str, Check] = {}

    def check(self, name: str, sample: Callable[[TrialGenerator], Witness]):
        def decorator(fn: Callable[[Witness, CheckContext], bool]):
            if name in self.checks:
                raise ValueError(f"duplicate check name {name}")
            self.checks[name] = Check(name, self.name, sample, fn)
            return fn
        return decorator

    def names(self) -> List[str]:
        return sorted(self.checks)


AXIOM_SUITE = CheckSuite("axiom")
THEOREM_SUITE = CheckSuite("theorem")


def _vec(p: Point) -> Vector:
    return Vector(p.coords)


def _sum_of_lengths(total: Fraction, first: Fraction, second: Fraction) -> bool:
    """sqrt(total) = sqrt(first) + sqrt(second), from squared measures only."""
    gap = total - first - second
    return gap >= 0 and gap * gap == 4 * first * second


def _proportional(a: Arrow, b: Arrow) -> bool:
    """Displacements are linearly dependent (every 2x2 minor vanishes)."""
    da, db = a.displacement, b.displacement
    return all(da[i] * db[j] == da[j] * db[i] for i, j in combinations(range(len(da)), 2))


# === Samplers ===

def arrow_witness(gen: TrialGenerator) -> Witness:
    a = gen.maybe_degenerate_arrow()
    return {"A": a.tail, "B": a.head}


def arrow_pair_witness(gen: TrialGenerator) -> Witness:
    a, b = gen.maybe_degenerate_arrow(), gen.maybe_degenerate_arrow()
    return {"A": a.tail, "B": a.head, "C": b.tail, "D": b.head}


def scaled_pair_witness(gen: TrialGenerator) -> Witness:
    w = arrow_pair_witness(gen)
    w.update(s=gen.rational(), t=gen.rational())
    return w


def chain_and_arrow_witness(gen: TrialGenerator) -> Witness:
    a, b, c = gen.chain(2)
    d, e = gen.points(2)
    return {"A": a, "B": b, "C": c, "D": d, "E": e}


def two_chains_witness(gen: TrialGenerator) -> Witness:
    a, b, c = gen.chain(2)
    l, m, r = gen.chain(2)
    return {"A": a, "B": b, "C": c, "L": l, "M": m, "R": r}


def related_pairs_witness(gen: TrialGenerator) -> Witness:
    w = arrow_pair_witness(gen)
    w.update(P=gen.point(), Q=gen.point())
    return w


def transport_witness(gen: TrialGenerator) -> Witness:
    a, b = gen.distinct_points(2)
    return {"A": a, "B": b, "P": gen.point(), "X": gen.point()}


def distinct_pair_witness(gen: TrialGenerator) -> Witness:
    a, b = gen.distinct_points(2)
    return {"A": a, "B": b}


def distinct_triple_witness(gen: TrialGenerator) -> Witness:
    a, b, c = gen.distinct_points(3)
    return {"A": a, "B": b, "C": c, "s": gen.rational()}


def four_points_witness(gen: TrialGenerator) -> Witness:
    a, b, c, d = gen.points(4)
    return {"A": a, "B": b, "C": c, "D": d}


def two_scalars_witness(gen: TrialGenerator) -> Witness:
    w = arrow_witness(gen)
    w.update(s=gen.rational(), t=gen.rational())
    return w


def injectivity_witness(gen: TrialGenerator) -> Witness:
    w = distinct_pair_witness(gen)
    a = gen.rational()
    w.update(a=a, b=a if gen.rng.random() < 0.3 else gen.rational())
    return w


def line_params_witness(gen: TrialGenerator) -> Witness:
    """A line through A, B and distinct parameters s, t, u, v on it."""
    w = distinct_pair_witness(gen)
    s, t, u, v = gen.distinct_rationals(4)
    w.update(s=s, t=t, u=u, v=v)
    return w


def membership_witness(gen: TrialGenerator) -> Witness:
    a, b = gen.distinct_points(2)
    if gen.rng.random() < 0.5:
        d = line_through(a, b).point_at(gen.rational())
    else:
        d = gen.point()
    return {"A": a, "B": b, "D": d}


def off_line_witness(gen: TrialGenerator) -> Witness:
    w = line_params_witness(gen)
    w["X"] = gen.point()
    return w


def composite_witness(gen: TrialGenerator) -> Witness:
    k, p, l = gen.distinct_points(3)
    return {"K": k, "P": p, "L": l, "Q": gen.point()}


def uniqueness_witness(gen: TrialGenerator) -> Witness:
    a, b = gen.distinct_points(2)
    origin = Point.zero(gen.dim)
    direction = gen.point()
    while direction == origin:
        direction = gen.point()
    return {"A": a, "B": b, "P": gen.point(), "W": direction}


def vectors_witness(gen: TrialGenerator) -> Witness:
    return {
        "u": gen.point(), "v": gen.point(), "w": gen.point(),
        "s": gen.rational(), "t": gen.rational(),
        "P": gen.point(), "Q": gen.point(),
    }


def projection_witness(gen: TrialGenerator) -> Witness:
    o, g = gen.distinct_points(2)
    return {"O": o, "G": g, "P": gen.point()}


def tight_pair_witness(gen: TrialGenerator) -> Witness:
    w = arrow_witness(gen)
    w.update(C=gen.point(), s=gen.rational())
    return w


def barycenter_witness(gen: TrialGenerator) -> Witness:
    n = gen.rng.randint(1, 6)
    weights = [gen.rational() for _ in range(n - 1)]
    weights.append(1 - sum(weights, Fraction(0)))
    return {
        "points": gen.distinct_points(n),
        "weights": weights,
        "origins": gen.points(20),
    }


# === Axiom suite ===

@AXIOM_SUITE.check("axiom1.positive_definite", arrow_witness)
def positive_definite(w: Witness, ctx: CheckContext) -> bool:
    m = ctx.model.measure_sq(Arrow(w["A"], w["B"]))
    return m >= 0 and (m == 0) == (w["A"] == w["B"])


@AXIOM_SUITE.check("axiom1.symmetry", arrow_pair_witness)
def symmetry(w: Witness, ctx: CheckContext) -> bool:
    ab, cd = Arrow(w["A"], w["B"]), Arrow(w["C"], w["D"])
    return ctx.model.pre_inner(ab, cd) == ctx.model.pre_inner(cd, ab)


@AXIOM_SUITE.check("axiom1.addition_linearity", chain_and_arrow_witness)
def addition_linearity(w: Witness, ctx: CheckContext) -> bool:
    ab, bc, m = Arrow(w["A"], w["B"]), Arrow(w["B"], w["C"]), Arrow(w["D"], w["E"])
    ip = ctx.model.pre_inner
    return ip(add_arrows(ab, bc), m) == ip(ab, m) + ip(bc, m)


@AXIOM_SUITE.check("axiom1.negation", arrow_pair_witness)
def negation(w: Witness, ctx: CheckContext) -> bool:
    ab, cd = Arrow(w["A"], w["B"]), Arrow(w["C"], w["D"])
    ip = ctx.model.pre_inner
    return ip(negate(ab), cd) == -ip(ab, cd) == ip(ab, negate(cd))


@AXIOM_SUITE.check("axiom1.bilinear_composite", two_chains_witness)
def bilinear_composite(w: Witness, ctx: CheckContext) -> bool:
    ab, bc = Arrow(w["A"], w["B"]), Arrow(w["B"], w["C"])
    lm, mr = Arrow(w["L"], w["M"]), Arrow(w["M"], w["R"])
    ip = ctx.model.pre_inner
    lhs = ip(add_arrows(ab, bc), add_arrows(lm, mr))
    return lhs == ip(ab, lm) + ip(ab, mr) + ip(bc, lm) + ip(bc, mr)


@AXIOM_SUITE.check("axiom2.scalar_linearity", scaled_pair_witness)
def scalar_linearity(w: Witness, ctx: CheckContext) -> bool:
    ab, cd = Arrow(w["A"], w["B"]), Arrow(w["C"], w["D"])
    s, t = w["s"], w["t"]
    ip = ctx.model.pre_inner
    return (
        ip(scalar_mul(t, ab), cd) == t * ip(ab, cd)
        and ip(scalar_mul(t, ab), scalar_mul(s, cd)) == t * s * ip(ab, cd)
    )


@AXIOM_SUITE.check("axiom4.related_pairs", related_pairs_witness)
def related_pairs(w: Witness, ctx: CheckContext) -> bool:
    ab, cd = Arrow(w["A"], w["B"]), Arrow(w["C"], w["D"])
    ef = parallel_transport(ab, w["P"]).tail_anchored
    gh = parallel_transport(cd, w["Q"]).head_anchored
    return check_axiom4(ab, ef, cd, gh, ctx.model)


@AXIOM_SUITE.check("axiom5.parallel_transport", transport_witness)
def unique_parallel_arrow(w: Witness, ctx: CheckContext) -> bool:
    ab, p = Arrow(w["A"], w["B"]), w["P"]
    moved = parallel_transport(ab, p)
    pk, kp = moved.tail_anchored, moved.head_anchored
    anchored = pk.tail == p and kp.head == p
    unique = w["X"] == pk.head or not related(ab, Arrow(p, w["X"]), ctx.model)
    return anchored and unique and related(ab, pk, ctx.model) and related(ab, kp, ctx.model)


# === Theorem suite: zero arrows and measures ===

@THEOREM_SUITE.check("core.zero_arrow_orthogonal", arrow_pair_witness)
def zero_arrow_orthogonal(w: Witness, ctx: CheckContext) -> bool:
    return ctx.model.pre_inner(Arrow(w["A"], w["A"]), Arrow(w["C"], w["D"])) == 0


@THEOREM_SUITE.check("core.measure_negation_invariant", arrow_witness)
def measure_negation_invariant(w: Witness, ctx: CheckContext) -> bool:
    ab = Arrow(w["A"], w["B"])
    return ctx.model.measure_sq(negate(ab)) == ctx.model.measure_sq(ab)


# === Theorem suite: how arrows differ from vectors ===

@THEOREM_SUITE.check("negative.minus_one_not_negation", distinct_pair_witness)
def minus_one_not_negation(w: Witness, ctx: CheckContext) -> bool:
    ab = Arrow(w["A"], w["B"])
    minus_one = scalar_mul(-1, ab)
    return minus_one != negate(ab) and minus_one.tail != negate(ab).tail


@THEOREM_SUITE.check("negative.addition_noncommutative", distinct_pair_witness)
def addition_noncommutative(w: Witness, ctx: CheckContext) -> bool:
    a, b = w["A"], w["B"]
    ab, ba = Arrow(a, b), Arrow(b, a)
    forward, backward = add_arrows(ab, ba), add_arrows(ba, ab)
    return forward == Arrow(a, a) and backward == Arrow(b, b) and forward != backward


@THEOREM_SUITE.check("negative.distributed_sum_undefined", distinct_triple_witness)
def distributed_sum_undefined(w: Witness, ctx: CheckContext) -> bool:
    s = w["s"]
    ab, bc = Arrow(w["A"], w["B"]), Arrow(w["B"], w["C"])
    if checked_mixed_sum(s, ab, bc) != scalar_mul(s, Arrow(w["A"], w["C"])):
        return False
    if s == 1:
        return distributed_sum(s, ab, bc) == Arrow(w["A"], w["C"])
    try:
        distributed_sum(s, ab, bc)
    except UndefinedAddition:
        return True
    return False


@THEOREM_SUITE.check("negative.split_scalar_sum", two_scalars_witness)
def split_scalar_sum_defined_at_zero(w: Witness, ctx: CheckContext) -> bool:
    ab, s, t = Arrow(w["A"], w["B"]), w["s"], w["t"]
    if split_scalar_sum(0, t, ab) != scalar_mul(t, ab):
        return False
    if s == 0 or ab.is_degenerate:
        return split_scalar_sum(s, t, ab) == scalar_mul(s + t, ab)
    try:
        split_scalar_sum(s, t, ab)
    except UndefinedAddition:
        return True
    return False


# === Theorem suite: arrow algebra ===

@THEOREM_SUITE.check("arrow.associativity", four_points_witness)
def associativity(w: Witness, ctx: CheckContext) -> bool:
    ab, bc, cd = Arrow(w["A"], w["B"]), Arrow(w["B"], w["C"]), Arrow(w["C"], w["D"])
    left = add_arrows(add_arrows(ab, bc), cd)
    right = add_arrows(ab, add_arrows(bc, cd))
    return left == right == Arrow(w["A"], w["D"])


@THEOREM_SUITE.check("arrow.triangle_closure", four_points_witness)
def triangle_closure(w: Witness, ctx: CheckContext) -> bool:
    a, b, c = w["A"], w["B"], w["C"]
    return sum_chain(Arrow(a, b), Arrow(b, c), Arrow(c, a)) == Arrow(a, a)


@THEOREM_SUITE.check("arrow.identities", distinct_triple_witness)
def identities(w: Witness, ctx: CheckContext) -> bool:
    a, b, x = w["A"], w["B"], w["C"]
    ab = Arrow(a, b)
    if add_arrows(Arrow(a, a), ab) != ab or add_arrows(ab, Arrow(b, b)) != ab:
        return False
    # no other zero arrow acts as a left identity on AB
    try:
        add_arrows(Arrow(x, x), ab)
    except UndefinedAddition:
        return True
    return False


@THEOREM_SUITE.check("arrow.inverse", arrow_witness)
def inverse(w: Witness, ctx: CheckContext) -> bool:
    ab = Arrow(w["A"], w["B"])
    return add_arrows(ab, negate(ab)) == Arrow(w["A"], w["A"])


@THEOREM_SUITE.check("arrow.scalar_associativity", two_scalars_witness)
def scalar_associativity(w: Witness, ctx: CheckContext) -> bool:
    ab, s, t = Arrow(w["A"], w["B"]), w["s"], w["t"]
    return scalar_mul(s * t, ab) == scalar_mul(s, scalar_mul(t, ab))


@THEOREM_SUITE.check("arrow.scalar_injectivity", injectivity_witness)
def scalar_injectivity(w: Witness, ctx: CheckContext) -> bool:
    ab, a, b = Arrow(w["A"], w["B"]), w["a"], w["b"]
    if (scalar_mul(a, ab) == scalar_mul(b, ab)) != (a == b):
        return False
    return scale_factor(ab, scalar_mul(a, ab)) == a


@THEOREM_SUITE.check("arrow.length_scaling", two_scalars_witness)
def length_scaling(w: Witness, ctx: CheckContext) -> bool:
    ab, t = Arrow(w["A"], w["B"]), w["t"]
    return ctx.model.measure_sq(scalar_mul(t, ab)) == t * t * ctx.model.measure_sq(ab)


@THEOREM_SUITE.check("arrow.scalar_definition", two_scalars_witness)
def scalar_definition(w: Witness, ctx: CheckContext) -> bool:
    a, b, t = w["A"], w["B"], w["t"]
    ab = Arrow(a, b)
    aa = Arrow(a, a)
    if scalar_mul(0, ab) != aa or scalar_mul(1, ab) != ab or scalar_mul(t, aa) != aa:
        return False
    ad = scalar_mul(t, ab)
    m = ctx.model.measure_sq(ab)
    return (
        ad.tail == a
        and ctx.model.measure_sq(ad) == t * t * m
        and ctx.model.pre_inner(ab, ad) == t * m
    )


@THEOREM_SUITE.check("arrow.direction_classes", injectivity_witness)
def direction_classes(w: Witness, ctx: CheckContext) -> bool:
    ab, t = Arrow(w["A"], w["B"]), w["a"]
    scaled = scalar_mul(t, ab)
    if direction_relation(ab, negate(ab), ctx.model) != DirectionClass.OPPOSITE:
        return False
    if t == 0:
        expected = DirectionClass.PERPENDICULAR
    else:
        expected = DirectionClass.SAME if t > 0 else DirectionClass.OPPOSITE
    return direction_relation(ab, scaled, ctx.model) == expected


# === Theorem suite: lines ===

@THEOREM_SUITE.check("line.plus_minus_one", line_params_witness)
def plus_minus_one(w: Witness, ctx: CheckContext) -> bool:
    l = line_through(w["A"], w["B"])
    m, p = l.point_at(w["s"]), l.point_at(w["t"])
    ml, ab = Arrow(m, p), l.gen
    ip = ctx.model.pre_inner(ml, ab)
    return ip * ip == ctx.model.measure_sq(ml) * ctx.model.measure_sq(ab)


@THEOREM_SUITE.check("line.membership", membership_witness)
def membership(w: Witness, ctx: CheckContext) -> bool:
    a, d = w["A"], w["D"]
    l = line_through(a, w["B"])
    ad = Arrow(a, d)
    ip = ctx.model.pre_inner(l.gen, ad)
    characterized = d == a or ip * ip == ctx.model.measure_sq(l.gen) * ctx.model.measure_sq(ad)
    return (contains(l, d) is not None) == characterized


@THEOREM_SUITE.check("line.sign_parameter_agreement", line_params_witness)
def sign_parameter_agreement(w: Witness, ctx: CheckContext) -> bool:
    l = line_through(w["A"], w["B"])
    t = w["t"]
    d = l.point_at(t)
    if contains(l, d) != t:
        return False
    ip = ctx.model.pre_inner(l.gen, Arrow(l.base, d))
    if t == 0:
        return d == l.base
    return (ip > 0) == (t > 0)


@THEOREM_SUITE.check("line.measure_split", line_params_witness)
def measure_split(w: Witness, ctx: CheckContext) -> bool:
    a, b = w["A"], w["B"]
    t = abs(w["t"]) + Fraction(1, 1000)
    d = line_through(a, b).point_at(t)
    m = ctx.model.measure_sq
    if t >= 1:
        # ||AD|| = ||AB|| + ||BD||
        return _sum_of_lengths(m(Arrow(a, d)), m(Arrow(a, b)), m(Arrow(b, d)))
    # ||AB|| = ||AD|| + ||DB||
    return _sum_of_lengths(m(Arrow(a, b)), m(Arrow(a, d)), m(Arrow(d, b)))


@THEOREM_SUITE.check("line.betweenness_trichotomy", line_params_witness)
def betweenness_trichotomy(w: Witness, ctx: CheckContext) -> bool:
    l = line_through(w["A"], w["B"])
    a, b, c = (l.point_at(w[k]) for k in ("s", "t", "u"))
    orders = [
        between(a, b, c, ctx.model),
        between(b, a, c, ctx.model),
        between(a, c, b, ctx.model),
    ]
    return orders.count(True) == 1


@THEOREM_SUITE.check("line.uniqueness", off_line_witness)
def line_uniqueness(w: Witness, ctx: CheckContext) -> bool:
    l = line_through(w["A"], w["B"])
    m, p = l.point_at(w["s"]), l.point_at(w["t"])
    if not line_eq(l, line_through(m, p)):
        return False
    x = w["X"]
    if x == l.base or contains(l, x) is not None:
        return True
    return not line_eq(l, line_through(l.base, x))


@THEOREM_SUITE.check("line.parallel_on_line", line_params_witness)
def on_line_parallel_arrow(w: Witness, ctx: CheckContext) -> bool:
    l = line_through(w["A"], w["B"])
    c, d, p = (l.point_at(w[k]) for k in ("s", "t", "u"))
    cd = Arrow(c, d)
    k, k_prime = parallel_on_line(l, cd, p)
    t = parameter_of(c, d, p)
    return (
        parameter_of(c, d, k) == t + 1
        and parameter_of(c, d, k_prime) == t - 1
        and related(cd, Arrow(p, k), ctx.model)
        and related(cd, Arrow(k_prime, p), ctx.model)
    )


@THEOREM_SUITE.check("line.parallel_on_line_unique", line_params_witness)
def on_line_parallel_unique(w: Witness, ctx: CheckContext) -> bool:
    l = line_through(w["A"], w["B"])
    c, d, p = (l.point_at(w[k]) for k in ("s", "t", "u"))
    cd = Arrow(c, d)
    k, _ = parallel_on_line(l, cd, p)
    candidates = [l.point_at(g) for g in ctx.grid] + [k]
    return all(
        (x == k) == related(cd, Arrow(p, x), ctx.model) for x in candidates
    )


@THEOREM_SUITE.check("line.related_on_line_axiom4", line_params_witness)
def related_on_line_axiom4(w: Witness, ctx: CheckContext) -> bool:
    l = line_through(w["A"], w["B"])
    c, d, e, f = (l.point_at(w[k]) for k in ("s", "t", "u", "v"))
    ab, gh = Arrow(c, d), Arrow(e, f)
    ef = parallel_transport(ab, e).tail_anchored
    ij = parallel_transport(gh, c).head_anchored
    return (
        related_on_line(l, ab, ef, ctx.model)
        and related_on_line(l, gh, ij, ctx.model)
        and check_axiom4(ab, ef, gh, ij, ctx.model)
    )


# === Theorem suite: the relation R ===

@THEOREM_SUITE.check("equivalence.reflexive", arrow_witness)
def reflexive(w: Witness, ctx: CheckContext) -> bool:
    ab = Arrow(w["A"], w["B"])
    return related(ab, ab, ctx.model)


@THEOREM_SUITE.check("equivalence.symmetric", related_pairs_witness)
def symmetric(w: Witness, ctx: CheckContext) -> bool:
    ab, cd = Arrow(w["A"], w["B"]), Arrow(w["C"], w["D"])
    moved = parallel_transport(ab, w["P"]).tail_anchored
    return (
        related(ab, cd, ctx.model) == related(cd, ab, ctx.model)
        and related(ab, moved, ctx.model)
        and related(moved, ab, ctx.model)
    )


@THEOREM_SUITE.check("equivalence.transitive", related_pairs_witness)
def transitive(w: Witness, ctx: CheckContext) -> bool:
    ab, cd = Arrow(w["A"], w["B"]), Arrow(w["C"], w["D"])
    first = parallel_transport(ab, w["P"]).tail_anchored
    second = parallel_transport(first, w["Q"]).head_anchored
    chained = related(ab, first, ctx.model) and related(first, second, ctx.model)
    if not (chained and related(ab, second, ctx.model)):
        return False
    # cd is an independent draw
    return not related(cd, ab, ctx.model) or related(cd, second, ctx.model)


@THEOREM_SUITE.check("equivalence.degeneracy_propagation", arrow_pair_witness)
def degeneracy_propagation(w: Witness, ctx: CheckContext) -> bool:
    aa, cd = Arrow(w["A"], w["A"]), Arrow(w["C"], w["D"])
    return not related(aa, cd, ctx.model) or cd.is_degenerate


@THEOREM_SUITE.check("equivalence.scaling_compatibility", related_pairs_witness)
def scaling_compatibility(w: Witness, ctx: CheckContext) -> bool:
    ab = Arrow(w["A"], w["B"])
    cd = parallel_transport(ab, w["P"]).tail_anchored
    # reuse the first coordinate of Q as the scalar
    t = w["Q"].coords[0]
    return related(scalar_mul(t, ab), scalar_mul(t, cd), ctx.model)


@THEOREM_SUITE.check("equivalence.transport_uniqueness", uniqueness_witness)
def transport_uniqueness(w: Witness, ctx: CheckContext) -> bool:
    ab, p = Arrow(w["A"], w["B"]), w["P"]
    k = parallel_transport(ab, p).tail_anchored.head
    direction = w["W"].coords
    for g in ctx.grid:
        x = k.translated(tuple(g * c for c in direction))
        if (x == k) != related(ab, Arrow(p, x), ctx.model):
            return False
    return True


@THEOREM_SUITE.check("equivalence.composite_relatedness", composite_witness)
def composite_relatedness(w: Witness, ctx: CheckContext) -> bool:
    k1, p1, l1, p2 = w["K"], w["P"], w["L"], w["Q"]
    k2p2 = parallel_transport(Arrow(k1, p1), p2).head_anchored
    p2l2 = parallel_transport(Arrow(p1, l1), p2).tail_anchored
    k1l1, k2l2 = Arrow(k1, l1), Arrow(k2p2.tail, p2l2.head)
    return (
        related(k1l1, k2l2, ctx.model)
        and ctx.model.measure_sq(k1l1) == ctx.model.measure_sq(k2l2)
    )


@THEOREM_SUITE.check("equivalence.canonical_rep", arrow_witness)
def canonical_representative(w: Witness, ctx: CheckContext) -> bool:
    ab = Arrow(w["A"], w["B"])
    rep = canonical_rep(ab)
    return (
        rep.tail == Point.zero(ab.dim)
        and related(ab, rep, ctx.model)
        and canonical_rep(rep) == rep
    )


# === Theorem suite: the vector space of classes ===

@THEOREM_SUITE.check("vector.class_of_related", related_pairs_witness)
def class_of_related(w: Witness, ctx: CheckContext) -> bool:
    ab = Arrow(w["A"], w["B"])
    moved = parallel_transport(ab, w["P"]).tail_anchored
    return (
        to_vector(ab) == to_vector(moved)
        and to_vector(negate(ab)) == vec_neg(to_vector(ab))
    )


@THEOREM_SUITE.check("vector.add_commutative", vectors_witness)
def add_commutative(w: Witness, ctx: CheckContext) -> bool:
    u, v, p = _vec(w["u"]), _vec(w["v"]), w["P"]
    return vec_add_at(u, v, p) == vec_add_at(v, u, p)


@THEOREM_SUITE.check("vector.add_associative", vectors_witness)
def add_associative(w: Witness, ctx: CheckContext) -> bool:
    u, v, x, p = _vec(w["u"]), _vec(w["v"]), _vec(w["w"]), w["P"]
    return vec_add_at(vec_add_at(u, v, p), x, p) == vec_add_at(u, vec_add_at(v, x, p), p)


@THEOREM_SUITE.check("vector.identity", vectors_witness)
def identity(w: Witness, ctx: CheckContext) -> bool:
    u, p = _vec(w["u"]), w["P"]
    zero = zero_vector(u.dim)
    return vec_add_at(u, zero, p) == u == vec_add_at(zero, u, p)


@THEOREM_SUITE.check("vector.inverse", related_pairs_witness)
def additive_inverse(w: Witness, ctx: CheckContext) -> bool:
    ab = Arrow(w["A"], w["B"])
    total = vec_add_at(to_vector(ab), to_vector(negate(ab)), w["P"])
    return total == to_vector(Arrow(w["A"], w["A"])) and total.is_zero


@THEOREM_SUITE.check("vector.scalar_associative", vectors_witness)
def vector_scalar_associative(w: Witness, ctx: CheckContext) -> bool:
    u, s, t = _vec(w["u"]), w["s"], w["t"]
    return vec_scalar_mul(t * s, u) == vec_scalar_mul(t, vec_scalar_mul(s, u))


@THEOREM_SUITE.check("vector.scalar_sum_distributive", vectors_witness)
def scalar_sum_distributive(w: Witness, ctx: CheckContext) -> bool:
    u, s, t, p = _vec(w["u"]), w["s"], w["t"], w["P"]
    return vec_scalar_mul(t + s, u) == vec_add_at(vec_scalar_mul(t, u), vec_scalar_mul(s, u), p)


@THEOREM_SUITE.check("vector.vector_sum_distributive", vectors_witness)
def vector_sum_distributive(w: Witness, ctx: CheckContext) -> bool:
    u, v, t, p = _vec(w["u"]), _vec(w["v"]), w["t"], w["P"]
    lhs = vec_scalar_mul(t, vec_add_at(u, v, p))
    return lhs == vec_add_at(vec_scalar_mul(t, u), vec_scalar_mul(t, v), p)


@THEOREM_SUITE.check("vector.unit_scalar", vectors_witness)
def unit_scalar(w: Witness, ctx: CheckContext) -> bool:
    u = _vec(w["u"])
    return vec_scalar_mul(1, u) == u


@THEOREM_SUITE.check("vector.transport_independence", vectors_witness)
def transport_independence(w: Witness, ctx: CheckContext) -> bool:
    u, v = _vec(w["u"]), _vec(w["v"])
    return vec_add_at(u, v, w["P"]) == vec_add_at(u, v, w["Q"]) == vec_add(u, v)


@THEOREM_SUITE.check("vector.scalar_paths_agree", vectors_witness)
def scalar_paths_agree(w: Witness, ctx: CheckContext) -> bool:
    u, t = _vec(w["u"]), w["t"]
    by_displacement = Vector(tuple(t * x for x in u.displacement))
    return vec_scalar_mul(t, u) == by_displacement and vec_neg(u) == vec_scalar_mul(-1, u)


@THEOREM_SUITE.check("vector.inner_product", vectors_witness)
def inner_product(w: Witness, ctx: CheckContext) -> bool:
    u, v, x, t = _vec(w["u"]), _vec(w["v"]), _vec(w["w"]), w["t"]
    def ip(a: Vector, b: Vector) -> Fraction:
        return vec_inner(a, b, ctx.model)

    symmetric_ok = ip(u, v) == ip(v, u)
    additive_ok = ip(vec_add(u, x), v) == ip(u, v) + ip(x, v)
    homogeneous_ok = ip(vec_scalar_mul(t, u), v) == t * ip(u, v)
    definite_ok = ip(u, u) >= 0 and (ip(u, u) == 0) == u.is_zero
    return symmetric_ok and additive_ok and homogeneous_ok and definite_ok


# === Theorem suite: affine applications ===

@THEOREM_SUITE.check("affine.projection_orthogonal", projection_witness)
def projection_orthogonal(w: Witness, ctx: CheckContext) -> bool:
    o, g, p = w["O"], w["G"], w["P"]
    result = project_point(o, g, p, ctx.model)
    foot = result.foot
    return (
        ctx.model.pre_inner(Arrow(foot, o), Arrow(foot, p)) == 0
        and contains(line_through(o, g), foot) == result.parameter
    )


@THEOREM_SUITE.check("affine.projection_optimal", projection_witness)
def projection_optimal(w: Witness, ctx: CheckContext) -> bool:
    o, g, p = w["O"], w["G"], w["P"]
    result = project_point(o, g, p, ctx.model)
    l = line_through(o, g)
    m, ip = ctx.model.measure_sq, ctx.model.pre_inner
    for x in (l.point_at(t) for t in ctx.grid):
        if x == result.foot:
            continue
        # right triangle at the foot
        if m(Arrow(x, p)) != m(Arrow(x, result.foot)) + result.residual_sq:
            return False
        if m(Arrow(x, p)) <= result.residual_sq:
            return False
        if x != o and ip(Arrow(x, o), Arrow(x, p)) == 0:
            return False
    return True


@THEOREM_SUITE.check("affine.cauchy_schwarz", arrow_pair_witness)
def cauchy_schwarz_inequality(w: Witness, ctx: CheckContext) -> bool:
    ab, cd = Arrow(w["A"], w["B"]), Arrow(w["C"], w["D"])
    lhs, rhs, tight = cauchy_schwarz(ab, cd, ctx.model)
    return lhs <= rhs and tight == _proportional(ab, cd)


@THEOREM_SUITE.check("affine.cauchy_schwarz_tight", tight_pair_witness)
def cauchy_schwarz_tight(w: Witness, ctx: CheckContext) -> bool:
    ab = Arrow(w["A"], w["B"])
    multiple = parallel_transport(scalar_mul(w["s"], ab), w["C"]).tail_anchored
    return cauchy_schwarz(ab, multiple, ctx.model).tight


@THEOREM_SUITE.check("affine.barycenter_origin_independent", barycenter_witness)
def barycenter_origin_independent(w: Witness, ctx: CheckContext) -> bool:
    spec = BarycenterSpec(w["points"], w["weights"])
    dim = spec.points[0].dim
    reference = barycenter(spec, Point.zero(dim))
    return all(barycenter(spec, origin) == reference for origin in w["origins"])


@THEOREM_SUITE.check("affine.barycenter_paths_agree", barycenter_witness)
def barycenter_paths_agree(w: Witness, ctx: CheckContext) -> bool:
    spec = BarycenterSpec(w["points"], w["weights"])
    return all(
        barycenter_by_transport(spec, origin) == barycenter_by_displacement(spec, origin)
        for origin in w["origins"][:5]
    )
