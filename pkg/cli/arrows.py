"""Arrow subcommands: add, scale, classify."""

from core.affine import cauchy_schwarz
from core.arrow_ops import direction_relation, scalar_mul, sum_chain
from core.arrows import EUCLIDEAN
from core.rational import parse_rational

from cli.common import (
    UsageError,
    add_scene_argument,
    approx_digits,
    arrow_line,
    load_scene,
    measure_lines,
    render,
    scalar_line,
    scene_arrows,
)


def _add_arrow_option(parser, help_text: str) -> None:
    parser.add_argument(
        "--arrow", action="append", nargs=2, metavar=("TAIL", "HEAD"), help=help_text,
    )


def register(subparsers) -> None:
    add = subparsers.add_parser("add", help="head-to-tail arrow addition")
    add_scene_argument(add)
    _add_arrow_option(add, "arrow to add, in order; at least two")
    add.set_defaults(handler=run_add)

    scale = subparsers.add_parser("scale", help="scalar multiple (t)AB")
    add_scene_argument(scale)
    _add_arrow_option(scale, "the arrow to scale")
    scale.add_argument("--by", type=parse_rational, required=True, metavar="T")
    scale.set_defaults(handler=run_scale)

    classify = subparsers.add_parser("classify", help="pre-inner product and direction class of two arrows")
    add_scene_argument(classify)
    _add_arrow_option(classify, "one of the two arrows")
    classify.set_defaults(handler=run_classify)


def run_add(args):
    scene = load_scene(args.scene)
    pairs = args.arrow or []
    if len(pairs) < 2:
        raise UsageError("add needs at least two --arrow options")
    total = sum_chain(*(scene.arrow(tail, head) for tail, head in pairs))
    digits = approx_digits(args)
    return render([arrow_line(total)] + measure_lines(EUCLIDEAN.measure_sq(total), digits))


def run_scale(args):
    scene = load_scene(args.scene)
    (a,) = scene_arrows(scene, args.arrow, 1)
    scaled = scalar_mul(args.by, a)
    digits = approx_digits(args)
    return render([arrow_line(scaled)] + measure_lines(EUCLIDEAN.measure_sq(scaled), digits))


def run_classify(args):
    scene = load_scene(args.scene)
    a, b = scene_arrows(scene, args.arrow, 2)
    digits = approx_digits(args)
    cs = cauchy_schwarz(a, b)
    return render([
        scalar_line("pre_inner", EUCLIDEAN.pre_inner(a, b), digits),
        f"direction = {direction_relation(a, b).value}",
        scalar_line("cs_lhs", cs.lhs, digits),
        scalar_line("cs_rhs", cs.rhs, digits),
        f"cs_tight = {str(cs.tight).lower()}",
    ])
