"""Point geometry subcommands: project, distance, between, barycenter."""

from core.affine import BarycenterSpec, barycenter, distance_sq_to_line, project_point
from core.arrows import Point
from core.line import between
from core.rational import parse_rational

from cli.common import (
    UsageError,
    add_scene_argument,
    approx_digits,
    load_scene,
    measure_lines,
    point_line,
    render,
    scalar_line,
)

AFFINE_NOTE = "note = affine (not convex) combination"


def register(subparsers) -> None:
    project = subparsers.add_parser("project", help="foot of the perpendicular from a point to a line")
    add_scene_argument(project)
    project.add_argument("--line", nargs=2, required=True, metavar=("O", "G"))
    project.add_argument("--point", required=True, metavar="P")
    project.set_defaults(handler=run_project)

    distance = subparsers.add_parser("distance", help="squared distance from a point to a line")
    add_scene_argument(distance)
    distance.add_argument("--line", nargs=2, required=True, metavar=("O", "G"))
    distance.add_argument("--point", required=True, metavar="P")
    distance.set_defaults(handler=run_distance)

    betweenness = subparsers.add_parser("between", help="is the middle point between the other two")
    add_scene_argument(betweenness)
    betweenness.add_argument("--points", nargs=3, required=True, metavar=("A", "B", "C"))
    betweenness.set_defaults(handler=run_between)

    bary = subparsers.add_parser("barycenter", help="weighted barycenter, weights summing to 1")
    add_scene_argument(bary)
    bary.add_argument(
        "--point", action="append", nargs=2, required=True, metavar=("NAME", "WEIGHT"),
    )
    bary.add_argument("--origin", default=None, metavar="O", help="origin point (default: zero)")
    bary.set_defaults(handler=run_barycenter)


def run_project(args):
    scene = load_scene(args.scene)
    o, g = (scene.get(name) for name in args.line)
    result = project_point(o, g, scene.get(args.point))
    digits = approx_digits(args)
    return render([
        scalar_line("t", result.parameter, digits),
        point_line("W", result.foot),
    ] + measure_lines(result.residual_sq, digits, key="residual_sq"))


def run_distance(args):
    scene = load_scene(args.scene)
    o, g = (scene.get(name) for name in args.line)
    d = distance_sq_to_line(o, g, scene.get(args.point))
    return render(measure_lines(d, approx_digits(args), key="distance_sq"))


def run_between(args):
    scene = load_scene(args.scene)
    a, b, c = (scene.get(name) for name in args.points)
    return render([f"between = {str(between(a, b, c)).lower()}"])


def run_barycenter(args):
    scene = load_scene(args.scene)
    pairs = []
    for name, weight in args.point:
        try:
            pairs.append((scene.get(name), parse_rational(weight)))
        except ValueError as e:
            raise UsageError(f"bad weight for {name}: {e}") from None
    spec = BarycenterSpec.of(pairs)
    origin = scene.get(args.origin) if args.origin else Point.zero(scene.dim)
    lines = [point_line("M", barycenter(spec, origin))]
    if not spec.is_convex:
        lines.append(AFFINE_NOTE)
    return render(lines)
