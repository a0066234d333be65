"""vadd: add the classes of two arrows through parallel transport."""

from core.arrows import Point
from core.vector_space import to_vector, vec_add_at

from cli.common import add_scene_argument, load_scene, render, scene_arrows


def register(subparsers) -> None:
    vadd = subparsers.add_parser("vadd", help="[AB] + [CD], transported to a point")
    add_scene_argument(vadd)
    vadd.add_argument(
        "--arrow", action="append", nargs=2, metavar=("TAIL", "HEAD"), help="one of the two arrows",
    )
    vadd.add_argument("--at", default=None, metavar="P", help="transport point (default: zero)")
    vadd.set_defaults(handler=run_vadd)


def run_vadd(args):
    scene = load_scene(args.scene)
    a, b = scene_arrows(scene, args.arrow, 2)
    at = scene.get(args.at) if args.at else Point.zero(scene.dim)
    return render([f"vector = {vec_add_at(to_vector(a), to_vector(b), at)}"])
