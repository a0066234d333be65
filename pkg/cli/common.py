"""Helpers shared by the subcommand modules: scene loading and output lines."""

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from core.arrows import Arrow, Point
from core.config import load_section
from core.rational import approx, approx_sqrt, format_coords, format_rational
from core.scene import Scene, parse_scene


class UsageError(Exception):
    """Bad command line; exit status 1."""


@dataclass
class Output:
    text: str
    failed: bool = False


def add_scene_argument(parser) -> None:
    parser.add_argument("--scene", required=True, metavar="FILE", help="scene file")
    parser.add_argument(
        "--approx", type=int, default=None, metavar="DIGITS",
        help="append decimal approximations with this many digits",
    )


def load_scene(path: str) -> Scene:
    return parse_scene(Path(path).read_text(encoding="utf-8"))


def scene_arrows(scene: Scene, pairs: Optional[List[List[str]]], count: int) -> List[Arrow]:
    """Resolve exactly `count` --arrow TAIL HEAD pairs against the scene."""
    pairs = pairs or []
    if len(pairs) != count:
        raise UsageError(f"expected {count} --arrow option(s), got {len(pairs)}")
    return [scene.arrow(tail, head) for tail, head in pairs]


def approx_digits(args) -> Optional[int]:
    """--approx, else cli.approx_digits from config, else None."""
    digits = args.approx if args.approx is not None else load_section("cli").get("approx_digits")
    if digits is not None and digits < 0:
        raise UsageError("--approx needs a non-negative digit count")
    return digits


def scalar_line(key: str, q: Fraction, digits: Optional[int]) -> str:
    line = f"{key} = {format_rational(q)}"
    if digits is not None:
        line += f" ~ {approx(q, digits)}"
    return line


def point_line(key: str, p: Point) -> str:
    return f"{key} = {format_coords(p.coords)}"


def arrow_line(a: Arrow) -> str:
    return f"arrow = {format_coords(a.tail.coords)} -> {format_coords(a.head.coords)}"


def measure_lines(m: Fraction, digits: Optional[int], key: str = "measure_sq") -> List[str]:
    lines = [scalar_line(key, m, digits)]
    if digits is not None:
        lines.append(f"measure ~ {approx_sqrt(m, digits)}")
    return lines


def render(lines: List[str]) -> Output:
    return Output("".join(line + "\n" for line in lines))
