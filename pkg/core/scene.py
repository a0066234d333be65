"""Scene files: a dimension header and named points.

    dim 2
    # comments run to end of line
    point A 0 0
    point B 1/2 -3
"""

import re
from dataclasses import dataclass, field
from typing import Dict, Optional

from core.arrows import Arrow, Point
from core.errors import DuplicateName, ParseError, SceneDimensionMismatch, UnknownPoint
from core.rational import format_rational, parse_rational

NAME_PATTERN = re.compile(r"^[A-Za-z0-9_]+$")
DIM_PATTERN = re.compile(r"^[0-9]+$")


@dataclass
class Scene:
    dim: int
    points: Dict[str, Point] = field(default_factory=dict)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("scene dimension must be positive")

    def add(self, name: str, point: Point, line: Optional[int] = None) -> None:
        if not NAME_PATTERN.match(name):
            raise ParseError(f"invalid point name '{name}'", line)
        if name in self.points:
            raise DuplicateName(f"duplicate point name '{name}'", line)
        if point.dim != self.dim:
            raise SceneDimensionMismatch(self.dim, point.dim, line)
        self.points[name] = Point(point.coords, name)

    def get(self, name: str) -> Point:
        try:
            return self.points[name]
        except KeyError:
            raise UnknownPoint(name) from None

    def arrow(self, tail: str, head: str) -> Arrow:
        return Arrow(self.get(tail), self.get(head))


def _strip_comment(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


def parse_scene(text: str) -> Scene:
    """
    Parse scene text.

    Raises:
        ParseError: missing or malformed `dim` header, unknown directive,
            malformed rational literal
        DuplicateName: a point name used twice
        SceneDimensionMismatch: a point with the wrong number of coordinates
    """
    scene: Optional[Scene] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = _strip_comment(raw).split()
        if not tokens:
            continue

        if scene is None:
            if tokens[0] != "dim":
                raise ParseError("expected 'dim <n>' header", number)
            if len(tokens) != 2 or not DIM_PATTERN.match(tokens[1]) or int(tokens[1]) < 1:
                raise ParseError("dim needs one positive integer", number)
            scene = Scene(int(tokens[1]))
            continue

        if tokens[0] == "dim":
            raise ParseError("repeated dim header", number)
        if tokens[0] != "point":
            raise ParseError(f"unknown directive '{tokens[0]}'", number)
        if len(tokens) < 2:
            raise ParseError("point needs a name", number)
        try:
            coords = tuple(parse_rational(t) for t in tokens[2:])
        except ValueError as e:
            raise ParseError(str(e), number) from None
        if len(coords) != scene.dim:
            raise SceneDimensionMismatch(scene.dim, len(coords), number)
        scene.add(tokens[1], Point(coords), number)

    if scene is None:
        raise ParseError("expected 'dim <n>' header", 1)
    return scene


def format_scene(scene: Scene) -> str:
    lines = [f"dim {scene.dim}"]
    for name, point in scene.points.items():
        coords = " ".join(format_rational(c) for c in point.coords)
        lines.append(f"point {name} {coords}")
    return "\n".join(lines) + "\n"
