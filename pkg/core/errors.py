"""Error taxonomy for the arrow-space kernel."""

from typing import Optional


class ArrowSpaceError(Exception):
    """Base class for every kernel error."""


class DimensionMismatch(ArrowSpaceError):
    """Two objects live in spaces of different dimension."""

    def __init__(self, left: int, right: int, what: str = "operands"):
        self.left = left
        self.right = right
        super().__init__(f"dimension mismatch: {what} have dims {left} and {right}")


class PreconditionViolated(ArrowSpaceError):
    """A documented precondition of an operation does not hold."""


class PathDisagreement(ArrowSpaceError):
    """The transport path and the displacement path gave different answers."""


# === Undefined operations (CLI exit status 2) ===

class UndefinedOperation(ArrowSpaceError):
    """The operation has no value for these arguments."""


class UndefinedAddition(UndefinedOperation):
    """Arrow addition needs the head of the left arrow to be the tail of the right."""

    def __init__(self, head_label: str, tail_label: str):
        self.head_label = head_label
        self.tail_label = tail_label
        super().__init__(f"undefined addition: head {head_label} != tail {tail_label}")


class DegenerateLine(UndefinedOperation):
    def __init__(self, label: str):
        super().__init__(f"degenerate line: points coincide at {label}")


class DegenerateBetween(UndefinedOperation):
    def __init__(self, label: str):
        super().__init__(f"betweenness needs three distinct points: {label} repeats")


class NotCollinear(UndefinedOperation):
    def __init__(self):
        super().__init__("points are not on a common line")


class NotOnLine(UndefinedOperation):
    def __init__(self, label: str):
        super().__init__(f"point {label} is not on the line")


class DegenerateArrow(UndefinedOperation):
    def __init__(self, label: str):
        super().__init__(f"degenerate arrow {label}")


class WeightSumNotOne(UndefinedOperation):
    def __init__(self, total: str):
        self.total = total
        super().__init__(f"weights sum to {total}, not 1")


class DuplicatePoints(UndefinedOperation):
    def __init__(self, label: str):
        super().__init__(f"barycenter points must be distinct: {label} repeats")


# === Scene files ===

class SceneError(ArrowSpaceError):
    """Scene text could not be turned into a Scene."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        # explicit base call: SceneDimensionMismatch also inherits DimensionMismatch
        ArrowSpaceError.__init__(self, f"{prefix}{message}")


class ParseError(SceneError):
    pass


class DuplicateName(SceneError):
    pass


class UnknownPoint(SceneError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown point '{name}'")


class SceneDimensionMismatch(SceneError, DimensionMismatch):
    """A scene point with the wrong number of coordinates."""

    def __init__(self, expected: int, got: int, line: int):
        self.left = expected
        self.right = got
        SceneError.__init__(
            self, f"dimension mismatch: expected {expected} coordinates, got {got}", line
        )
