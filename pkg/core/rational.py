"""Exact rational scalars: literal parsing, canonical printing, decimal approximations.

The scalar field is `fractions.Fraction`, which keeps every value in lowest
terms with a positive denominator.
"""

import re
from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

Scalar = Union[Fraction, int]

# optional '-', digits, optional '/digits'
RATIONAL_LITERAL = re.compile(r"^-?[0-9]+(?:/[0-9]+)?$")


def parse_rational(text: str) -> Fraction:
    """
    Parse a rational literal such as `3`, `-7`, `1/2` or `-10/4`.

    Raises:
        ValueError: malformed literal or zero denominator
    """
    if not RATIONAL_LITERAL.match(text):
        raise ValueError(f"malformed rational literal '{text}'")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in '{text}'")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def as_rational(value: Scalar) -> Fraction:
    """Coerce an int or Fraction to Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    """Canonical `p/q` form; integers print without `/1`."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_coords(coords: Iterable[Fraction]) -> str:
    return "(" + ", ".join(format_rational(c) for c in coords) + ")"


def approx(q: Fraction, digits: int) -> str:
    """Decimal approximation of q rounded half-even to `digits` places."""
    with localcontext() as ctx:
        ctx.prec = max(28, digits + len(str(abs(q.numerator))) + 10)
        value = Decimal(q.numerator) / Decimal(q.denominator)
        return str(value.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN))


def approx_sqrt(q: Fraction, digits: int) -> str:
    """Decimal approximation of the square root of a non-negative rational."""
    if q < 0:
        raise ValueError("square root of a negative rational")
    with localcontext() as ctx:
        ctx.prec = max(28, digits + len(str(q.numerator)) + 10)
        value = (Decimal(q.numerator) / Decimal(q.denominator)).sqrt()
        return str(value.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN))
