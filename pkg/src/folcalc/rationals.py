"""Exact rational scalars and their canonical string form.

Rationals travel through JSON as lowest-terms strings ("p/q", plain "p" for
integers); floats are rejected everywhere so no value is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ValidationError


def format_rational(value) -> str:
    """Canonical lowest-terms string, e.g. ``-2/5`` or ``-1``."""
    return str(Fraction(value))


def parse_rational(value) -> Fraction:
    """Parse an int or a "p/q" string; anything else (floats included) is rejected."""
    if isinstance(value, bool):
        raise ValidationError(f"not an exact rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"not an exact rational: {value!r}") from exc
    raise ValidationError(f"not an exact rational: {value!r}")


def parse_integer(value) -> int:
    """Parse an int (given directly or as a string); floats are rejected."""
    if isinstance(value, bool):
        raise ValidationError(f"not an integer: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError as exc:
            raise ValidationError(f"not an integer: {value!r}") from exc
    raise ValidationError(f"not an integer: {value!r}")
