"""Numeric contract shared by every geometric type in this package.

Coordinates live in one of two modes:

* ``exact``  -- arbitrary-precision rationals (`fractions.Fraction`; a plain
  `int` is accepted anywhere a rational is).  Arithmetic and equality are
  exact.
* ``float``  -- IEEE doubles, compared with a relative tolerance:
  ``x == y  iff  |x - y| <= tol * max(1, |x|, |y|)``.

A dataset carries exactly one mode.  Comparing a rational with a float
raises :class:`MixedModeError`; `int` interoperates with both modes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction, float]

EXACT = "exact"
FLOAT = "float"

DEFAULT_TOLERANCE = 1e-9


class MixedModeError(ValueError):
    """Exact rationals and floats met inside one comparison or dataset."""


def is_exact(value: Scalar) -> bool:
    return isinstance(value, (int, Fraction))


def mode_of_value(value: Scalar) -> str:
    if isinstance(value, (int, Fraction)):
        return EXACT
    if isinstance(value, float):
        return FLOAT
    raise TypeError(f"not a scalar: {value!r}")


def common_mode(values: Iterable[Scalar]) -> str:
    """Mode of a collection.  Plain ints are mode-neutral; an empty or
    all-int collection counts as exact."""
    saw_fraction = False
    saw_float = False
    for v in values:
        if isinstance(v, Fraction):
            saw_fraction = True
        elif isinstance(v, float):
            saw_float = True
        elif not isinstance(v, int):
            raise TypeError(f"not a scalar: {v!r}")
    if saw_fraction and saw_float:
        raise MixedModeError("dataset mixes exact rationals with floats")
    return FLOAT if saw_float else EXACT


def eq(x: Scalar, y: Scalar, tol: float = DEFAULT_TOLERANCE) -> bool:
    """Mode-aware equality.  Exact values compare exactly; floats compare
    with relative tolerance ``|x - y| <= tol * max(1, |x|, |y|)``."""
    if isinstance(x, float) or isinstance(y, float):
        if isinstance(x, Fraction) or isinstance(y, Fraction):
            raise MixedModeError("cannot compare an exact rational with a float")
        return abs(x - y) <= tol * max(1.0, abs(x), abs(y))
    return x == y


def is_zero(x: Scalar, tol: float = DEFAULT_TOLERANCE) -> bool:
    return eq(x, 0, tol)


def sign(x: Scalar, tol: float = DEFAULT_TOLERANCE) -> int:
    """-1, 0 or +1 under the mode's notion of zero."""
    if is_zero(x, tol):
        return 0
    return 1 if x > 0 else -1


def div(x: Scalar, y: Scalar) -> Scalar:
    """Division that keeps exact operands exact (int/int stays rational)."""
    if isinstance(x, float) or isinstance(y, float):
        if isinstance(x, Fraction) or isinstance(y, Fraction):
            raise MixedModeError("cannot divide an exact rational by a float")
        return x / y
    return Fraction(x) / Fraction(y)


def parse_scalar(raw, mode: str) -> Scalar:
    """Parse one dataset value.  Exact mode wants strings like ``"3"`` or
    ``"-5/7"``; float mode wants JSON numbers."""
    if mode == EXACT:
        if not isinstance(raw, str):
            raise ValueError(f"exact-mode values must be strings, got {raw!r}")
        return Fraction(raw)
    if mode == FLOAT:
        if isinstance(raw, bool) or not isinstance(raw, (int, float)):
            raise ValueError(f"float-mode values must be numbers, got {raw!r}")
        return float(raw)
    raise ValueError(f"unknown mode {mode!r}")


def format_scalar(value: Scalar):
    """Inverse of :func:`parse_scalar`: JSON-ready representation."""
    if isinstance(value, float):
        return value
    return str(Fraction(value))
