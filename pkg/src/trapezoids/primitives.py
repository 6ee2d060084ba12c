"""Geometric value types: plane intervals, lines in R^2 and R^3, planes.

All values are immutable and hashable; every operation is pure.  Coordinates
follow the scalar contract of :mod:`trapezoids.scalars` (one numeric mode per
object, ints welcome in both).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import linalg
from .scalars import (
    DEFAULT_TOLERANCE,
    EXACT,
    Scalar,
    common_mode,
    div,
    eq,
    is_exact,
    is_zero,
)


def _check_scalars(values) -> str:
    """Validate a coordinate tuple and return its mode."""
    return common_mode(values)


@dataclass(frozen=True)
class Interval:
    """A directed segment in the plane: initial point ``(a, b)``, terminal
    point ``(c, d)``.  Zero-length intervals are rejected."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar

    def __post_init__(self):
        _check_scalars((self.a, self.b, self.c, self.d))
        if eq(self.a, self.c) and eq(self.b, self.d):
            raise ValueError(f"interval must have positive length: {self!r}")

    @property
    def mode(self) -> str:
        return common_mode((self.a, self.b, self.c, self.d))

    @property
    def initial(self) -> tuple[Scalar, Scalar]:
        return (self.a, self.b)

    @property
    def terminal(self) -> tuple[Scalar, Scalar]:
        return (self.c, self.d)

    def reverse(self) -> "Interval":
        """The same segment traversed the other way."""
        return Interval(self.c, self.d, self.a, self.b)

    def as_tuple(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.a, self.b, self.c, self.d)


def reverse(interval: Interval) -> Interval:
    return interval.reverse()


def intervals_equal(i: Interval, j: Interval, tol: float = DEFAULT_TOLERANCE) -> bool:
    """Componentwise equality under the active mode."""
    return all(eq(x, y, tol) for x, y in zip(i.as_tuple(), j.as_tuple()))


@dataclass(frozen=True)
class Line3:
    """A line ``base + t * direction`` in R^3.

    Graph-form lines (the images of intervals) have ``base`` on the plane
    z = 0 and direction z-component 1; general-form lines produced by rigid
    motions are also supported.
    """

    base: tuple[Scalar, Scalar, Scalar]
    direction: tuple[Scalar, Scalar, Scalar]

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "direction", tuple(self.direction))
        _check_scalars(self.base + self.direction)
        if all(eq(x, 0) for x in self.direction):
            raise ValueError("line direction must be nonzero")

    @property
    def mode(self) -> str:
        return common_mode(self.base + self.direction)

    def point_at(self, t: Scalar) -> tuple[Scalar, Scalar, Scalar]:
        return tuple(b + t * d for b, d in zip(self.base, self.direction))

    def canonical(self, tol: float = DEFAULT_TOLERANCE) -> "Line3":
        """Equal lines get equal canonical representatives: the direction is
        scaled so its first significant component is 1, and the base slides
        to zero out that coordinate."""
        d = self.direction
        if self.mode == EXACT:
            k = next(i for i, x in enumerate(d) if x != 0)
        else:
            m = max(abs(x) for x in d)
            k = next(i for i, x in enumerate(d) if abs(x) > 0.5 * m)
        direction = tuple(div(x, d[k]) for x in d)
        t0 = div(-self.base[k], d[k])
        base = tuple(b + t0 * x for b, x in zip(self.base, d))
        return Line3(base, direction)

    def key(self, tol: float = DEFAULT_TOLERANCE):
        """Hashable grouping key; equal lines collide."""
        c = self.canonical(tol)
        values = c.direction + c.base
        if c.mode == EXACT:
            return values
        return tuple(linalg.quantize(v, tol) for v in values)


@dataclass(frozen=True)
class LineMeet:
    """Outcome of intersecting two lines in R^3."""

    kind: str  # "point" | "parallel" | "skew" | "identical"
    point: Optional[tuple[Scalar, Scalar, Scalar]] = None


def line_intersect(first: Line3, second: Line3, tol: float = DEFAULT_TOLERANCE) -> LineMeet:
    """Classify the relative position of two lines; for a one-point meet the
    point is returned."""
    d1, d2 = first.direction, second.direction
    w = linalg.vsub(second.base, first.base)
    c12 = linalg.cross3(d1, d2)
    if all(is_zero(x, tol) for x in c12):
        if all(is_zero(x, tol) for x in linalg.cross3(d1, w)):
            return LineMeet("identical")
        return LineMeet("parallel")
    triple = linalg.dot(w, c12)
    if not is_zero(triple, tol):
        return LineMeet("skew")
    s = div(linalg.dot(linalg.cross3(w, d2), c12), linalg.dot(c12, c12))
    return LineMeet("point", first.point_at(s))


@dataclass(frozen=True)
class PlanarLine:
    """A line ``a*x + b*y + c = 0`` in the plane, stored in canonical form
    (first nonzero coefficient scaled to 1 in exact mode)."""

    a: Scalar
    b: Scalar
    c: Scalar

    def __post_init__(self):
        _check_scalars((self.a, self.b, self.c))
        if eq(self.a, 0) and eq(self.b, 0):
            raise ValueError("planar line needs a nonzero linear part")

    def canonical(self, tol: float = DEFAULT_TOLERANCE) -> "PlanarLine":
        coeffs = (self.a, self.b, self.c)
        if common_mode(coeffs) == EXACT:
            lead = next(x for x in coeffs if x != 0)
        else:
            m = max(abs(x) for x in coeffs)
            lead = next(x for x in coeffs if abs(x) > 0.5 * m)
        return PlanarLine(*(div(x, lead) for x in coeffs))

    @classmethod
    def through(cls, p, q) -> "PlanarLine":
        """Line through two distinct points."""
        a = p[1] - q[1]
        b = q[0] - p[0]
        c = p[0] * q[1] - q[0] * p[1]
        return cls(a, b, c).canonical()

    @classmethod
    def slope_intercept(cls, slope: Scalar, intercept: Scalar) -> "PlanarLine":
        """The line y = slope*x + intercept."""
        return cls(slope, -1, intercept).canonical()

    def evaluate(self, point) -> Scalar:
        return self.a * point[0] + self.b * point[1] + self.c

    def contains(self, point, tol: float = DEFAULT_TOLERANCE) -> bool:
        return is_zero(self.evaluate(point), tol)


@dataclass(frozen=True)
class Plane3:
    """A plane ``a*x + b*y + c*z + d = 0`` in R^3."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar

    def __post_init__(self):
        _check_scalars((self.a, self.b, self.c, self.d))
        if all(eq(x, 0) for x in (self.a, self.b, self.c)):
            raise ValueError("plane needs a nonzero normal")

    @property
    def normal(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.a, self.b, self.c)

    def coefficients(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.a, self.b, self.c, self.d)

    def canonical(self, tol: float = DEFAULT_TOLERANCE) -> "Plane3":
        coeffs = self.coefficients()
        if common_mode(coeffs) == EXACT:
            lead = next(x for x in coeffs if x != 0)
        else:
            m = max(abs(x) for x in coeffs)
            lead = next(x for x in coeffs if abs(x) > 0.5 * m)
        return Plane3(*(div(x, lead) for x in coeffs))

    def key(self, tol: float = DEFAULT_TOLERANCE):
        c = self.canonical(tol)
        values = c.coefficients()
        if common_mode(values) == EXACT:
            return values
        return tuple(linalg.quantize(v, tol) for v in values)

    def evaluate(self, point) -> Scalar:
        return self.a * point[0] + self.b * point[1] + self.c * point[2] + self.d

    def contains_point(self, point, tol: float = DEFAULT_TOLERANCE) -> bool:
        return is_zero(self.evaluate(point), tol)

    def contains_line(self, line: Line3, tol: float = DEFAULT_TOLERANCE) -> bool:
        return (
            is_zero(linalg.dot(self.normal, line.direction), tol)
            and self.contains_point(line.base, tol)
        )


def plane_of_lines(first: Line3, second: Line3, tol: float = DEFAULT_TOLERANCE) -> Optional[Plane3]:
    """The unique plane containing two intersecting or parallel (distinct)
    lines; None for skew or identical pairs."""
    meet = line_intersect(first, second, tol)
    if meet.kind == "point":
        normal = linalg.cross3(first.direction, second.direction)
    elif meet.kind == "parallel":
        w = linalg.vsub(second.base, first.base)
        normal = linalg.cross3(first.direction, w)
    else:
        return None
    d = -linalg.dot(normal, first.base)
    return Plane3(normal[0], normal[1], normal[2], d).canonical(tol)
