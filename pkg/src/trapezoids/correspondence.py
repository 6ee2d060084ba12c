"""The interval/line correspondence in R^3 and group actions on intervals.

An interval ``(a,b;c,d)`` maps to the line ``(b,d,0) + t(a,c,1)``.  Two
distinct intervals satisfy the left trapezoid equation exactly when their
image lines meet in a point (the one exception: equal ``(a,c)`` parts with
different ``(b,d)`` parts give parallel image lines, which is cleared by a
generic rotation of the plane).  Reversing an interval before mapping picks
out the right equation instead.  Variant maps handle the perpendicular and
fixed-ratio relations the same way.

On the full set of an interval family plus all reverses (2N lines), the
number of trapezoid pairs T counted with equation multiplicity satisfies

    2*T = (number of meeting line pairs) - N,

because each interval meets its own reverse exactly once.  ``verify_i2l``
checks that identity; pairs of coincident lines (which occur when a set
contains an interval together with its reverse) count as meeting.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .primitives import Interval, Line3, line_intersect
from .relations import trapezoid_relation
from .scalars import (
    DEFAULT_TOLERANCE,
    EXACT,
    FLOAT,
    Scalar,
    common_mode,
    div,
    eq,
    is_zero,
)


class ExceptionalPairError(ValueError):
    """Two oriented intervals share their (a, c) parts but not (b, d): the
    image lines are parallel.  Apply :func:`generic_rotation` first."""


class GenericRotationError(RuntimeError):
    """No sampled rotation cleared the exceptional configurations (only
    possible in float mode, when a collision sits below the tolerance)."""


def dataset_mode(intervals: Sequence[Interval]) -> str:
    coords = [x for i in intervals for x in i.as_tuple()]
    return common_mode(coords)


# ---------------------------------------------------------------------------
# planar rotations and rigid motions

@dataclass(frozen=True)
class PlanarRotation:
    """A rotation of the plane stored as (cos, sin) on the unit circle.
    Exact mode uses rational circle points from the tan-half-angle map."""

    cosine: Scalar
    sine: Scalar

    def __post_init__(self):
        if not eq(self.cosine * self.cosine + self.sine * self.sine, 1):
            raise ValueError("(cosine, sine) must sit on the unit circle")

    @classmethod
    def identity(cls) -> "PlanarRotation":
        return cls(1, 0)

    @classmethod
    def from_tan_half(cls, t: Scalar) -> "PlanarRotation":
        """Rational rotation ((1-t^2)/(1+t^2), 2t/(1+t^2))."""
        one_plus = 1 + t * t
        return cls(div(1 - t * t, one_plus), div(2 * t, one_plus))

    @property
    def is_identity(self) -> bool:
        return eq(self.cosine, 1) and eq(self.sine, 0)

    def to_float(self) -> "PlanarRotation":
        return PlanarRotation(float(self.cosine), float(self.sine))

    def apply(self, point):
        x, y = point
        return (x * self.cosine - y * self.sine, x * self.sine + y * self.cosine)

    def inverse(self) -> "PlanarRotation":
        return PlanarRotation(self.cosine, -self.sine)


def rotate_interval(interval: Interval, rotation: PlanarRotation) -> Interval:
    ax, ay = rotation.apply(interval.initial)
    cx, cy = rotation.apply(interval.terminal)
    return Interval(ax, ay, cx, cy)


def _mat3_vec(m, v):
    return tuple(linalg.dot(row, v) for row in m)


@dataclass(frozen=True)
class RigidMotion3:
    """Orientation-preserving rigid motion of R^3: ``x -> R x + v``."""

    rotation: tuple[tuple[Scalar, Scalar, Scalar], ...]
    translation: tuple[Scalar, Scalar, Scalar] = (0, 0, 0)

    def __post_init__(self):
        object.__setattr__(self, "rotation", tuple(tuple(r) for r in self.rotation))
        object.__setattr__(self, "translation", tuple(self.translation))
        r = self.rotation
        for i in range(3):
            for j in range(3):
                want = 1 if i == j else 0
                got = sum(r[k][i] * r[k][j] for k in range(3))
                if not eq(got, want):
                    raise ValueError("rotation part must be orthogonal")
        if not eq(linalg.det3(r), 1):
            raise ValueError("rotation part must have determinant 1")

    @classmethod
    def identity(cls) -> "RigidMotion3":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @classmethod
    def translate(cls, p: Scalar, q: Scalar, r: Scalar) -> "RigidMotion3":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)), (p, q, r))

    @classmethod
    def rotate_x(cls, rot: PlanarRotation, translation=(0, 0, 0)) -> "RigidMotion3":
        co, si = rot.cosine, rot.sine
        return cls(((1, 0, 0), (0, co, -si), (0, si, co)), translation)

    @classmethod
    def rotate_z(cls, rot: PlanarRotation, translation=(0, 0, 0)) -> "RigidMotion3":
        co, si = rot.cosine, rot.sine
        return cls(((co, -si, 0), (si, co, 0), (0, 0, 1)), translation)

    @property
    def x_rotation_part(self):
        """The PlanarRotation around the x-axis, when the rotation has that
        shape; None otherwise."""
        r = self.rotation
        fixed_x = all(eq(r[0][j], 1 if j == 0 else 0) for j in range(3))
        if fixed_x and eq(r[1][0], 0) and eq(r[2][0], 0):
            return PlanarRotation(r[1][1], r[2][1])
        return None

    def apply_point(self, point):
        return linalg.vadd(_mat3_vec(self.rotation, point), self.translation)

    def apply_line(self, line: Line3) -> Line3:
        return Line3(self.apply_point(line.base), _mat3_vec(self.rotation, line.direction))


# ---------------------------------------------------------------------------
# the three interval -> line maps and their inverses

def to_line(interval: Interval) -> Line3:
    """Graph-form image line ``(b,d,0) + t(a,c,1)``."""
    return Line3((interval.b, interval.d, 0), (interval.a, interval.c, 1))


def _z0_point(line: Line3, tol: float):
    dz = line.direction[2]
    if is_zero(dz, tol):
        raise ValueError("line parallel to xy-plane has no interval preimage")
    t0 = div(-line.base[2], dz)
    return (
        line.base[0] + t0 * line.direction[0],
        line.base[1] + t0 * line.direction[1],
    )


def from_line(line: Line3, tol: float = DEFAULT_TOLERANCE) -> Interval:
    """Inverse of :func:`to_line` on lines not parallel to the xy-plane."""
    dz = line.direction[2]
    x0, y0 = _z0_point(line, tol)
    return Interval(div(line.direction[0], dz), x0, div(line.direction[1], dz), y0)


def to_line_perp(interval: Interval) -> Line3:
    """Perpendicular-relation image line ``(b,-a,0) + t(c,d,1)``."""
    return Line3((interval.b, -interval.a, 0), (interval.c, interval.d, 1))


def from_line_perp(line: Line3, tol: float = DEFAULT_TOLERANCE) -> Interval:
    dz = line.direction[2]
    x0, y0 = _z0_point(line, tol)
    return Interval(-y0, x0, div(line.direction[0], dz), div(line.direction[1], dz))


def to_line_ratio(interval: Interval, rho: Scalar) -> Line3:
    """Fixed-ratio image line ``(b,d,0) + t(a, rho*c, 1)``."""
    if is_zero(rho):
        raise ValueError("ratio must be nonzero")
    return Line3((interval.b, interval.d, 0), (interval.a, rho * interval.c, 1))


def from_line_ratio(line: Line3, rho: Scalar, tol: float = DEFAULT_TOLERANCE) -> Interval:
    if is_zero(rho, tol):
        raise ValueError("ratio must be nonzero")
    dz = line.direction[2]
    x0, y0 = _z0_point(line, tol)
    return Interval(div(line.direction[0], dz), x0, div(div(line.direction[1], dz), rho), y0)


# ---------------------------------------------------------------------------
# line sets and the counting identity

def _interval_key(interval: Interval, tol: float):
    if interval.mode == EXACT:
        return tuple(Fraction(x) for x in interval.as_tuple())
    return tuple(linalg.quantize(x, tol) for x in interval.as_tuple())


def check_distinct(intervals: Sequence[Interval], tol: float = DEFAULT_TOLERANCE) -> None:
    seen = {}
    for idx, interval in enumerate(intervals):
        key = _interval_key(interval, tol)
        if key in seen:
            raise ValueError(
                f"duplicate interval at positions {seen[key]} and {idx}: {interval!r}"
            )
        seen[key] = idx


def line_set(intervals: Sequence[Interval], tol: float = DEFAULT_TOLERANCE) -> list[Line3]:
    """The 2N image lines: each interval, then each reverse, in order."""
    dataset_mode(intervals)
    check_distinct(intervals, tol)
    forward = [to_line(i) for i in intervals]
    backward = [to_line(i.reverse()) for i in intervals]
    return forward + backward


def oriented_intervals(intervals: Sequence[Interval]) -> list[Interval]:
    return list(intervals) + [i.reverse() for i in intervals]


def _find_exceptional(oriented: Sequence[Interval], tol: float):
    """Index pair of oriented intervals whose image lines are parallel and
    distinct, or None.  Exact mode groups by the (a, c) part."""
    mode = dataset_mode(oriented) if oriented else EXACT
    groups: dict = {}
    for idx, itv in enumerate(oriented):
        if mode == EXACT:
            key = (Fraction(itv.a), Fraction(itv.c))
        else:
            key = (linalg.quantize(itv.a, tol), linalg.quantize(itv.c, tol))
        groups.setdefault(key, []).append(idx)
    for members in groups.values():
        for pos, p in enumerate(members):
            for q in members[pos + 1:]:
                u, v = oriented[p], oriented[q]
                if not (eq(u.a, v.a, tol) and eq(u.c, v.c, tol)):
                    continue  # quantization collision, not a real match
                if not (eq(u.b, v.b, tol) and eq(u.d, v.d, tol)):
                    return p, q
    return None


def has_exceptional_pair(intervals: Sequence[Interval], tol: float = DEFAULT_TOLERANCE) -> bool:
    return _find_exceptional(oriented_intervals(intervals), tol) is not None


@dataclass(frozen=True)
class I2LReport:
    """Outcome of the counting identity: N intervals, T trapezoid pairs with
    multiplicity, P meeting line pairs, and whether 2T = P - N."""

    n: int
    trapezoids: int
    intersecting_pairs: int
    holds: bool


def verify_i2l(intervals: Sequence[Interval], tol: float = DEFAULT_TOLERANCE) -> I2LReport:
    """Count trapezoid pairs and meeting line pairs and compare.

    The input must already be free of exceptional parallel configurations
    (including each interval against all reverses); otherwise this raises
    :class:`ExceptionalPairError` so the caller can apply
    :func:`generic_rotation`.
    """
    lines = line_set(intervals, tol)
    bad = _find_exceptional(oriented_intervals(intervals), tol)
    if bad is not None:
        raise ExceptionalPairError(
            f"oriented intervals {bad[0]} and {bad[1]} map to parallel lines; "
            "apply generic_rotation first"
        )
    n = len(intervals)
    trapezoids = 0
    for i in range(n):
        for j in range(i + 1, n):
            trapezoids += trapezoid_relation(intervals[i], intervals[j], tol).multiplicity
    meets = 0
    m = len(lines)
    for i in range(m):
        for j in range(i + 1, m):
            kind = line_intersect(lines[i], lines[j], tol).kind
            if kind in ("point", "identical"):
                meets += 1
    return I2LReport(n, trapezoids, meets, 2 * trapezoids == meets - n)


def generic_rotation(intervals: Sequence[Interval], seed: int = 0,
                     tol: float = DEFAULT_TOLERANCE,
                     max_attempts: int = 64) -> tuple[list[Interval], PlanarRotation]:
    """Rotate the whole configuration by a rational angle so that no pair of
    image lines (reverses included) is parallel.

    Deterministic for a given seed; returns the identity rotation when the
    input is already generic.  Only finitely many angles are obstructed, so
    a suitable rotation always exists in exact mode.
    """
    intervals = list(intervals)
    mode = dataset_mode(intervals) if intervals else EXACT
    identity = PlanarRotation.identity()
    if _find_exceptional(oriented_intervals(intervals), tol) is None:
        return intervals, identity
    rng = random.Random(seed)
    for _ in range(max_attempts):
        t = Fraction(rng.randint(1, 9973), rng.randint(1, 9973))
        if rng.random() < 0.5:
            t = -t
        rotation = PlanarRotation.from_tan_half(t)
        if mode == FLOAT:
            rotation = rotation.to_float()
        rotated = [rotate_interval(i, rotation) for i in intervals]
        if _find_exceptional(oriented_intervals(rotated), tol) is None:
            return rotated, rotation
    raise GenericRotationError(
        f"no generic rotation found in {max_attempts} attempts; "
        "the configuration has collisions below the tolerance"
    )


# ---------------------------------------------------------------------------
# induced actions of rigid motions on intervals

def translate_action(interval: Interval, p: Scalar, q: Scalar, r: Scalar) -> Interval:
    """Effect of translating the image line by (p, q, r):
    ``(a,b;c,d) -> (a, b+p-ra; c, d+q-rc)``."""
    return Interval(
        interval.a,
        interval.b + p - r * interval.a,
        interval.c,
        interval.d + q - r * interval.c,
    )


def rotate_x_action(interval: Interval, rot: PlanarRotation,
                    tol: float = DEFAULT_TOLERANCE) -> Interval:
    """Effect of rotating the image line around the x-axis.

    The denominator ``c*sin + cos`` is the z-component of the rotated
    direction; when it vanishes the image line is parallel to the xy-plane
    and has no interval preimage.
    """
    co, si = rot.cosine, rot.sine
    a, b, c, d = interval.as_tuple()
    den = c * si + co
    if is_zero(den, tol):
        raise ValueError("image line parallel to xy-plane")
    return Interval(
        div(a, den),
        div((b * c - a * d) * si + b * co, den),
        div(c * co - si, den),
        div(d, den),
    )
