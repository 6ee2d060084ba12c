"""Constructors for every interval family with guaranteed pair structure.

* parallel-line families (all image lines concurrent),
* pencil/homothety families (all image lines coplanar),
* the two rulings of the standard hyperboloid and hyperbolic paraboloid,
* the two line-and-hyperbola families whose image lines fill the quadric
  ``xy = z^2 + z(u+1) + u + v*x``,
* translated / rotated copies of any family, and
* pullbacks of ruled-surface lines through the perpendicular and
  fixed-ratio correspondences.

Everything is exact when fed rational parameters; rational points on the
unit circle stand in for angles.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .conics import Quadric
from .correspondence import (
    RigidMotion3,
    from_line,
    from_line_perp,
    from_line_ratio,
    to_line,
    translate_action,
    rotate_x_action,
)
from .primitives import Interval, Line3
from .scalars import DEFAULT_TOLERANCE, Scalar, div, eq, is_zero

FAMILY1 = "family1"
FAMILY2 = "family2"
BOTH = "both"


def circle_point(t: Scalar) -> tuple[Scalar, Scalar]:
    """Rational point ((1-t^2)/(1+t^2), 2t/(1+t^2)) on the unit circle."""
    one_plus = 1 + t * t
    return (div(1 - t * t, one_plus), div(2 * t, one_plus))


def _dedupe(intervals: Sequence[Interval], label: str) -> list[Interval]:
    seen = set()
    out = []
    for itv in intervals:
        key = itv.as_tuple()
        if key in seen:
            warnings.warn(f"{label}: duplicate sample produced a repeated interval; dropped")
            continue
        seen.add(key)
        out.append(itv)
    return out


# ---------------------------------------------------------------------------
# concurrency (parallel carrier lines)

def gen_parallel_lines(slope: Scalar, intercept1: Scalar, intercept2: Scalar,
                       abscissae: Sequence[tuple[Scalar, Scalar]]) -> list[Interval]:
    """Intervals with the initial endpoint on ``y = slope*x + intercept1``
    and the terminal endpoint on ``y = slope*x + intercept2``.

    The image lines all pass through ``(intercept1, intercept2, -slope)``.
    """
    if eq(intercept1, intercept2):
        raise ValueError("the two parallel lines must be distinct")
    out = [
        Interval(x1, slope * x1 + intercept1, x2, slope * x2 + intercept2)
        for x1, x2 in abscissae
    ]
    return _dedupe(out, "gen_parallel_lines")


def parallel_lines_point(slope: Scalar, intercept1: Scalar,
                         intercept2: Scalar) -> tuple[Scalar, Scalar, Scalar]:
    """The common point of the image lines of :func:`gen_parallel_lines`."""
    return (intercept1, intercept2, -slope)


# ---------------------------------------------------------------------------
# pencils (coplanar image lines)

def gen_pencil(plane_a: Scalar, plane_b: Scalar, plane_c: Scalar, plane_d: Scalar,
               samples: Sequence[tuple[Scalar, Scalar]]) -> list[Interval]:
    """Intervals whose image lines lie in ``A x + B y + C z + D = 0``, i.e.
    ``A*a + B*c + C = 0`` and ``A*b + B*d + D = 0``.

    With B nonzero each sample point is the initial endpoint and the
    terminal endpoint is solved for; with B = 0 the initial endpoint is
    pinned to ``(-C/A, -D/A)`` and samples become terminal endpoints."""
    if eq(plane_a, 0) and eq(plane_b, 0):
        raise ValueError("pencil plane needs (A, B) != (0, 0)")
    out = []
    if not eq(plane_b, 0):
        for sx, sy in samples:
            cx = div(-(plane_c + plane_a * sx), plane_b)
            dy = div(-(plane_d + plane_a * sy), plane_b)
            out.append(Interval(sx, sy, cx, dy))
    else:
        ax = div(-plane_c, plane_a)
        by = div(-plane_d, plane_a)
        for sx, sy in samples:
            out.append(Interval(ax, by, sx, sy))
    return _dedupe(out, "gen_pencil")


# ---------------------------------------------------------------------------
# hyperboloid rulings

def hyperboloid_quadric(x_semiaxis: Scalar, y_semiaxis: Scalar,
                        z_semiaxis: Scalar) -> Quadric:
    """``x^2/A^2 + y^2/B^2 - z^2/C^2 - 1 = 0``."""
    a2, b2, c2 = x_semiaxis ** 2, y_semiaxis ** 2, z_semiaxis ** 2
    return Quadric((div(1, a2), div(1, b2), div(-1, c2), 0, 0, 0, 0, 0, 0, -1))


def gen_hyperboloid_rulings(x_semiaxis: Scalar, y_semiaxis: Scalar, z_semiaxis: Scalar,
                            circle_points: Sequence[tuple[Scalar, Scalar]],
                            which: str = BOTH) -> list[Interval]:
    """Pullbacks of the two rulings of the standard one-sheet hyperboloid.

    For a circle point (cos, sin) the two families are
    ``(A/C cos, A sin;  B/C sin, -B cos)`` and
    ``(A/C cos, A sin; -B/C sin,  B cos)``.
    Initial endpoints sweep the ellipse ``C^2 x^2 + y^2 = A^2``; terminal
    endpoints sweep ``C^2 x^2 + y^2 = B^2``.  When A = B the second family
    consists of the reverses of the first and any pair from the union forms
    a trapezoid."""
    a, b, c = x_semiaxis, y_semiaxis, z_semiaxis
    if is_zero(a) or is_zero(b) or is_zero(c):
        raise ValueError("hyperboloid semi-axes must be nonzero")
    out = []
    for co, si in circle_points:
        if not eq(co * co + si * si, 1):
            raise ValueError(f"({co}, {si}) is not on the unit circle")
        if which in (FAMILY1, BOTH):
            out.append(Interval(div(a, c) * co, a * si, div(b, c) * si, -b * co))
        if which in (FAMILY2, BOTH):
            out.append(Interval(div(a, c) * co, a * si, -div(b, c) * si, b * co))
    return _dedupe(out, "gen_hyperboloid_rulings")


# ---------------------------------------------------------------------------
# hyperbolic paraboloid rulings

def paraboloid_quadric(x_scale: Scalar, y_scale: Scalar) -> Quadric:
    """``x^2/A^2 - y^2/B^2 - z = 0``."""
    a2, b2 = x_scale ** 2, y_scale ** 2
    return Quadric((div(1, a2), div(-1, b2), 0, 0, 0, 0, 0, 0, -1, 0))


def gen_paraboloid_rulings(x_scale: Scalar, y_scale: Scalar,
                           lambdas: Sequence[Scalar],
                           which: str = BOTH) -> list[Interval]:
    """Pullbacks of the two rulings of ``z = x^2/A^2 - y^2/B^2``.

    For a nonzero parameter L the families are
    ``(A L/2, A/(2L);  B L/2, -B/(2L))`` and
    ``(A L/2, A/(2L); -B L/2,  B/(2L))``.
    Initial endpoints sit on the hyperbola ``y = A^2/(4x)``, terminal
    endpoints on ``y = -B^2/(4x)``; first-family members cross the x-axis,
    second-family members the y-axis."""
    a, b = x_scale, y_scale
    if is_zero(a) or is_zero(b):
        raise ValueError("paraboloid scales must be nonzero")
    out = []
    for lam in lambdas:
        if is_zero(lam):
            raise ValueError("ruling parameter must be nonzero")
        ix, iy = div(a * lam, 2), div(a, 2 * lam)
        if which in (FAMILY1, BOTH):
            out.append(Interval(ix, iy, div(b * lam, 2), div(-b, 2 * lam)))
        if which in (FAMILY2, BOTH):
            out.append(Interval(ix, iy, div(-b * lam, 2), div(b, 2 * lam)))
    return _dedupe(out, "gen_paraboloid_rulings")


# ---------------------------------------------------------------------------
# the line-and-hyperbola families (degenerate endpoint conics)

def subcase_ii_quadric(u: Scalar, v: Scalar) -> Quadric:
    """``xy - z^2 - (u+1) z - v x - u = 0``; a cone exactly when u = 1."""
    return Quadric((0, 0, -1, 1, 0, 0, -v, 0, -(u + 1), -u))


def gen_subcase_ii(u: Scalar, v: Scalar,
                   t_samples: Sequence[Scalar]) -> tuple[list[Interval], list[Interval]]:
    """The two families ``(t, t; 1/t, u/t + v)`` and ``(t, ut; 1/t, v + 1/t)``.

    Initial endpoints lie on the lines ``y = x`` and ``y = u x``; the
    (a, c) pairs lie on the hyperbola ``y = 1/x``.  Both families' image
    lines fill :func:`subcase_ii_quadric`.  The families coincide when
    u = 1 (the quadric degenerates to a cone)."""
    fam1, fam2 = [], []
    for t in t_samples:
        if is_zero(t):
            raise ValueError("family parameter must be nonzero")
        inv = div(1, t)
        fam1.append(Interval(t, t, inv, u * inv + v))
        fam2.append(Interval(t, u * t, inv, v + inv))
    return _dedupe(fam1, "gen_subcase_ii"), _dedupe(fam2, "gen_subcase_ii")


# ---------------------------------------------------------------------------
# rigid transformations and alternative pullbacks

@dataclass(frozen=True)
class TransformOutcome:
    """Transformed family plus the input indices whose image line became
    parallel to the xy-plane (those have no interval preimage)."""

    intervals: tuple[Interval, ...]
    dropped: tuple[int, ...] = field(default_factory=tuple)


def gen_transformed(intervals: Sequence[Interval],
                    motion: RigidMotion3,
                    tol: float = DEFAULT_TOLERANCE) -> TransformOutcome:
    """Apply a rigid motion of R^3 to a family through the correspondence.

    Pure translations and x-axis rotations go through the closed-form
    interval actions; any other rotation routes through map-to-line,
    move, map-back."""
    x_rot = motion.x_rotation_part
    kept, dropped = [], []
    for idx, itv in enumerate(intervals):
        try:
            if x_rot is not None:
                moved = itv if x_rot.is_identity else rotate_x_action(itv, x_rot, tol)
                moved = translate_action(moved, *motion.translation)
            else:
                moved = from_line(motion.apply_line(to_line(itv)), tol)
        except ValueError:
            dropped.append(idx)
            continue
        kept.append(moved)
    return TransformOutcome(tuple(kept), tuple(dropped))


def gen_perp_pullback(lines: Sequence[Line3],
                      tol: float = DEFAULT_TOLERANCE) -> TransformOutcome:
    """Pull ruled-surface lines back through the perpendicular
    correspondence; cross-ruling interval pairs then satisfy the left
    orthodiagonal equation."""
    kept, dropped = [], []
    for idx, line in enumerate(lines):
        try:
            kept.append(from_line_perp(line, tol))
        except ValueError:
            dropped.append(idx)
    return TransformOutcome(tuple(kept), tuple(dropped))


def gen_ratio_pullback(lines: Sequence[Line3], rho: Scalar,
                       tol: float = DEFAULT_TOLERANCE) -> TransformOutcome:
    """Pull ruled-surface lines back through the fixed-ratio correspondence;
    cross-ruling pairs satisfy the left ratio equation."""
    kept, dropped = [], []
    for idx, line in enumerate(lines):
        try:
            kept.append(from_line_ratio(line, rho, tol))
        except ValueError:
            dropped.append(idx)
    return TransformOutcome(tuple(kept), tuple(dropped))


# ---------------------------------------------------------------------------
# CLI-facing parameter bundle

@dataclass(frozen=True)
class FamilyParams:
    """Validated parameter bundle for one family, as driven from the CLI."""

    family: str  # "parallel" | "pencil" | "hyperboloid" | "paraboloid" | "subcase-ii"
    slope: Optional[Scalar] = None
    intercept1: Optional[Scalar] = None
    intercept2: Optional[Scalar] = None
    plane: Optional[tuple[Scalar, Scalar, Scalar, Scalar]] = None
    semiaxes: Optional[tuple[Scalar, ...]] = None
    u: Optional[Scalar] = None
    v: Optional[Scalar] = None
    which: str = BOTH

    def build(self, samples) -> list[Interval]:
        if self.family == "parallel":
            return gen_parallel_lines(self.slope, self.intercept1, self.intercept2, samples)
        if self.family == "pencil":
            return gen_pencil(*self.plane, samples)
        if self.family == "hyperboloid":
            points = [circle_point(t) for t in samples]
            return gen_hyperboloid_rulings(*self.semiaxes, points, self.which)
        if self.family == "paraboloid":
            return gen_paraboloid_rulings(*self.semiaxes, samples, self.which)
        if self.family == "subcase-ii":
            fam1, fam2 = gen_subcase_ii(self.u, self.v, samples)
            if self.which == FAMILY1:
                return fam1
            if self.which == FAMILY2:
                return fam2
            return _dedupe(fam1 + fam2, "gen_subcase_ii")
        raise ValueError(f"unknown family {self.family!r}")
