"""Pairwise relations between directed intervals.

Two distinct intervals ``(a,b;c,d)`` and ``(a',b';c',d')`` form a trapezoid
exactly when one of two cross-difference product equations holds:

    left:   (a-a')(d-d') = (b-b')(c-c')
    right:  (a-c')(d-b') = (c-a')(b-d')

The left equation says the line through the two initial points is parallel
to the line through the two terminal points; the right equation says the
same for the crossed pairing.  Degenerate configurations (both intervals on
one carrier line, shared endpoints, one being the other's reverse) satisfy
the equations too and are flagged rather than rejected.

The orthodiagonal variant replaces "parallel" with "perpendicular":

    left:   (b-b')(d-d') = -(a-a')(c-c')
    right:  (b-d')(d-b') = -(a-c')(c-a')

and the fixed-ratio variant scales one side of the trapezoid equations by a
nonzero constant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .primitives import Interval, intervals_equal
from .scalars import DEFAULT_TOLERANCE, Scalar, eq, is_zero, sign

COLLINEAR = "collinear"
SHARED_ENDPOINT = "shared-endpoint"
REVERSE_PAIR = "reverse-pair"

ORTHODIAGONAL = "orthodiagonal-quadrilateral"
EQUATION_ONLY = "equation-only"
NO_RELATION = "none"


@dataclass(frozen=True)
class PairRelation:
    """Which of the two pairing equations a pair satisfies, plus degeneracy
    flags.  ``multiplicity`` counts satisfied equations (0, 1 or 2)."""

    left: bool
    right: bool
    degeneracies: frozenset[str] = frozenset()

    @property
    def multiplicity(self) -> int:
        return int(self.left) + int(self.right)


def _require_distinct(i: Interval, j: Interval, tol: float) -> None:
    if intervals_equal(i, j, tol):
        raise ValueError("pair relations need two distinct intervals")


def _degeneracies(i: Interval, j: Interval, tol: float) -> frozenset[str]:
    flags = set()
    # all four endpoints on the carrier line of i
    ux, uy = i.c - i.a, i.d - i.b
    if is_zero(ux * (j.b - i.b) - uy * (j.a - i.a), tol) and is_zero(
        ux * (j.d - i.b) - uy * (j.c - i.a), tol
    ):
        flags.add(COLLINEAR)
    pts_i = (i.initial, i.terminal)
    pts_j = (j.initial, j.terminal)
    if any(eq(p[0], q[0], tol) and eq(p[1], q[1], tol) for p in pts_i for q in pts_j):
        flags.add(SHARED_ENDPOINT)
    if intervals_equal(i.reverse(), j, tol):
        flags.add(REVERSE_PAIR)
    return frozenset(flags)


def trapezoid_relation(i: Interval, j: Interval, tol: float = DEFAULT_TOLERANCE) -> PairRelation:
    """Evaluate both trapezoid equations for a pair of distinct intervals."""
    _require_distinct(i, j, tol)
    left = eq((i.a - j.a) * (i.d - j.d), (i.b - j.b) * (i.c - j.c), tol)
    right = eq((i.a - j.c) * (i.d - j.b), (i.c - j.a) * (i.b - j.d), tol)
    return PairRelation(left, right, _degeneracies(i, j, tol))


def orthodiagonal_relation(i: Interval, j: Interval, tol: float = DEFAULT_TOLERANCE) -> PairRelation:
    """Evaluate both perpendicular-pairing equations."""
    _require_distinct(i, j, tol)
    left = eq((i.b - j.b) * (i.d - j.d), -(i.a - j.a) * (i.c - j.c), tol)
    right = eq((i.b - j.d) * (i.d - j.b), -(i.a - j.c) * (i.c - j.a), tol)
    return PairRelation(left, right, _degeneracies(i, j, tol))


def ratio_relation(i: Interval, j: Interval, rho: Scalar,
                   tol: float = DEFAULT_TOLERANCE) -> PairRelation:
    """Trapezoid equations with the endpoint slopes in a fixed ratio.

    ``rho = 1`` reproduces :func:`trapezoid_relation` exactly.  Note the
    right equation is not symmetric in the pair for ``rho != 1``: it is the
    condition that the ratio-map image of ``i`` meets the image of
    ``j.reverse()``.
    """
    if is_zero(rho, tol):
        raise ValueError("ratio must be nonzero")
    _require_distinct(i, j, tol)
    left = eq((i.a - j.a) * (i.d - j.d), rho * (i.b - j.b) * (i.c - j.c), tol)
    right = eq((i.a - j.c) * (i.d - j.b), rho * (i.c - j.a) * (i.b - j.d), tol)
    return PairRelation(left, right, _degeneracies(i, j, tol))


def _orient(p, q, r, tol: float) -> int:
    return sign((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]), tol)


def _properly_cross(p1, p2, q1, q2, tol: float) -> bool:
    """True when open segments p1p2 and q1q2 meet in a single interior point
    of both (strict orientation tests, so collinear triples fail)."""
    o1 = _orient(p1, p2, q1, tol)
    o2 = _orient(p1, p2, q2, tol)
    o3 = _orient(q1, q2, p1, tol)
    o4 = _orient(q1, q2, p2, tol)
    return o1 * o2 < 0 and o3 * o4 < 0


def classify_orthodiagonal(i: Interval, j: Interval, tol: float = DEFAULT_TOLERANCE) -> str:
    """Separate genuine orthodiagonal quadrilaterals from pairs that merely
    satisfy one of the perpendicular-pairing equations.

    A pair qualifies as an orthodiagonal quadrilateral when an equation
    holds and the matching diagonals (initial-initial with terminal-terminal
    for the left equation, crossed for the right) properly cross: that
    forces the four endpoints into strictly convex position with ``i`` and
    ``j`` as opposite sides of the hull, and the crossing diagonals are
    perpendicular by the equation itself.
    """
    rel = orthodiagonal_relation(i, j, tol)
    if not (rel.left or rel.right):
        return NO_RELATION
    if rel.left and _properly_cross(i.initial, j.initial, i.terminal, j.terminal, tol):
        return ORTHODIAGONAL
    if rel.right and _properly_cross(i.initial, j.terminal, i.terminal, j.initial, tol):
        return ORTHODIAGONAL
    return EQUATION_ONLY
