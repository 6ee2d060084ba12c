"""Degree-2 curves in the plane and quadric surfaces in R^3.

Classification never touches numeric eigensolvers: every decision is a sign
test on determinants and principal minors, so exact mode stays exact.  The
scaled matrix ``2M`` is used throughout to avoid half-integer entries.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .primitives import Line3
from .scalars import DEFAULT_TOLERANCE, Scalar, common_mode, eq, is_zero, sign

# conic classes
ELLIPSE = "ellipse"
PARABOLA = "parabola"
HYPERBOLA = "hyperbola"
LINE_PAIR = "line-pair"
PARALLEL_LINE_PAIR = "parallel-line-pair"
DOUBLE_LINE = "double-line"
POINT_CONIC = "point"
EMPTY_CONIC = "empty"

# quadric classes
HYPERBOLOID_ONE_SHEET = "hyperboloid-one-sheet"
HYPERBOLIC_PARABOLOID = "hyperbolic-paraboloid"
CONE = "cone"
PLANE_PAIR = "plane-pair"
OTHER_QUADRIC = "other-nondoubly-ruled"
DEGENERATE_QUADRIC = "degenerate"

DOUBLY_RULED = frozenset({HYPERBOLOID_ONE_SHEET, HYPERBOLIC_PARABOLOID})

#: monomial order of the ten quadric coefficients
QUADRIC_MONOMIALS = ("xx", "yy", "zz", "xy", "xz", "yz", "x", "y", "z", "1")


@dataclass(frozen=True)
class Conic:
    """``q1*x^2 + q2*x*y + q3*y^2 + q4*x + q5*y + q6 = 0``."""

    coefficients: tuple[Scalar, Scalar, Scalar, Scalar, Scalar, Scalar]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if len(self.coefficients) != 6:
            raise ValueError("a conic has six coefficients")
        common_mode(self.coefficients)
        if all(eq(q, 0) for q in self.coefficients):
            raise ValueError("conic coefficients must not all vanish")

    def canonical(self, tol: float = DEFAULT_TOLERANCE) -> "Conic":
        q = self.coefficients
        if common_mode(q) == "exact":
            return Conic(linalg.canonical_exact_vector(q))
        return Conic(linalg.canonical_float_vector(q, tol))

    def key(self, tol: float = DEFAULT_TOLERANCE):
        q = self.canonical(tol).coefficients
        if common_mode(q) == "exact":
            return q
        return tuple(linalg.quantize(v, tol) for v in q)


def conic_eval(conic: Conic, point) -> Scalar:
    q1, q2, q3, q4, q5, q6 = conic.coefficients
    x, y = point
    return q1 * x * x + q2 * x * y + q3 * y * y + q4 * x + q5 * y + q6


def conic_contains(conic: Conic, point, tol: float = DEFAULT_TOLERANCE) -> bool:
    return is_zero(conic_eval(conic, point), tol)


def _conic_matrix2(q):
    """Twice the symmetric matrix of the quadratic form (integer-friendly)."""
    q1, q2, q3, q4, q5, q6 = q
    return (
        (2 * q1, q2, q4),
        (q2, 2 * q3, q5),
        (q4, q5, 2 * q6),
    )


def _principal_minors2_sum(m) -> Scalar:
    n = len(m)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            total = total + m[i][i] * m[j][j] - m[i][j] * m[j][i]
    return total


def conic_classify(coefficients, tol: float = DEFAULT_TOLERANCE) -> str:
    """Classify by the discriminant and the rank/determinant of the
    associated symmetric matrix."""
    conic = coefficients if isinstance(coefficients, Conic) else Conic(tuple(coefficients))
    q = conic.coefficients
    q1, q2, q3 = q[0], q[1], q[2]
    m2 = _conic_matrix2(q)
    d3 = sign(linalg.det3(m2), tol)
    delta = sign(q2 * q2 - 4 * q1 * q3, tol)
    if d3 != 0:
        if delta < 0:
            return ELLIPSE if d3 * sign(q1 + q3, tol) < 0 else EMPTY_CONIC
        return PARABOLA if delta == 0 else HYPERBOLA
    if delta > 0:
        return LINE_PAIR
    if delta < 0:
        return POINT_CONIC
    rank = linalg.matrix_rank(m2, tol)
    if rank == 2:
        return PARALLEL_LINE_PAIR if sign(_principal_minors2_sum(m2), tol) < 0 else EMPTY_CONIC
    return DOUBLE_LINE


@dataclass(frozen=True)
class Quadric:
    """Quadratic surface with coefficients in the monomial order
    ``xx, yy, zz, xy, xz, yz, x, y, z, 1``."""

    coefficients: tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if len(self.coefficients) != 10:
            raise ValueError("a quadric has ten coefficients")
        common_mode(self.coefficients)
        if all(eq(q, 0) for q in self.coefficients):
            raise ValueError("quadric coefficients must not all vanish")

    def canonical(self, tol: float = DEFAULT_TOLERANCE) -> "Quadric":
        q = self.coefficients
        if common_mode(q) == "exact":
            return Quadric(linalg.canonical_exact_vector(q))
        return Quadric(linalg.canonical_float_vector(q, tol))

    def key(self, tol: float = DEFAULT_TOLERANCE):
        q = self.canonical(tol).coefficients
        if common_mode(q) == "exact":
            return q
        return tuple(linalg.quantize(v, tol) for v in q)


def quadric_eval(quadric: Quadric, point) -> Scalar:
    xx, yy, zz, xy, xz, yz, cx, cy, cz, c1 = quadric.coefficients
    x, y, z = point
    return (
        xx * x * x + yy * y * y + zz * z * z
        + xy * x * y + xz * x * z + yz * y * z
        + cx * x + cy * y + cz * z + c1
    )


def _quadric_matrix2(q):
    xx, yy, zz, xy, xz, yz, cx, cy, cz, c1 = q
    return (
        (2 * xx, xy, xz, cx),
        (xy, 2 * yy, yz, cy),
        (xz, yz, 2 * zz, cz),
        (cx, cy, cz, 2 * c1),
    )


def _block_is_mixed(a2, rank3: int, tol: float) -> bool:
    """Whether the nonzero eigenvalues of the quadratic part carry both
    signs.  Decided via Sylvester leading minors (rank 3) or the second
    elementary symmetric function (rank 2)."""
    if rank3 == 3:
        m1 = sign(a2[0][0], tol)
        m2 = sign(linalg.det2(((a2[0][0], a2[0][1]), (a2[1][0], a2[1][1]))), tol)
        m3 = sign(linalg.det3(a2), tol)
        positive_definite = m1 > 0 and m2 > 0 and m3 > 0
        negative_definite = m1 < 0 and m2 > 0 and m3 < 0
        return not (positive_definite or negative_definite)
    if rank3 == 2:
        return sign(_principal_minors2_sum(a2), tol) < 0
    return False


def quadric_classify(quadric: Quadric, tol: float = DEFAULT_TOLERANCE) -> str:
    """Classify by the eigen-sign signature of the 3x3 principal block and
    the determinant/rank of the full symmetric matrix."""
    q = quadric.coefficients
    m2 = _quadric_matrix2(q)
    a2 = tuple(row[:3] for row in m2[:3])
    rank4 = linalg.matrix_rank(m2, tol)
    rank3 = linalg.matrix_rank(a2, tol)
    if rank4 == 4:
        if rank3 == 3:
            if _block_is_mixed(a2, 3, tol) and sign(linalg.det4(m2), tol) > 0:
                return HYPERBOLOID_ONE_SHEET
            return OTHER_QUADRIC
        if rank3 == 2 and _block_is_mixed(a2, 2, tol):
            return HYPERBOLIC_PARABOLOID
        return OTHER_QUADRIC
    if rank4 == 3:
        if rank3 == 3:
            return CONE if _block_is_mixed(a2, 3, tol) else DEGENERATE_QUADRIC
        return OTHER_QUADRIC  # cylinders: singly ruled at best
    if rank4 == 2:
        return PLANE_PAIR if sign(_principal_minors2_sum(m2), tol) < 0 else DEGENERATE_QUADRIC
    return PLANE_PAIR  # rank 1: a doubled plane


def line_condition_rows(line: Line3):
    """Substituting ``base + t*dir`` into a quadric with unknown coefficient
    vector q gives a quadratic ``(q.A)t^2 + (q.B)t + (q.C)``; this returns
    the rows A, B, C in the monomial order of :data:`QUADRIC_MONOMIALS`."""
    bx, by, bz = line.base
    dx, dy, dz = line.direction
    row_a = (dx * dx, dy * dy, dz * dz, dx * dy, dx * dz, dy * dz, 0, 0, 0, 0)
    row_b = (
        2 * bx * dx, 2 * by * dy, 2 * bz * dz,
        bx * dy + by * dx, bx * dz + bz * dx, by * dz + bz * dy,
        dx, dy, dz, 0,
    )
    row_c = (bx * bx, by * by, bz * bz, bx * by, bx * bz, by * bz, bx, by, bz, 1)
    return row_a, row_b, row_c


def line_on_quadric(quadric: Quadric, line: Line3, tol: float = DEFAULT_TOLERANCE) -> bool:
    """True when the whole line lies on the surface: all three coefficients
    of the restricted quadratic vanish."""
    q = quadric.coefficients
    return all(is_zero(linalg.dot(q, row), tol) for row in line_condition_rows(line))
