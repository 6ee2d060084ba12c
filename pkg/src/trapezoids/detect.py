"""Structure detection over interval sets and their image lines.

Extremal families of trapezoid-forming intervals come in three shapes, and
each has a line-space signature: many image lines through one point, many in
one plane, or many on a doubly ruled quadric.  The detectors here work on an
explicit list of lines (usually the 2N set of a family plus reverses),
re-verify every candidate witness under the active mode's equality, and
return witnesses sorted by canonical key so results are deterministic.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Union

from . import linalg
from .conics import (
    Conic,
    DOUBLY_RULED,
    Quadric,
    line_condition_rows,
    quadric_classify,
)
from .correspondence import (
    PlanarRotation,
    check_distinct,
    dataset_mode,
    from_line,
    generic_rotation,
    to_line,
    to_line_perp,
    to_line_ratio,
)
from .primitives import Interval, Line3, PlanarLine, Plane3, line_intersect, plane_of_lines
from .relations import orthodiagonal_relation, ratio_relation, trapezoid_relation
from .scalars import DEFAULT_TOLERANCE, EXACT, Scalar, div, eq, is_zero, sign

TRAPEZOID = "trapezoid"
ORTHODIAGONAL = "orthodiagonal"
RATIO = "ratio"

EXHAUSTIVE = "exhaustive-triples"
SAMPLED = "sampled"

#: above this many lines, detect_regulus samples triples instead of
#: enumerating all of them
EXHAUSTIVE_LINE_LIMIT = 60


# ---------------------------------------------------------------------------
# pair counting

@dataclass(frozen=True)
class PairCounts:
    """Pair census for one relation.  ``threshold`` is the informational
    bound N^(3/2) * ln N; nothing is asserted against it."""

    n: int
    left_only: int
    right_only: int
    both: int
    threshold: float

    @property
    def total_with_multiplicity(self) -> int:
        return self.left_only + self.right_only + 2 * self.both


def _relation_fn(relation: str, rho):
    if relation == TRAPEZOID:
        if rho is not None:
            raise ValueError("rho is only meaningful for the ratio relation")
        return lambda i, j, tol: trapezoid_relation(i, j, tol)
    if relation == ORTHODIAGONAL:
        if rho is not None:
            raise ValueError("rho is only meaningful for the ratio relation")
        return lambda i, j, tol: orthodiagonal_relation(i, j, tol)
    if relation == RATIO:
        if rho is None:
            raise ValueError("the ratio relation needs a nonzero rho")
        return lambda i, j, tol: ratio_relation(i, j, rho, tol)
    raise ValueError(f"unknown relation {relation!r}")


def pair_threshold(n: int) -> float:
    return float(n) ** 1.5 * math.log(n) if n > 1 else 0.0


def count_pairs(intervals: Sequence[Interval], relation: str = TRAPEZOID,
                rho: Optional[Scalar] = None,
                tol: float = DEFAULT_TOLERANCE) -> PairCounts:
    """Brute-force census over all unordered pairs."""
    check_distinct(intervals, tol)
    fn = _relation_fn(relation, rho)
    left_only = right_only = both = 0
    n = len(intervals)
    for i in range(n):
        for j in range(i + 1, n):
            rel = fn(intervals[i], intervals[j], tol)
            if rel.left and rel.right:
                both += 1
            elif rel.left:
                left_only += 1
            elif rel.right:
                right_only += 1
    return PairCounts(n, left_only, right_only, both, pair_threshold(n))


# ---------------------------------------------------------------------------
# witnesses

@dataclass(frozen=True)
class ConcurrencyWitness:
    """At least three lines through one point ``(u, v, w)``.  The pullback
    intervals have one endpoint on ``y = u - w*x`` and the other on
    ``y = v - w*x``."""

    point: tuple[Scalar, Scalar, Scalar]
    members: tuple[int, ...]
    pullback: tuple[PlanarLine, PlanarLine]


@dataclass(frozen=True)
class Pencil:
    """Decoded coplanarity structure: either all carrier lines through one
    center (with a fixed initial:terminal distance ratio), or a family of
    translates."""

    kind: str  # "point" | "translation"
    center: Optional[tuple[Scalar, Scalar]] = None
    ratio: Optional[tuple[Scalar, Scalar]] = None  # terminal : initial weights (B : A)
    center_position: Optional[str] = None  # "interior" | "endpoint" | "exterior"
    translation: Optional[tuple[Scalar, Scalar]] = None


@dataclass(frozen=True)
class CoplanarWitness:
    plane: Plane3
    members: tuple[int, ...]
    pencil: Optional[Pencil]


@dataclass(frozen=True)
class RegulusWitness:
    """Lines on one doubly ruled quadric, split into the two rulings: no two
    same-ruling members meet, every cross-ruling pair meets or is parallel."""

    quadric: Quadric
    quadric_class: str
    ruling1: tuple[int, ...]
    ruling2: tuple[int, ...]

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(sorted(self.ruling1 + self.ruling2))


@dataclass(frozen=True)
class SubcaseWitness:
    """Outcome of the transversal-system classification of three same-ruling
    lines.  Case III carries the forced concurrency data."""

    case: str  # "I" | "II" | "III"
    slopes: Optional[tuple[Scalar, Scalar, Scalar]] = None
    intercepts: Optional[tuple[Scalar, Scalar, Scalar]] = None
    point: Optional[tuple[Scalar, Scalar, Scalar]] = None


@dataclass(frozen=True)
class DegenerateFit:
    """A fit whose solution space was not one-dimensional."""

    nullspace_dimension: int


def line_member(line_index: int, n_intervals: int) -> tuple[int, bool]:
    """Map an index into the 2N line list to (interval index, reversed?)."""
    if line_index < n_intervals:
        return line_index, False
    return line_index - n_intervals, True


# ---------------------------------------------------------------------------
# concurrency

def _point_key(point, mode: str, tol: float):
    if mode == EXACT:
        return tuple(Fraction(x) for x in point)
    return tuple(linalg.quantize(float(x), tol) for x in point)


def point_on_line(line: Line3, point, tol: float = DEFAULT_TOLERANCE) -> bool:
    w = linalg.vsub(point, line.base)
    return all(is_zero(x, tol) for x in linalg.cross3(w, line.direction))


def detect_concurrent(lines: Sequence[Line3],
                      tol: float = DEFAULT_TOLERANCE) -> list[ConcurrencyWitness]:
    """Group pairwise intersection points and keep points carrying at least
    three distinct lines (membership re-verified)."""
    mode = EXACT if all(l.mode == EXACT for l in lines) else "float"
    groups: dict = {}
    for i, j in combinations(range(len(lines)), 2):
        meet = line_intersect(lines[i], lines[j], tol)
        if meet.kind != "point":
            continue
        key = _point_key(meet.point, mode, tol)
        entry = groups.setdefault(key, (meet.point, set()))
        entry[1].update((i, j))
    witnesses = []
    for key in sorted(groups):
        point, indices = groups[key]
        members = tuple(sorted(k for k in indices if point_on_line(lines[k], point, tol)))
        if len(members) < 3:
            continue
        u, v, w = point
        pullback = (
            PlanarLine.slope_intercept(-w, u),
            PlanarLine.slope_intercept(-w, v),
        )
        witnesses.append(ConcurrencyWitness(tuple(point), members, pullback))
    return witnesses


# ---------------------------------------------------------------------------
# coplanarity

def plane_to_pencil(plane: Plane3) -> Pencil:
    """Decode the plane ``Ax+By+Cz+D=0`` of a coplanar family.

    Members satisfy ``A a + B c + C = 0`` and ``A b + B d + D = 0``.  When
    A + B is nonzero every carrier line passes through the fixed point
    ``(-C/(A+B), -D/(A+B))`` and terminal points are a fixed homothety of
    initial points; when A + B = 0 the family consists of translates by
    ``(C/A, D/A)``."""
    a, b, c, d = plane.coefficients()
    if eq(a, 0) and eq(b, 0):
        raise ValueError("pencil decoding needs (A, B) != (0, 0)")
    s = a + b
    if not is_zero(s):
        center = (div(-c, s), div(-d, s))
        ab = sign(a * b)
        position = "interior" if ab > 0 else ("endpoint" if ab == 0 else "exterior")
        return Pencil("point", center=center, ratio=(b, a), center_position=position)
    return Pencil("translation", translation=(div(c, a), div(d, a)))


def detect_coplanar(lines: Sequence[Line3],
                    tol: float = DEFAULT_TOLERANCE) -> list[CoplanarWitness]:
    """Group the common planes of meeting-or-parallel line pairs and keep
    planes carrying at least three distinct lines."""
    groups: dict = {}
    for i, j in combinations(range(len(lines)), 2):
        plane = plane_of_lines(lines[i], lines[j], tol)
        if plane is None:
            continue
        key = plane.key(tol)
        entry = groups.setdefault(key, (plane, set()))
        entry[1].update((i, j))
    witnesses = []
    for key in sorted(groups):
        plane, indices = groups[key]
        members = tuple(sorted(k for k in indices if plane.contains_line(lines[k], tol)))
        if len(members) < 3:
            continue
        has_pencil = not (eq(plane.a, 0) and eq(plane.b, 0))
        pencil = plane_to_pencil(plane) if has_pencil else None
        witnesses.append(CoplanarWitness(plane, members, pencil))
    return witnesses


# ---------------------------------------------------------------------------
# reguli

def quadric_through_skew_lines(l1: Line3, l2: Line3, l3: Line3,
                               tol: float = DEFAULT_TOLERANCE) -> Union[Quadric, DegenerateFit]:
    """The unique quadric through three pairwise skew lines.

    Each line contributes three linear conditions on the ten coefficients
    (the restricted quadratic must vanish identically).  A one-dimensional
    nullspace yields the quadric; anything else (intersecting or parallel
    lines, special position) comes back as a degenerate report."""
    lines = (l1, l2, l3)
    keys = {l.key(tol) for l in lines}
    if len(keys) < 3:
        raise ValueError("three pairwise distinct lines are required")
    rows = [row for line in lines for row in line_condition_rows(line)]
    basis = linalg.nullspace(rows, 10, tol)
    if len(basis) != 1:
        return DegenerateFit(len(basis))
    vec = basis[0]
    if all(not isinstance(x, float) for x in vec):
        coeffs = linalg.canonical_int_vector(vec)
    else:
        coeffs = linalg.canonical_float_vector(vec, tol)
    return Quadric(coeffs)


def _bipartition_members(members, kinds) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Two-color the meets-or-parallel graph on member lines and verify it is
    complete bipartite; None when the structure is incoherent."""
    idx = {m: p for p, m in enumerate(members)}
    color = {}
    for start in members:
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for v in members:
                if v == u:
                    continue
                if kinds[idx[u]][idx[v]] in ("point", "parallel"):
                    if v not in color:
                        color[v] = 1 - color[u]
                        queue.append(v)
                    elif color[v] == color[u]:
                        return None
    ruling1 = tuple(m for m in members if color[m] == 0)
    ruling2 = tuple(m for m in members if color[m] == 1)
    for u in members:
        for v in members:
            if v <= u:
                continue
            meets = kinds[idx[u]][idx[v]] in ("point", "parallel")
            if meets != (color[u] != color[v]):
                return None
    return ruling1, ruling2


def detect_regulus(lines: Sequence[Line3], strategy: Optional[str] = None,
                   sample_size: int = 2000, seed: int = 0,
                   tol: float = DEFAULT_TOLERANCE) -> list[RegulusWitness]:
    """Fit quadrics through pairwise-skew line triples, keep the doubly
    ruled ones, and collect every input line lying on each.

    ``strategy`` is ``"exhaustive-triples"`` or ``"sampled"``; by default
    triples are enumerated exhaustively up to 60 lines and sampled (with the
    given seed) above that.  Witnesses need two lines in each ruling or four
    members in total."""
    m = len(lines)
    if strategy is None:
        strategy = EXHAUSTIVE if m <= EXHAUSTIVE_LINE_LIMIT else SAMPLED
    if strategy not in (EXHAUSTIVE, SAMPLED):
        raise ValueError(f"unknown strategy {strategy!r}")
    exact = all(l.mode == EXACT for l in lines)

    # pairwise relation table, reused for skew filtering and bipartition
    kinds = [[None] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            k = line_intersect(lines[i], lines[j], tol).kind
            kinds[i][j] = kinds[j][i] = k

    if exact:
        cond_rows = [tuple(linalg.clear_denominators(r) for r in line_condition_rows(l))
                     for l in lines]
    else:
        cond_rows = [tuple(tuple(float(x) for x in r) for r in line_condition_rows(l))
                     for l in lines]

    if strategy == EXHAUSTIVE:
        triples = combinations(range(m), 3)
    else:
        rng = random.Random(seed)
        chosen = set()
        limit = min(sample_size, m * (m - 1) * (m - 2) // 6 if m >= 3 else 0)
        while len(chosen) < limit:
            chosen.add(tuple(sorted(rng.sample(range(m), 3))))
        triples = sorted(chosen)

    candidates: dict = {}
    for i, j, k in triples:
        if kinds[i][j] != "skew" or kinds[i][k] != "skew" or kinds[j][k] != "skew":
            continue
        rows = cond_rows[i] + cond_rows[j] + cond_rows[k]
        if exact:
            basis = linalg.nullspace_exact(rows, 10)
        else:
            basis = linalg.nullspace_float(rows, 10, tol)
        if len(basis) != 1:
            continue
        if exact:
            coeffs = linalg.canonical_int_vector(basis[0])
            key = coeffs
        else:
            coeffs = linalg.canonical_float_vector(basis[0], tol)
            key = tuple(linalg.quantize(x, tol) for x in coeffs)
        if key in candidates:
            continue
        quadric = Quadric(coeffs)
        cls = quadric_classify(quadric, tol)
        candidates[key] = (quadric, cls) if cls in DOUBLY_RULED else None

    witnesses = []
    for key in sorted(candidates):
        entry = candidates[key]
        if entry is None:
            continue
        quadric, cls = entry
        q = quadric.coefficients
        members = []
        for idx in range(m):
            row_a, row_b, row_c = cond_rows[idx]
            if (is_zero(linalg.dot(q, row_a), tol)
                    and is_zero(linalg.dot(q, row_b), tol)
                    and is_zero(linalg.dot(q, row_c), tol)):
                members.append(idx)
        rulings = _bipartition_members(tuple(members), kinds)
        if rulings is None:
            continue
        ruling1, ruling2 = rulings
        if not ((len(ruling1) >= 2 and len(ruling2) >= 2)
                or len(ruling1) + len(ruling2) >= 4):
            continue
        if ruling2 and (not ruling1 or min(ruling2) < min(ruling1)):
            ruling1, ruling2 = ruling2, ruling1
        witnesses.append(RegulusWitness(quadric, cls, ruling1, ruling2))
    return witnesses


# ---------------------------------------------------------------------------
# subcase classification of a same-ruling triple

def classify_subcase(l1: Line3, l2: Line3, l3: Line3,
                     tol: float = DEFAULT_TOLERANCE) -> SubcaseWitness:
    """Classify the linear system a transversal of three graph-form lines
    must satisfy.

    Subtracting pairs of the three "meets line j" equations leaves two
    linear equations in (a, b, c, d).  Case I: one of the (a,b)/(c,d)
    coefficient blocks is invertible (transversal endpoints sweep conics).
    Case II: both blocks singular, system rank 2 (endpoints sweep lines,
    mixed pairs a conic).  Case III: rank at most 1, which forces the three
    lines through one common point - legal only outside genuine rulings."""
    lines = (l1, l2, l3)
    if len({l.key(tol) for l in lines}) < 3:
        raise ValueError("three pairwise distinct lines are required")
    pulls = [from_line(l, tol) for l in lines]
    (a1, b1, c1, d1), (a2, b2, c2, d2), (a3, b3, c3, d3) = (p.as_tuple() for p in pulls)
    row1 = (d1 - d2, c2 - c1, b2 - b1, a1 - a2)
    row2 = (d2 - d3, c3 - c2, b3 - b2, a2 - a3)
    ab_det = row1[0] * row2[1] - row1[1] * row2[0]
    cd_det = row1[2] * row2[3] - row1[3] * row2[2]
    if sign(ab_det, tol) != 0 or sign(cd_det, tol) != 0:
        return SubcaseWitness("I")
    if linalg.matrix_rank([row1, row2], tol) == 2:
        return SubcaseWitness("II")
    # rank <= 1: endpoint sets must be collinear over the first components
    aa = (a1, a2, a3)
    pair = next(((p, q) for p, q in ((0, 1), (0, 2), (1, 2)) if not eq(aa[p], aa[q], tol)), None)
    if pair is None:
        raise ValueError("degenerate rank-1 triple: all first components equal")
    p, q = pair
    coords = {"b": (b1, b2, b3), "c": (c1, c2, c3), "d": (d1, d2, d3)}
    slopes = {}
    intercepts = {}
    for name, vals in coords.items():
        mline = div(vals[p] - vals[q], aa[p] - aa[q])
        rline = vals[p] - mline * aa[p]
        for t in range(3):
            if not eq(vals[t], mline * aa[t] + rline, tol):
                raise ValueError("rank-1 triple whose endpoint sets are not collinear")
        slopes[name] = mline
        intercepts[name] = rline
    m1, m2, m3 = slopes["b"], slopes["c"], slopes["d"]
    r1, r2, r3 = intercepts["b"], intercepts["c"], intercepts["d"]
    if not eq(m3, m1 * m2, tol):
        raise ValueError("rank-1 triple admits no transversal (m3 != m1*m2)")
    point = (r1, -r2 * m1 + r3, -m1)
    for line in lines:
        if not point_on_line(line, point, tol):
            raise ValueError("forced concurrency point missed a line")
    return SubcaseWitness("III", (m1, m2, m3), (r1, r2, r3), point)


# ---------------------------------------------------------------------------
# conic and line fitting

def fit_conic(points: Sequence, tol: float = DEFAULT_TOLERANCE) -> Union[Conic, DegenerateFit]:
    """Degree-2 curve through at least five plane points via the nullspace
    of the incidence system; a degenerate report carries the nullspace
    dimension when the curve is not unique (or does not exist)."""
    if len(points) < 5:
        raise ValueError("conic fitting needs at least five points")
    rows = [(x * x, x * y, y * y, x, y, 1) for x, y in points]
    basis = linalg.nullspace(rows, 6, tol)
    if len(basis) != 1:
        return DegenerateFit(len(basis))
    vec = basis[0]
    if all(not isinstance(x, float) for x in vec):
        return Conic(linalg.canonical_int_vector(vec))
    return Conic(linalg.canonical_float_vector(vec, tol))


def fit_line(points: Sequence, tol: float = DEFAULT_TOLERANCE) -> Union[PlanarLine, DegenerateFit]:
    """Line through at least two plane points, as a rank-1 nullspace fit."""
    if len(points) < 2:
        raise ValueError("line fitting needs at least two points")
    rows = [(x, y, 1) for x, y in points]
    basis = linalg.nullspace(rows, 3, tol)
    if len(basis) != 1:
        return DegenerateFit(len(basis))
    vec = basis[0]
    if all(not isinstance(x, float) for x in vec):
        vec = linalg.canonical_int_vector(vec)
    else:
        vec = linalg.canonical_float_vector(vec, tol)
    return PlanarLine(*vec).canonical(tol)


def fit_degree2_locus(points: Sequence,
                      tol: float = DEFAULT_TOLERANCE) -> Union[Conic, PlanarLine, DegenerateFit]:
    """Best structural description of a point cloud: a unique conic if one
    exists, else a unique line, else the conic fit's degenerate report."""
    conic = fit_conic(points, tol)
    if isinstance(conic, Conic):
        return conic
    line = fit_line(points, tol)
    if isinstance(line, PlanarLine):
        return line
    return conic


# ---------------------------------------------------------------------------
# the full pipeline

@dataclass(frozen=True)
class EndpointLoci:
    """Fitted loci for one ruling's pullback intervals.  ``subcase`` comes
    from classifying three lines of the opposite ruling (those are the lines
    this ruling's members are transversal to)."""

    subcase: Optional[str]
    initial: Union[Conic, PlanarLine, DegenerateFit, None]
    terminal: Union[Conic, PlanarLine, DegenerateFit, None]
    mixed: Union[Conic, DegenerateFit, None] = None


@dataclass(frozen=True)
class RegulusEndpointReport:
    ruling1: EndpointLoci
    ruling2: EndpointLoci


@dataclass(frozen=True)
class StructureReport:
    """Everything `analyze` finds: the pair census plus verified witnesses.
    Geometry is reported in the (possibly rotated) working frame; when a
    generic rotation was applied it is recorded in ``rotation``."""

    counts: PairCounts
    concurrencies: tuple[ConcurrencyWitness, ...]
    coplanarities: tuple[CoplanarWitness, ...]
    reguli: tuple[RegulusWitness, ...]
    endpoint_conics: tuple[RegulusEndpointReport, ...]
    rotation: Optional[PlanarRotation]
    relation: str
    rho: Optional[Scalar]
    n: int


def _dedupe_points(points, tol: float):
    mode = EXACT if all(not isinstance(x, float) for p in points for x in p) else "float"
    seen = {}
    for p in points:
        seen.setdefault(_point_key((p[0], p[1], 0), mode, tol)[:2], p)
    return list(seen.values())


def _ruling_loci(member_lines: Sequence[int], opposite_lines: Sequence[int],
                 all_lines: Sequence[Line3], intervals: Sequence[Interval],
                 n: int, tol: float) -> EndpointLoci:
    pulls = []
    for k in member_lines:
        idx, rev = line_member(k, n)
        pulls.append(intervals[idx].reverse() if rev else intervals[idx])
    initial_cloud = _dedupe_points([i.initial for i in pulls], tol)
    terminal_cloud = _dedupe_points([i.terminal for i in pulls], tol)
    subcase = None
    if len(opposite_lines) >= 3:
        try:
            subcase = classify_subcase(*[all_lines[k] for k in opposite_lines[:3]], tol=tol).case
        except ValueError:
            subcase = None
    initial = fit_degree2_locus(initial_cloud, tol) if len(initial_cloud) >= 5 else None
    terminal = fit_degree2_locus(terminal_cloud, tol) if len(terminal_cloud) >= 5 else None
    mixed = None
    if subcase == "II":
        mixed_cloud = _dedupe_points([(i.a, i.d) for i in pulls], tol)
        if len(mixed_cloud) >= 5:
            mixed = fit_conic(mixed_cloud, tol)
    return EndpointLoci(subcase, initial, terminal, mixed)


def analyze(intervals: Sequence[Interval], relation: str = TRAPEZOID,
            rho: Optional[Scalar] = None, strategy: Optional[str] = None,
            sample_size: int = 2000, seed: int = 0,
            tol: float = DEFAULT_TOLERANCE) -> StructureReport:
    """Count pairs, then run all three detectors on the 2N image lines of
    the relation's correspondence (intervals plus reverses).

    A generic rotation is applied first when the configuration has
    exceptional parallel pairs; the report records it.  For the trapezoid
    relation each detected regulus also gets its per-ruling endpoint loci
    fitted (conics, or lines plus a mixed conic in subcase II)."""
    intervals = list(intervals)
    dataset_mode(intervals)
    check_distinct(intervals, tol)
    counts = count_pairs(intervals, relation, rho, tol)
    working, rotation = generic_rotation(intervals, seed=seed, tol=tol)
    if relation == TRAPEZOID:
        mapper = to_line
    elif relation == ORTHODIAGONAL:
        mapper = to_line_perp
    elif relation == RATIO:
        if rho is None:
            raise ValueError("the ratio relation needs a nonzero rho")
        mapper = lambda i: to_line_ratio(i, rho)  # noqa: E731
    else:
        raise ValueError(f"unknown relation {relation!r}")
    n = len(working)
    lines = [mapper(i) for i in working] + [mapper(i.reverse()) for i in working]
    concurrencies = tuple(detect_concurrent(lines, tol))
    coplanarities = tuple(detect_coplanar(lines, tol))
    reguli = tuple(detect_regulus(lines, strategy, sample_size, seed, tol))
    endpoint_reports = []
    if relation == TRAPEZOID:
        for witness in reguli:
            loci1 = _ruling_loci(witness.ruling1, witness.ruling2, lines, working, n, tol)
            loci2 = _ruling_loci(witness.ruling2, witness.ruling1, lines, working, n, tol)
            endpoint_reports.append(RegulusEndpointReport(loci1, loci2))
    return StructureReport(
        counts=counts,
        concurrencies=concurrencies,
        coplanarities=coplanarities,
        reguli=reguli,
        endpoint_conics=tuple(endpoint_reports),
        rotation=None if rotation.is_identity else rotation,
        relation=relation,
        rho=rho,
        n=len(intervals),
    )
