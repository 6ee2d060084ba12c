"""Small exact/float linear algebra used by the fitting and detection code.

Exact paths run fraction-free (Bareiss) elimination over Python ints so the
hot triple-fitting loop never touches `Fraction` until back-substitution.
Float paths go through numpy's SVD.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np

from .scalars import DEFAULT_TOLERANCE, Scalar, is_exact


# ---------------------------------------------------------------------------
# vectors

def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    return sum(a * b for a, b in zip(u, v))


def cross3(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(s: Scalar, u):
    return tuple(s * a for a in u)


# ---------------------------------------------------------------------------
# determinants

def det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def det4(m):
    total = 0
    for c in range(4):
        minor = [[m[r][cc] for cc in range(4) if cc != c] for r in range(1, 4)]
        term = m[0][c] * det3(minor)
        total = total + term if c % 2 == 0 else total - term
    return total


# ---------------------------------------------------------------------------
# exact elimination

def clear_denominators(row: Sequence[Scalar]) -> tuple[int, ...]:
    """Scale one row of rationals/ints to coprime integers."""
    fracs = [Fraction(x) for x in row]
    lcm = 1
    for f in fracs:
        d = f.denominator
        lcm = lcm // gcd(lcm, d) * d
    ints = [int(f * lcm) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def _echelon_int(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free (Bareiss) row echelon form of an integer matrix.

    Returns the nonzero echelon rows and their pivot columns.  Entries stay
    integers: every update ``(piv*a - f*b) / prev`` divides exactly.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivot_cols: list[int] = []
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            f = row_i[c]
            if f:
                for j in range(c + 1, ncols):
                    row_i[j] = (piv * row_i[j] - f * row_r[j]) // prev
            elif piv != prev:
                for j in range(c + 1, ncols):
                    row_i[j] = piv * row_i[j] // prev
            row_i[c] = 0
        prev = piv
        pivot_cols.append(c)
        r += 1
    return m[:r], pivot_cols


def nullspace_exact(rows: Sequence[Sequence[Scalar]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of the right nullspace of an exact matrix (one basis vector per
    free column, in column order)."""
    int_rows = [clear_denominators(r) for r in rows]
    int_rows = [r for r in int_rows if any(r)]
    ech, pivot_cols = _echelon_int([list(r) for r in int_rows])
    pivot_set = set(pivot_cols)
    basis = []
    for free in (c for c in range(ncols) if c not in pivot_set):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i in reversed(range(len(pivot_cols))):
            c = pivot_cols[i]
            s = sum(ech[i][j] * v[j] for j in range(c + 1, ncols) if v[j])
            v[c] = Fraction(-s, ech[i][c]) if s else Fraction(0)
        basis.append(tuple(v))
    return basis


def rank_exact(rows: Sequence[Sequence[Scalar]]) -> int:
    int_rows = [clear_denominators(r) for r in rows]
    int_rows = [r for r in int_rows if any(r)]
    _, pivots = _echelon_int([list(r) for r in int_rows])
    return len(pivots)


# ---------------------------------------------------------------------------
# float elimination

def nullspace_float(rows: Sequence[Sequence[float]], ncols: int,
                    tol: float = DEFAULT_TOLERANCE) -> list[tuple[float, ...]]:
    a = np.asarray(rows, dtype=float)
    if a.size == 0:
        return [tuple(1.0 if i == j else 0.0 for i in range(ncols)) for j in range(ncols)]
    _, s, vt = np.linalg.svd(a, full_matrices=True)
    smax = s[0] if len(s) else 0.0
    cutoff = tol * max(1.0, smax)
    rank = int(np.sum(s > cutoff))
    return [tuple(float(x) for x in vt[i]) for i in range(rank, ncols)]


def rank_float(rows: Sequence[Sequence[float]], tol: float = DEFAULT_TOLERANCE) -> int:
    a = np.asarray(rows, dtype=float)
    if a.size == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    smax = s[0] if len(s) else 0.0
    return int(np.sum(s > tol * max(1.0, smax)))


def nullspace(rows: Sequence[Sequence[Scalar]], ncols: int,
              tol: float = DEFAULT_TOLERANCE) -> list[tuple[Scalar, ...]]:
    """Mode-dispatching nullspace basis."""
    if all(is_exact(x) for row in rows for x in row):
        return nullspace_exact(rows, ncols)
    return nullspace_float([[float(x) for x in row] for row in rows], ncols, tol)


def matrix_rank(rows: Sequence[Sequence[Scalar]], tol: float = DEFAULT_TOLERANCE) -> int:
    if all(is_exact(x) for row in rows for x in row):
        return rank_exact(rows)
    return rank_float([[float(x) for x in row] for row in rows], tol)


# ---------------------------------------------------------------------------
# canonical coefficient vectors

def canonical_exact_vector(vec: Sequence[Scalar]) -> tuple[Scalar, ...]:
    """Scale an exact coefficient vector so its first nonzero entry is 1."""
    lead = next((x for x in vec if x != 0), None)
    if lead is None:
        raise ValueError("zero vector has no canonical form")
    return tuple(Fraction(x) / Fraction(lead) for x in vec)


def canonical_int_vector(vec: Sequence[Scalar]) -> tuple[int, ...]:
    """Scale an exact vector to coprime integers with positive leading entry."""
    ints = list(clear_denominators(vec))
    lead = next((x for x in ints if x), None)
    if lead is None:
        raise ValueError("zero vector has no canonical form")
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def canonical_float_vector(vec: Sequence[float], tol: float = DEFAULT_TOLERANCE) -> tuple[float, ...]:
    """Scale a float vector by its largest-magnitude entry (sign-normalised
    so the first significant entry is positive)."""
    mags = [abs(x) for x in vec]
    m = max(mags)
    if m <= 0.0:
        raise ValueError("zero vector has no canonical form")
    lead = next(x for x in vec if abs(x) > 0.5 * m)
    return tuple(float(x / lead) for x in vec)


def quantize(value: float, tol: float = DEFAULT_TOLERANCE) -> int:
    return round(value / tol)
