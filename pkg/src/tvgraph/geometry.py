"""Point configurations and exact geometric predicates."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from gmpy2 import mpq

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NotConvexPosition,
    TooFewPoints,
    WrongDimension,
)
from .scalars import CyclotomicField, is_zero, sign


@dataclass(frozen=True)
class PointConfig:
    """A labeled list of points in R^d over one exact scalar realization.

    Point labels are the indices 0..n-1.  ``field`` is None for rational
    configurations and the ambient CyclotomicField otherwise.
    """

    dim: int
    points: tuple
    field: CyclotomicField | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionMismatch("dimension must be positive")
        if not self.points:
            raise TooFewPoints("need at least one point")
        pts = tuple(tuple(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        for p in pts:
            if len(p) != self.dim:
                raise DimensionMismatch("point/dimension mismatch")

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def scalar_kind(self) -> str:
        return "rational" if self.field is None else f"cyclotomic:{self.field.order}"

    def point(self, i: int):
        if not 0 <= i < self.n:
            raise IndexOutOfRange(f"point index {i} out of range 0..{self.n - 1}")
        return self.points[i]

    def zero_scalar(self):
        return self.field.zero if self.field is not None else mpq(0)

    def squared_distance(self, i: int, j: int):
        p, q = self.point(i), self.point(j)
        total = self.zero_scalar()
        for a, b in zip(p, q):
            diff = a - b
            total = total + diff * diff
        return total


def rational_config(dim: int, coords) -> PointConfig:
    """Build a rational PointConfig from int/str/Fraction-like coordinates."""
    pts = tuple(tuple(mpq(c) for c in p) for p in coords)
    return PointConfig(dim, pts)


def determinant(matrix):
    """Exact determinant by Gaussian elimination over the scalar field."""
    m = [list(row) for row in matrix]
    size = len(m)
    det = None
    negate = False
    for col in range(size):
        pivot_row = None
        for row in range(col, size):
            if not is_zero(m[row][col]):
                pivot_row = row
                break
        if pivot_row is None:
            return m[0][0] - m[0][0]  # zero of the field
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            negate = not negate
        pivot = m[col][col]
        det = pivot if det is None else det * pivot
        for row in range(col + 1, size):
            factor = m[row][col] / pivot
            if is_zero(factor):
                continue
            m[row] = [a - factor * b for a, b in zip(m[row], m[col])]
    return -det if negate else det


def orientation(config: PointConfig, indices) -> int:
    """Sign of the determinant of the chosen d+1 points lifted by a final 1."""
    d = config.dim
    indices = list(indices)
    if len(indices) != d + 1:
        raise DimensionMismatch(f"need exactly {d + 1} indices for dimension {d}")
    if len(set(indices)) != len(indices):
        raise IndexOutOfRange("indices must be distinct")
    rows = [list(config.point(i)) + [1] for i in indices]
    return sign(determinant(rows))


def rref(matrix, rhs=None):
    """Reduced row echelon form with full pivoting over the exact field.

    Returns (rows, rhs_rows, pivot_cols, inconsistent) where inconsistent is
    True iff a zero row has a nonzero right-hand side.
    """
    m = [list(row) for row in matrix]
    b = list(rhs) if rhs is not None else None
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivot_cols = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for row in range(r, nrows):
            if not is_zero(m[row][col]):
                pivot_row = row
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        if b is not None:
            b[r], b[pivot_row] = b[pivot_row], b[r]
        pivot = m[r][col]
        m[r] = [a / pivot for a in m[r]]
        if b is not None:
            b[r] = b[r] / pivot
        for row in range(nrows):
            if row == r:
                continue
            factor = m[row][col]
            if is_zero(factor):
                continue
            m[row] = [a - factor * c for a, c in zip(m[row], m[r])]
            if b is not None:
                b[row] = b[row] - factor * b[r]
        pivot_cols.append(col)
        r += 1
        if r == nrows:
            break
    inconsistent = False
    if b is not None:
        for row in range(r, nrows):
            if not is_zero(b[row]):
                inconsistent = True
                break
    return m[:r], (b[:r] if b is not None else None), pivot_cols, inconsistent


def affine_dependence_kernel(config: PointConfig):
    """Basis of the affine dependences of the configuration.

    Returns k = n - rank vectors alpha with sum(alpha_i) = 0 and
    sum(alpha_i * p_i) = 0, spanning all such dependences.
    """
    n, d = config.n, config.dim
    one = config.field.one if config.field is not None else mpq(1)
    matrix = []
    for coord in range(d):
        matrix.append([config.points[i][coord] for i in range(n)])
    matrix.append([one for _ in range(n)])
    reduced, _, pivot_cols, _ = rref(matrix)
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(n) if c not in pivot_set]
    zero = config.zero_scalar()
    basis = []
    for free in free_cols:
        vec = [zero] * n
        vec[free] = one
        for row_idx, pcol in enumerate(pivot_cols):
            vec[pcol] = -reduced[row_idx][free]
        basis.append(vec)
    return basis


def in_general_position(config: PointConfig) -> bool:
    """True iff every (d+1)-subset of points has nonzero orientation."""
    d = config.dim
    if config.n < d + 1:
        raise TooFewPoints(f"need at least {d + 1} points in dimension {d}")
    for combo in itertools.combinations(range(config.n), d + 1):
        if orientation(config, combo) == 0:
            return False
    return True


def convex_hull_indices_2d(config: PointConfig):
    """Indices of hull vertices in counterclockwise order (monotone chain).

    Collinear boundary points are excluded; duplicates collapse.
    """
    if config.dim != 2:
        raise WrongDimension("convex hull helper is planar only")
    pts = config.points
    order = sorted(range(config.n), key=_SortKey(pts))

    def cross(o, a, b):
        ox, oy = pts[o]
        ax, ay = pts[a]
        bx, by = pts[b]
        return sign((ax - ox) * (by - oy) - (ay - oy) * (bx - ox))

    lower = []
    for i in order:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], i) <= 0:
            lower.pop()
        lower.append(i)
    upper = []
    for i in reversed(order):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], i) <= 0:
            upper.pop()
        upper.append(i)
    hull = lower[:-1] + upper[:-1]
    if not hull:
        return [order[0]]
    return hull


class _SortKey:
    """functools-style exact lexicographic (x, y) comparison key."""

    def __init__(self, pts):
        self.pts = pts

    def __call__(self, i):
        return _Lex(self.pts[i])


class _Lex:
    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = coords

    def __lt__(self, other):
        for a, b in zip(self.coords, other.coords):
            s = sign(a - b)
            if s != 0:
                return s < 0
        return False


def in_convex_position_2d(config: PointConfig) -> bool:
    """True iff all points are vertices of their convex hull (no duplicates)."""
    if config.dim != 2:
        raise WrongDimension("convex position check is planar only")
    hull = convex_hull_indices_2d(config)
    return len(hull) == config.n


def segment_intersection_point(p1, p2, q1, q2):
    """Single intersection point of closed segments p1p2 and q1q2, or None.

    Returns None when disjoint, parallel, or overlapping in more than a point.
    """
    # solve p1 + s*(p2-p1) = q1 + t*(q2-q1), 0 <= s,t <= 1
    ux, uy = p2[0] - p1[0], p2[1] - p1[1]
    vx, vy = q2[0] - q1[0], q2[1] - q1[1]
    den = ux * vy - uy * vx
    if is_zero(den):
        return None
    wx, wy = q1[0] - p1[0], q1[1] - p1[1]
    s = (wx * vy - wy * vx) / den
    t = (wx * uy - wy * ux) / den
    zero = den - den
    one = den / den
    if sign(s - zero) < 0 or sign(s - one) > 0 or sign(t - zero) < 0 or sign(t - one) > 0:
        return None
    return (p1[0] + s * ux, p1[1] + s * uy)


def point_on_segment(pt, a, b) -> bool:
    """True iff pt lies on the closed segment ab (exact, planar)."""
    cross = (b[0] - a[0]) * (pt[1] - a[1]) - (b[1] - a[1]) * (pt[0] - a[0])
    if not is_zero(cross):
        return False
    dot = (pt[0] - a[0]) * (b[0] - a[0]) + (pt[1] - a[1]) * (b[1] - a[1])
    if sign(dot) < 0:
        return False
    length2 = (b[0] - a[0]) ** 2 + (b[1] - a[1]) ** 2
    return sign(dot - length2) <= 0


def strong_general_convex_position_2d(config: PointConfig) -> bool:
    """True iff no three segments induced by pairwise-disjoint point pairs
    are concurrent at a single point.  Requires planar convex position."""
    if config.dim != 2:
        raise WrongDimension("strong general convex position is planar only")
    if not in_convex_position_2d(config):
        raise NotConvexPosition("points must be in convex position")
    n = config.n
    pts = config.points
    pairs = list(itertools.combinations(range(n), 2))
    for i, (a1, a2) in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            b1, b2 = pairs[j]
            if {a1, a2} & {b1, b2}:
                continue
            x = segment_intersection_point(pts[a1], pts[a2], pts[b1], pts[b2])
            if x is None:
                continue
            used = {a1, a2, b1, b2}
            for k in range(j + 1, len(pairs)):
                c1, c2 = pairs[k]
                if used & {c1, c2}:
                    continue
                if point_on_segment(x, pts[c1], pts[c2]):
                    return False
    return True
