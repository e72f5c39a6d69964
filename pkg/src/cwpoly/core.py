"""Planar geometry substrate: vectors, convex polygons, areas, Minkowski sums,
and the chord-midpoint region test.

Index conventions used throughout the package (0-based, cyclic mod 2n):

* vertex-indexed families live in plain lists, slot ``i`` <-> vertex ``i``;
* edge-indexed families (dual-ball vertices, edge lengths, curvature radii,
  evolute/involute vertices) live in lists where slot ``i`` is attached to the
  edge from vertex ``i`` to vertex ``i+1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .backend import Backend, RATIONAL, Scalar


class GeometryError(Exception):
    """Base class for geometric failures."""


class InputError(GeometryError):
    """Invalid input data (maps to CLI exit code 2)."""


class IdentityError(GeometryError):
    """A mathematical identity that must hold failed (CLI exit code 3)."""


class Vec2:
    """Immutable 2-vector over the active scalar type."""

    __slots__ = ("x", "y")

    def __init__(self, x: Scalar, y: Scalar):
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __setattr__(self, *a):
        raise AttributeError("Vec2 is immutable")

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def __mul__(self, s: Scalar) -> "Vec2":
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s: Scalar) -> "Vec2":
        return Vec2(self.x / s, self.y / s)

    def __eq__(self, other) -> bool:
        return isinstance(other, Vec2) and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self):
        return f"Vec2({self.x!r}, {self.y!r})"

    def norm2(self) -> Scalar:
        return self.x * self.x + self.y * self.y


def vec(x, y, backend: Backend = RATIONAL) -> Vec2:
    return Vec2(backend.convert(x), backend.convert(y))


def det(u: Vec2, v: Vec2) -> Scalar:
    """Determinant [u, v] = u.x*v.y - u.y*v.x."""
    return u.x * v.y - u.y * v.x


def dot(u: Vec2, v: Vec2) -> Scalar:
    return u.x * v.x + u.y * v.y


def polygon_area(points: Sequence[Vec2]) -> Scalar:
    """Signed shoelace area of a closed vertex list (positive iff CCW)."""
    k = len(points)
    if k < 3:
        raise InputError("polygon_area needs at least 3 vertices")
    acc = det(points[-1], points[0])
    for i in range(k - 1):
        acc = acc + det(points[i], points[i + 1])
    return acc / 2


def mixed_area(p: Sequence[Vec2], q: Sequence[Vec2]) -> Scalar:
    """Mixed area of two closed polygons listed with matching parallel edges.

    Computed as (1/2) sum_i [q_i, p_{i+1} - p_i]; the symmetric companion
    formula (1/2) sum_i [p_{i+1}, q_{i+1} - q_i] gives the same value and is
    exercised by the test suite.  For p == q this is the signed shoelace area.
    """
    k = len(p)
    if len(q) != k:
        raise InputError(f"mixed_area: length mismatch ({k} vs {len(q)})")
    acc = 0
    for i in range(k):
        acc = acc + det(q[i], p[(i + 1) % k] - p[i])
    return acc / 2


def coeff_along(w: Vec2, d: Vec2, backend: Backend) -> Scalar:
    """Solve w = t*d for t, requiring exact parallelism.

    In rational mode both coordinates must produce the same ratio; in float
    mode the dominant coordinate of d is used and the other is checked
    against the backend tolerance.
    """
    if backend.exact:
        if d.x != 0:
            t = w.x / d.x
            if w.y != t * d.y:
                raise IdentityError(f"vector {w!r} is not parallel to {d!r}")
            return t
        if d.y == 0:
            raise InputError("cannot take a coefficient along the zero vector")
        if w.x != 0:
            raise IdentityError(f"vector {w!r} is not parallel to {d!r}")
        return w.y / d.y
    ax, ay = abs(d.x), abs(d.y)
    if ax == 0 and ay == 0:
        raise InputError("cannot take a coefficient along the zero vector")
    t = w.x / d.x if ax >= ay else w.y / d.y
    if not backend.is_zero(det(w, d)):
        raise IdentityError(f"vector {w!r} is not parallel to {d!r}")
    return t


# ---------------------------------------------------------------------------
# polygon containers
# ---------------------------------------------------------------------------

def _upper_half(v: Vec2) -> bool:
    """Direction angle in [0, 180) degrees."""
    return v.y > 0 or (v.y == 0 and v.x > 0)


def angle_less(u: Vec2, v: Vec2) -> bool:
    """Strict full-circle CCW ordering of nonzero direction vectors from 0deg."""
    hu, hv = _upper_half(u), _upper_half(v)
    if hu != hv:
        return hu
    return det(u, v) > 0


def clean_convex(points: Sequence[Vec2], backend: Backend):
    """Normalize a raw vertex list into strictly convex CCW form.

    Returns (vertices, notes).  Consecutive duplicates are merged and
    collinear middle vertices dropped (both reported in notes); clockwise
    input is reversed (reported).  Raises InputError if fewer than three
    effective vertices remain or the result is not convex.
    """
    pts = [p for p in points]
    notes: list[str] = []
    if len(pts) < 3:
        raise InputError("polygon needs at least 3 vertices")

    dedup: list[Vec2] = []
    for p in pts:
        if dedup and dedup[-1] == p:
            notes.append("dropped duplicate consecutive vertex")
            continue
        dedup.append(p)
    while len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
        notes.append("dropped duplicate closing vertex")
    if len(dedup) < 3:
        raise InputError("fewer than 3 effective vertices after cleanup")

    if backend.sign(polygon_area(dedup)) < 0:
        dedup.reverse()
        notes.append("reversed clockwise input to counterclockwise")

    changed = True
    while changed:
        changed = False
        k = len(dedup)
        if k < 3:
            raise InputError("fewer than 3 effective vertices after cleanup")
        for i in range(k):
            a, b, c = dedup[(i - 1) % k], dedup[i], dedup[(i + 1) % k]
            cr = backend.sign(det(b - a, c - b))
            if cr == 0:
                if backend.sign(dot(b - a, c - b)) <= 0:
                    raise InputError("polygon is not convex (reflex collinear turn)")
                dedup.pop(i)
                notes.append("dropped collinear vertex")
                changed = True
                break
            if cr < 0:
                raise InputError(f"polygon is not convex at vertex index {i}")
    return dedup, notes


@dataclass
class ConvexPolygon:
    """Strictly convex CCW polygon (post-cleanup input type)."""

    vertices: list[Vec2]
    backend: Backend = RATIONAL
    notes: list[str] = field(default_factory=list)

    @classmethod
    def from_points(cls, points: Iterable, backend: Backend = RATIONAL) -> "ConvexPolygon":
        raw = [p if isinstance(p, Vec2) else vec(p[0], p[1], backend) for p in points]
        raw = [Vec2(backend.convert(p.x), backend.convert(p.y)) for p in raw]
        verts, notes = clean_convex(raw, backend)
        return cls(verts, backend, notes)

    def __len__(self):
        return len(self.vertices)


@dataclass
class PairedPolygon:
    """Closed 2n-list with opposite sides parallel or degenerate.

    Constructed by reorder_parallel (validated) or as an equidistant vertex
    list (container only; equidistants may be non-convex or have coincident
    diagonals, so validation is explicit via validate()).
    """

    vertices: list[Vec2]
    n: int
    backend: Backend = RATIONAL

    def __post_init__(self):
        if len(self.vertices) != 2 * self.n:
            raise InputError("paired polygon must have exactly 2n vertices")
        if self.n < 2:
            raise InputError("paired polygon needs n >= 2")

    def __len__(self):
        return len(self.vertices)

    def edge(self, i: int) -> Vec2:
        m = 2 * self.n
        return self.vertices[(i + 1) % m] - self.vertices[i % m]

    def validate(self) -> None:
        """Check the paired invariants; raise InputError with a witness index."""
        sgn = self.backend.sign
        m = 2 * self.n
        v = self.vertices
        for i in range(self.n):
            if v[i] == v[i + self.n]:
                raise InputError(f"zero diagonal at index {i}")
        edges = [self.edge(i) for i in range(m)]
        for i in range(self.n):
            e, f = edges[i], edges[(i + self.n) % m]
            e0 = e == Vec2(0, 0) if self.backend.exact else (sgn(e.x) == 0 and sgn(e.y) == 0)
            f0 = f == Vec2(0, 0) if self.backend.exact else (sgn(f.x) == 0 and sgn(f.y) == 0)
            if e0 and f0:
                raise InputError(f"both opposite sides degenerate at index {i}")
            if not e0 and not f0 and sgn(det(e, f)) != 0:
                raise InputError(f"opposite sides not parallel at index {i}")
        nz = [e for e in edges if sgn(e.x) != 0 or sgn(e.y) != 0]
        for a, b in zip(nz, nz[1:] + nz[:1]):
            if sgn(det(a, b)) < 0:
                raise InputError("paired polygon is not convex")
        if sgn(polygon_area(v)) <= 0:
            raise InputError("paired polygon is not counterclockwise")


@dataclass
class CenteredBall:
    """Strictly convex CCW 2n-gon with central symmetry about the origin."""

    vertices: list[Vec2]
    n: int
    backend: Backend = RATIONAL

    def __post_init__(self):
        if len(self.vertices) != 2 * self.n:
            raise InputError("centered ball must have exactly 2n vertices")

    def __len__(self):
        return len(self.vertices)

    def validate(self) -> None:
        m = 2 * self.n
        v = self.vertices
        be = self.backend
        for i in range(self.n):
            w = v[(i + self.n) % m]
            if not (be.eq(w.x, -v[i].x) and be.eq(w.y, -v[i].y)):
                raise InputError(f"ball not centrally symmetric at index {i}")
        for i in range(m):
            if be.sign(det(v[i], v[(i + 1) % m])) <= 0:
                raise InputError(f"ball not strictly convex about origin at index {i}")

    def edge_dets(self) -> list[Scalar]:
        """det(W_i, W_{i+1}) for consecutive vertices; all positive."""
        m = 2 * self.n
        return [det(self.vertices[i], self.vertices[(i + 1) % m]) for i in range(m)]


# ---------------------------------------------------------------------------
# Minkowski sum
# ---------------------------------------------------------------------------

def _lowest_index(points: Sequence[Vec2]) -> int:
    best = 0
    for i in range(1, len(points)):
        p, q = points[i], points[best]
        if p.y < q.y or (p.y == q.y and p.x < q.x):
            best = i
    return best


def minkowski_sum(p: Sequence[Vec2] | ConvexPolygon,
                  q: Sequence[Vec2] | ConvexPolygon,
                  backend: Backend = RATIONAL) -> list[Vec2]:
    """Minkowski sum of two convex CCW polygons by the edge-merge sweep.

    Either argument may be a single point (length-1 list), in which case the
    result is a translate.  Parallel same-direction edges are merged, so the
    output is strictly convex CCW.
    """
    pv = _distinct_boundary(p.vertices if isinstance(p, ConvexPolygon) else list(p))
    qv = _distinct_boundary(q.vertices if isinstance(q, ConvexPolygon) else list(q))
    if not pv or not qv:
        raise InputError("minkowski_sum needs nonempty inputs")
    if len(pv) == 1:
        return [v + pv[0] for v in qv]
    if len(qv) == 1:
        return [v + qv[0] for v in pv]

    def edge_list(v: list[Vec2]) -> list[Vec2]:
        i0 = _lowest_index(v)
        k = len(v)
        return [v[(i0 + j + 1) % k] - v[(i0 + j) % k] for j in range(k)]

    ep, eq = edge_list(pv), edge_list(qv)
    start = pv[_lowest_index(pv)] + qv[_lowest_index(qv)]
    merged: list[Vec2] = []
    i = j = 0
    while i < len(ep) or j < len(eq):
        if i == len(ep):
            take = eq[j]; j += 1
        elif j == len(eq):
            take = ep[i]; i += 1
        elif backend.is_zero(det(ep[i], eq[j])) and dot(ep[i], eq[j]) > 0:
            take = ep[i] + eq[j]; i += 1; j += 1
        elif angle_less(ep[i], eq[j]):
            take = ep[i]; i += 1
        else:
            take = eq[j]; j += 1
        merged.append(take)
    out = [start]
    for e in merged[:-1]:
        out.append(out[-1] + e)
    return out


# ---------------------------------------------------------------------------
# chord-midpoint counting and the region test
# ---------------------------------------------------------------------------

@dataclass
class RegionTest:
    """Result of the chord-midpoint region test.

    A point is exterior to the central equidistant of P exactly when it is
    the midpoint of one chord of P (count == 1), or lies outside P entirely
    (count == 0).  Overlapping reflected edges mean a continuum of chords.
    """

    chords: int | None
    overlap: bool
    symmetric: bool

    @property
    def exterior(self) -> bool:
        return (not self.overlap) and self.chords is not None and self.chords <= 1


def _distinct_boundary(points: Sequence[Vec2]) -> list[Vec2]:
    out: list[Vec2] = []
    for p in points:
        if not out or out[-1] != p:
            out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def _seg_intersections(a, b, c, d, hits: set) -> bool:
    """Exact closed-segment intersection on integer endpoint pairs.

    Adds isolated intersection points (as Fraction pairs) to hits; returns
    True when the segments overlap in a positive-length segment.
    """
    rx, ry = b[0] - a[0], b[1] - a[1]
    sx, sy = d[0] - c[0], d[1] - c[1]
    denom = rx * sy - ry * sx
    acx, acy = c[0] - a[0], c[1] - a[1]
    if denom == 0:
        if rx * acy - ry * acx != 0:
            return False
        # collinear: compare 1-D intervals along the dominant axis of (rx, ry)
        if abs(rx) >= abs(ry):
            axis, ra = 0, rx
        else:
            axis, ra = 1, ry
        lo1, hi1 = (a[axis], b[axis]) if a[axis] <= b[axis] else (b[axis], a[axis])
        lo2, hi2 = (c[axis], d[axis]) if c[axis] <= d[axis] else (d[axis], c[axis])
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo > hi:
            return False
        if lo < hi:
            return True
        t = Fraction(lo - a[axis], ra)
        hits.add((Fraction(a[0]) + t * rx, Fraction(a[1]) + t * ry))
        return False
    d1 = rx * acy - ry * acx                      # [r, c-a]: side of c vs line ab
    d2 = rx * (d[1] - a[1]) - ry * (d[0] - a[0])  # [r, d-a]: side of d vs line ab
    d3 = sy * acx - sx * acy                      # [c-a, s] = [s, a-c]: side of a vs line cd
    d4 = sx * (b[1] - c[1]) - sy * (b[0] - c[0])  # [s, b-c]: side of b vs line cd
    s1 = (d1 > 0) - (d1 < 0)
    s2 = (d2 > 0) - (d2 < 0)
    s3 = (d3 > 0) - (d3 < 0)
    s4 = (d4 > 0) - (d4 < 0)
    if s1 * s2 > 0 or s3 * s4 > 0:
        return False
    t = Fraction(d3, denom)
    hits.add((Fraction(a[0]) + t * rx, Fraction(a[1]) + t * ry))
    return False


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a // gcd(a, b) * b


def chord_count(x: Vec2, boundary: Sequence[Vec2]) -> RegionTest:
    """Count chords of the convex polygon having x as their midpoint.

    The boundary is intersected with its point-reflection through x; each
    unordered pair {p, 2x - p} of intersection points is one chord.  Always
    exact: float inputs are snapped to their exact rational values first.
    """
    pts = _distinct_boundary(boundary)
    if len(pts) < 3:
        raise InputError("chord_count needs a genuine polygon boundary")

    def to_frac(s) -> Fraction:
        return s if isinstance(s, Fraction) else RATIONAL.convert(s)

    fx, fy = to_frac(x.x), to_frac(x.y)
    fpts = [(to_frac(p.x), to_frac(p.y)) for p in pts]
    scale = 1
    for px, py in fpts + [(fx, fy)]:
        scale = _lcm(scale, px.denominator)
        scale = _lcm(scale, py.denominator)
    scale *= 2  # keep the doubled reflection center integral
    q = [(int(px * scale), int(py * scale)) for px, py in fpts]
    cx, cy = int(2 * fx * scale), int(2 * fy * scale)
    r = [(cx - px, cy - py) for px, py in q]

    if set(q) == set(r):
        return RegionTest(chords=None, overlap=True, symmetric=True)
    m = len(q)
    hits: set = set()
    for i in range(m):
        a, b = q[i], q[(i + 1) % m]
        lo_x, hi_x = (a[0], b[0]) if a[0] <= b[0] else (b[0], a[0])
        lo_y, hi_y = (a[1], b[1]) if a[1] <= b[1] else (b[1], a[1])
        for j in range(m):
            c, d = r[j], r[(j + 1) % m]
            if max(c[0], d[0]) < lo_x or min(c[0], d[0]) > hi_x:
                continue
            if max(c[1], d[1]) < lo_y or min(c[1], d[1]) > hi_y:
                continue
            if _seg_intersections(a, b, c, d, hits):
                return RegionTest(chords=None, overlap=True, symmetric=False)
    fixed = 1 if (Fraction(cx, 2), Fraction(cy, 2)) in hits else 0
    return RegionTest(chords=(len(hits) + fixed) // 2, overlap=False, symmetric=False)


def point_region_test(x: Vec2, p: PairedPolygon | Sequence[Vec2]) -> RegionTest:
    """Chord-midpoint test of x against the region bounded by the central
    equidistant of p (a convex polygon given by its boundary vertices)."""
    pts = p.vertices if isinstance(p, PairedPolygon) else list(p)
    return chord_count(x, pts)
