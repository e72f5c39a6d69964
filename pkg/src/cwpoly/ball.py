"""Minkowski unit balls for constant-width polygons.

Given any convex polygon, ``reorder_parallel`` rewrites it as a 2n-list with
opposite sides parallel (inserting degenerate sides where a direction has no
opposite partner).  ``unit_ball`` then builds the centered polygon U in whose
norm the polygon has constant width, and ``dual_ball`` builds the dual ball V
under the determinant pairing f(.) = [., v].
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .backend import Backend, RATIONAL, Scalar
from .core import (
    CenteredBall,
    ConvexPolygon,
    InputError,
    PairedPolygon,
    Vec2,
    angle_less,
    coeff_along,
    det,
    dot,
    minkowski_sum,
)


@dataclass
class MinkowskiPlane:
    """A paired polygon together with its induced norm structure.

    V is edge-indexed: V.vertices[i] is the dual vertex attached to the edge
    from P.vertices[i] to P.vertices[i+1].
    """

    P: PairedPolygon
    U: CenteredBall
    V: CenteredBall
    n: int
    a: Scalar
    backend: Backend = RATIONAL

    def u_edge_dets(self) -> list[Scalar]:
        """det(U_i, U_{i+1}) per edge slot; all positive."""
        return self.U.edge_dets()

    def v_vertex_dets(self) -> list[Scalar]:
        """det(V_{i-1}, V_i) per vertex slot i; all positive."""
        m = 2 * self.n
        v = self.V.vertices
        return [det(v[(i - 1) % m], v[i]) for i in range(m)]


def reorder_parallel(poly: ConvexPolygon) -> PairedPolygon:
    """Rewrite a convex k-gon as a 2n-list with parallel opposite sides.

    n = k - j where j counts the pairs of parallel opposite sides already
    present.  Each direction class (mod 180 degrees) owns two opposite slots;
    a class with a single edge gets a degenerate (repeated-point) side in the
    opposite slot.  The walk starts at the edge of smallest direction angle
    in [0, 180) so the output is deterministic.
    """
    verts = poly.vertices
    backend = poly.backend
    k = len(verts)
    edges = [verts[(i + 1) % k] - verts[i] for i in range(k)]

    def upper(v: Vec2) -> bool:
        s = backend.sign
        return s(v.y) > 0 or (s(v.y) == 0 and s(v.x) > 0)

    # direction classes mod 180, each represented by its upper-half vector
    reps: list[Vec2] = []
    for e in edges:
        r = e if upper(e) else -e
        if not any(backend.is_zero(det(r, s)) for s in reps):
            reps.append(r)
    reps.sort(key=_AngleKey)
    n = len(reps)
    j = k - n
    if n < 2:
        raise InputError("polygon collapses to fewer than 2 directions")

    # start edge: smallest full angle within [0, 180)
    start_candidates = [i for i, e in enumerate(edges) if upper(e)]
    start = min(start_candidates, key=lambda i: _AngleKey(edges[i]))
    start_class = next(t for t, r in enumerate(reps)
                       if backend.is_zero(det(r, edges[start])))

    # expected direction of each of the 2n slots, as a full-circle vector:
    # slots start_class .. start_class+2n-1 over the doubled direction ladder
    slot_dirs = []
    for t in range(2 * n):
        idx = start_class + t
        rep = reps[idx % n]
        slot_dirs.append(rep if (idx // n) % 2 == 0 else -rep)

    out: list[Vec2] = [verts[start]]
    li = start
    consumed = 0
    for t in range(2 * n):
        e = edges[li % k]
        if consumed < k and backend.is_zero(det(e, slot_dirs[t])) and backend.sign(dot(e, slot_dirs[t])) > 0:
            out.append(verts[(li + 1) % k])
            li += 1
            consumed += 1
        else:
            out.append(out[-1])
    if consumed != k or out[0] != out[-1]:
        raise InputError("direction walk failed to close; polygon not convex?")
    paired = PairedPolygon(out[:-1], n, backend)
    paired.validate()
    return paired


class _AngleKey:
    """Sort key wrapping exact full-circle angle comparison."""

    __slots__ = ("v",)

    def __init__(self, v: Vec2):
        self.v = v

    def __lt__(self, other: "_AngleKey") -> bool:
        return angle_less(self.v, other.v)


def unit_ball(paired: PairedPolygon, a: Scalar, validate: bool = True) -> CenteredBall:
    """Centered ball U with U_i = (P_i - P_{i+n}) / (2a), origin at (0,0)."""
    backend = paired.backend
    a = backend.convert(a)
    if backend.sign(a) <= 0:
        raise InputError("half-width parameter a must be positive")
    m = 2 * paired.n
    v = paired.vertices
    scale = 1 / (2 * a)
    out = []
    for i in range(m):
        d = v[i] - v[(i + paired.n) % m]
        if backend.is_zero(d.x) and backend.is_zero(d.y):
            raise InputError(f"degenerate diagonal at index {i}")
        out.append(d * scale)
    ball = CenteredBall(out, paired.n, backend)
    if validate:
        ball.validate()
    return ball


def dual_ball(u: CenteredBall, validate: bool = True) -> CenteredBall:
    """Dual ball V with V_i = (U_{i+1} - U_i) / det(U_i, U_{i+1}).

    Edge-indexed: vertex V_i of the dual corresponds to the edge U_i U_{i+1}.
    Every point of every edge of V has dual norm exactly 1 against U.
    """
    m = 2 * u.n
    w = u.vertices
    out = []
    for i in range(m):
        d = det(w[i], w[(i + 1) % m])
        if d == 0:
            raise InputError(f"degenerate ball edge at index {i}")
        out.append((w[(i + 1) % m] - w[i]) / d)
    ball = CenteredBall(out, u.n, u.backend)
    if validate:
        ball.validate()
    return ball


def ball_from_dual(v: CenteredBall) -> CenteredBall:
    """Recover the primal ball: U_i = -(V_i - V_{i-1}) / det(V_{i-1}, V_i)."""
    m = 2 * v.n
    w = v.vertices
    out = []
    for i in range(m):
        d = det(w[(i - 1) % m], w[i])
        out.append(-(w[i] - w[(i - 1) % m]) / d)
    ball = CenteredBall(out, v.n, v.backend)
    ball.validate()
    return ball


def build_plane(poly: ConvexPolygon | PairedPolygon, a: Scalar = None,
                strict: bool = True) -> MinkowskiPlane:
    """Full norm structure for a polygon: paired form, ball U, dual ball V.

    With strict=False the ball invariants are not validated at construction,
    so a claimed-paired polygon that is not genuinely constant-width can be
    diagnosed afterwards by is_constant_width instead of failing here.
    """
    if isinstance(poly, PairedPolygon):
        paired = poly
    else:
        paired = reorder_parallel(poly)
    backend = paired.backend
    if a is None:
        from fractions import Fraction
        a = Fraction(1, 2)
    a = backend.convert(a)
    u = unit_ball(paired, a, validate=strict)
    v = dual_ball(u, validate=strict)
    return MinkowskiPlane(P=paired, U=u, V=v, n=paired.n, a=a, backend=backend)


def support(points: Sequence[Vec2] | PairedPolygon | CenteredBall, f: Vec2) -> Scalar:
    """Support value sup [p, f] over the vertices (determinant pairing)."""
    pts = points.vertices if hasattr(points, "vertices") else points
    if not pts:
        raise InputError("support of an empty point set")
    best = det(pts[0], f)
    for p in pts[1:]:
        c = det(p, f)
        if c > best:
            best = c
    return best


def width(points, f: Vec2) -> Scalar:
    """Width in dual direction f: support(P, f) + support(P, -f)."""
    return support(points, f) + support(points, -f)


@dataclass
class WidthResult:
    """Outcome of the constant-width check: the half-width a, or a witness."""

    ok: bool
    a: Scalar | None = None
    witness: int | None = None
    reason: str = ""


def is_constant_width(paired: PairedPolygon, u: CenteredBall) -> WidthResult:
    """Decide whether the paired polygon has constant width in the U-norm.

    Checks edge parallelism against U, then that all diagonals satisfy
    P_i - P_{i+n} = 2a U_i for one constant a > 0, and cross-checks that
    P + (-P) is the homothety of U with ratio 4a.
    """
    backend = paired.backend
    m = 2 * paired.n
    if len(u) != m:
        return WidthResult(False, reason="vertex count mismatch", witness=0)
    pv, uv = paired.vertices, u.vertices
    sgn = backend.sign
    for i in range(m):
        pe = pv[(i + 1) % m] - pv[i]
        ue = uv[(i + 1) % m] - uv[i]
        if not backend.is_zero(det(pe, ue)):
            return WidthResult(False, witness=i, reason="edge not parallel to ball edge")
        if not (backend.is_zero(pe.x) and backend.is_zero(pe.y)) and sgn(dot(pe, ue)) <= 0:
            return WidthResult(False, witness=i, reason="edge orientation mismatch")
    a = None
    for i in range(m):
        diag = pv[i] - pv[(i + paired.n) % m]
        if not backend.is_zero(det(diag, uv[i])):
            return WidthResult(False, witness=i, reason="diagonal not parallel to ball vertex")
        ai = coeff_along(diag, uv[i], backend) / 2
        if a is None:
            a = ai
        elif not backend.eq(a, ai):
            return WidthResult(False, witness=i, reason="diagonal ratio is not constant")
    if a is None or sgn(a) <= 0:
        return WidthResult(False, witness=0, reason="nonpositive width")
    # cross-check: P + (-P) is centered at origin and equals the 2a-homothety
    # of the ball up to vertex rotation
    s = minkowski_sum(pv, [-p for p in pv], backend)
    if len(s) != m:
        return WidthResult(False, witness=0, reason="P+(-P) vertex count mismatch")
    target = [w * (2 * a) for w in uv]
    shift = None
    for r in range(m):
        if all(backend.eq(s[(r + i) % m].x, target[i].x)
               and backend.eq(s[(r + i) % m].y, target[i].y) for i in range(m)):
            shift = r
            break
    if shift is None:
        return WidthResult(False, witness=0, reason="P+(-P) not homothetic to ball")
    return WidthResult(True, a=a)
