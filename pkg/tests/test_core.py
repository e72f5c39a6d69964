"""Substrate tests: determinants, areas, Minkowski sums, chord counting."""
import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cwpoly import (
    ConvexPolygon,
    InputError,
    Vec2,
    chord_count,
    det,
    minkowski_sum,
    mixed_area,
    point_region_test,
    polygon_area,
    vec,
)

TRI = [Vec2(F(0), F(0)), Vec2(F(1), F(0)), Vec2(F(0), F(1))]
HEX_U = [Vec2(F(x), F(y)) for x, y in
         [(0, -1), (1, -1), (1, 0), (0, 1), (-1, 1), (-1, 0)]]


def test_det_basis():
    assert det(Vec2(1, 0), Vec2(0, 1)) == 1


def test_det_expansion():
    assert det(Vec2(0, -1), Vec2(1, -1)) == 1


def test_det_repeated():
    u = Vec2(F(3, 7), F(-2, 5))
    assert det(u, u) == 0


rationals = st.fractions(min_value=-100, max_value=100, max_denominator=50)


@given(rationals, rationals, rationals, rationals)
def test_det_antisymmetric(ax, ay, bx, by):
    u, v = Vec2(ax, ay), Vec2(bx, by)
    assert det(u, v) == -det(v, u)


@given(rationals, rationals, rationals, rationals, rationals, rationals, rationals)
def test_det_bilinear(ax, ay, bx, by, cx, cy, s):
    u, v, w = Vec2(ax, ay), Vec2(bx, by), Vec2(cx, cy)
    assert det(u + w * s, v) == det(u, v) + s * det(w, v)


def test_polygon_area_square():
    sq = [vec(0, 0), vec(1, 0), vec(1, 1), vec(0, 1)]
    assert polygon_area(sq) == 1


def test_polygon_area_hexagon():
    assert polygon_area(HEX_U) == 3


def test_polygon_area_reversed_square():
    sq = [vec(0, 0), vec(0, 1), vec(1, 1), vec(1, 0)]
    assert polygon_area(sq) == -1


def test_minkowski_square_doubles():
    sq = [vec(0, 0), vec(1, 0), vec(1, 1), vec(0, 1)]
    s = minkowski_sum(sq, sq)
    assert s == [vec(0, 0), vec(2, 0), vec(2, 2), vec(0, 2)]


def test_minkowski_triangle_reflection_is_hexagon():
    s = minkowski_sum(TRI, [-p for p in TRI])
    assert s == HEX_U


def test_minkowski_point_translates():
    z = Vec2(F(5), F(-7))
    assert minkowski_sum(TRI, [z]) == [p + z for p in TRI]


def test_mixed_area_self_is_area():
    sq = [vec(0, 0), vec(1, 0), vec(1, 1), vec(0, 1)]
    assert mixed_area(sq, sq) == polygon_area(sq) == 1


def test_mixed_area_central_triangle():
    m = [vec(0, F(1, 2)), vec(F(1, 2), F(1, 2)), vec(F(1, 2), 0)] * 2
    assert mixed_area(m, m) == F(-1, 4)


def test_mixed_area_length_mismatch():
    with pytest.raises(InputError):
        mixed_area(TRI, TRI + [TRI[0]])


def test_mixed_area_symmetric_formula():
    # the companion form (1/2) sum [p_{i+1}, q_{i+1} - q_i] agrees
    rng = random.Random(3)
    from cwpoly.fuzz import random_cw_plane

    for _ in range(20):
        plane = random_cw_plane(rng)
        p, q = plane.P.vertices, plane.U.vertices
        k = len(p)
        alt = sum(det(p[(i + 1) % k], q[(i + 1) % k] - q[i]) for i in range(k)) / 2
        assert mixed_area(p, q) == alt


def test_mixed_area_quadratic_in_t():
    # polygon_area(P + tQ) = A(P) + 2t A(P,Q) + t^2 A(Q), fitted at t in {0,1,2}
    rng = random.Random(5)
    from cwpoly.fuzz import random_cw_plane

    for _ in range(20):
        plane = random_cw_plane(rng)
        p, q = plane.P.vertices, plane.U.vertices
        k = len(p)

        def area_at(t):
            return polygon_area([p[i] + q[i] * t for i in range(k)])

        a0, a1, a2 = area_at(0), area_at(1), area_at(2)
        quad = (a2 - 2 * a1 + a0) / 2
        lin = a1 - a0 - quad
        assert quad == polygon_area(q)
        assert lin == 2 * mixed_area(p, q)


def test_mixed_area_vs_minkowski_sum():
    rng = random.Random(11)
    from cwpoly.fuzz import random_cw_plane

    for _ in range(20):
        plane = random_cw_plane(rng)
        p, q = plane.P.vertices, plane.U.vertices
        s = minkowski_sum(p, q)
        lhs = polygon_area(s) - polygon_area(p) - polygon_area(q)
        assert lhs / 2 == mixed_area(p, q)


# --- cleanup ----------------------------------------------------------------

def test_clean_reverses_clockwise():
    poly = ConvexPolygon.from_points([(0, 0), (0, 1), (1, 0)])
    assert polygon_area(poly.vertices) > 0
    assert any("reversed" in n for n in poly.notes)


def test_clean_drops_duplicates_and_collinear():
    poly = ConvexPolygon.from_points(
        [(0, 0), (0, 0), (F(1, 2), 0), (1, 0), (0, 1)])
    assert len(poly) == 3
    assert any("duplicate" in n for n in poly.notes)
    assert any("collinear" in n for n in poly.notes)


def test_clean_rejects_nonconvex():
    with pytest.raises(InputError):
        ConvexPolygon.from_points([(0, 0), (2, 0), (1, F(1, 2)), (2, 2), (0, 2)])


def test_clean_rejects_degenerate():
    with pytest.raises(InputError):
        ConvexPolygon.from_points([(0, 0), (1, 1), (2, 2)])


# --- chord counting ---------------------------------------------------------

def _boundary_point(pts, t):
    """Point at parameter t in [0,1) along the closed boundary (by edge share)."""
    k = len(pts)
    t *= k
    i = int(t) % k
    frac = t - int(t)
    return pts[i] + (pts[(i + 1) % k] - pts[i]) * frac


def _sampled_chord_oracle(x, pts, samples=4000):
    """Count chords by sign changes of the inside/outside indicator of the
    reflected boundary -- an independent, approximate oracle."""

    def inside(p):
        k = len(pts)
        for i in range(k):
            e = pts[(i + 1) % k] - pts[i]
            if float(det(e, p - pts[i])) < 0:
                return False
        return True

    flips = 0
    prev = None
    first = None
    for s in range(samples):
        q = _boundary_point(pts, s / samples)
        refl = Vec2(2 * x.x - q.x, 2 * x.y - q.y)
        cur = inside(refl)
        if first is None:
            first = cur
        elif cur != prev:
            flips += 1
        prev = cur
    if prev != first:
        flips += 1
    return flips // 2


def test_region_outside_is_exterior():
    assert point_region_test(Vec2(F(9), F(9)), TRI).exterior


def test_region_vertex_single_chord():
    res = point_region_test(Vec2(F(0), F(0)), TRI)
    assert res.chords == 1 and res.exterior


def test_region_symmetric_center():
    sq = [vec(0, 0), vec(2, 0), vec(2, 2), vec(0, 2)]
    res = point_region_test(Vec2(F(1), F(1)), sq)
    assert res.symmetric and res.overlap and not res.exterior


def test_region_interior_point_matches_sampling_oracle():
    x = Vec2(F(3, 10), F(4, 10))
    res = point_region_test(x, TRI)
    assert res.chords == _sampled_chord_oracle(x, TRI) == 3
    assert not res.exterior


def test_region_generic_points_match_oracle():
    rng = random.Random(99)
    from cwpoly.fuzz import random_cw_plane

    checked = 0
    for _ in range(12):
        plane = random_cw_plane(rng, n_max=6)
        pts = [p for p in plane.P.vertices]
        for _ in range(6):
            x = Vec2(F(rng.randint(-5, 25), 7), F(rng.randint(-5, 25), 7))
            res = point_region_test(x, pts)
            if res.overlap:
                continue
            assert res.chords == _sampled_chord_oracle(x, pts), (x, res)
            checked += 1
    assert checked > 40


def test_chord_count_float_inputs():
    pts = [Vec2(0.0, 0.0), Vec2(1.0, 0.0), Vec2(0.0, 1.0)]
    res = chord_count(Vec2(0.3, 0.4), pts)
    assert res.chords == 3
