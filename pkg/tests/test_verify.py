"""Report structure and whole-suite behaviour of the verifier."""
from fractions import Fraction as F

from cwpoly import ConvexPolygon, PairedPolygon, build_plane, vec
from cwpoly.backend import get_backend
from cwpoly.verify import run_verify

from conftest import fuzz_planes


def test_triangle_report_all_pass(triangle_plane):
    report = run_verify(triangle_plane, seed=1, samples=4)
    assert report.all_ok
    ids = [c.check_id for c in report.checks]
    assert len(ids) == len(set(ids))  # each check appears exactly once
    gap = next(c for c in report.checks if c.check_id == "areas.signed_gap")
    assert "3/16" in gap.actual
    width = next(c for c in report.checks if c.check_id == "cw.constant_width")
    assert "a=1/2" in width.actual


def test_symmetric_degenerate_path(symmetric_plane):
    report = run_verify(symmetric_plane, seed=2, samples=2)
    assert report.all_ok
    cusp = next(c for c in report.checks if c.check_id == "cw.cusps_odd_ge3")
    assert cusp.actual == "degenerate"


def test_float_backend_report(triangle_plane):
    fb = get_backend("float")
    paired = PairedPolygon(
        [vec(float(p.x), float(p.y), fb) for p in triangle_plane.P.vertices], 3, fb)
    plane = build_plane(paired, 0.5)
    report = run_verify(plane, seed=3, samples=2)
    assert report.backend == "float"
    assert report.all_ok, [(c.check_id, c.actual) for c in report.checks if not c.ok]


def test_float_backend_tangential_containment():
    # the quad's involute touches its central curve; float rounding must not
    # misclassify those tangential samples as exterior
    fb = get_backend("float")
    poly = ConvexPolygon.from_points([(0, 0), (4, 0), (5, 3), (1, 5)], fb)
    plane = build_plane(poly, 0.5)
    report = run_verify(plane, seed=8, samples=4)
    assert report.all_ok, [(c.check_id, c.actual) for c in report.checks if not c.ok]


def test_perturbed_paired_fails_with_witness():
    nudged = PairedPolygon(
        [vec(3, 0), vec(5, 2), vec(4, 5), vec(1, 4), vec(-1, 2), vec(0, 0)], 3)
    plane = build_plane(nudged, F(1, 2), strict=False)
    report = run_verify(plane, seed=4)
    assert not report.all_ok
    width = next(c for c in report.checks if c.check_id == "cw.constant_width")
    assert not width.ok and "index" in width.actual


def test_report_json_shape(triangle_plane):
    report = run_verify(triangle_plane, seed=9, samples=2)
    data = report.to_json()
    assert data["summary"]["total"] == len(data["checks"])
    assert data["seed"] == 9
    assert all(c["backend"] == "rational" for c in data["checks"])


def test_fuzz_reports_pass():
    for i, plane in enumerate(fuzz_planes(501, 10)):
        report = run_verify(plane, seed=i, samples=2, iterate_steps=3)
        assert report.all_ok, [(c.check_id, c.actual) for c in report.checks if not c.ok]
