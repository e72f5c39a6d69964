import random
from fractions import Fraction as F

import pytest

from cwpoly import ConvexPolygon, build_plane


@pytest.fixture
def triangle_plane():
    """Unit right triangle with half-width 1/2; the worked golden instance."""
    poly = ConvexPolygon.from_points([(0, 0), (1, 0), (0, 1)])
    return build_plane(poly, F(1, 2))


@pytest.fixture
def quad_plane():
    """Scalene quadrilateral with no parallel sides; pairs to an octagon."""
    poly = ConvexPolygon.from_points([(0, 0), (4, 0), (5, 3), (1, 5)])
    return build_plane(poly, F(1, 2))


@pytest.fixture
def symmetric_plane():
    """Centrally symmetric hexagon; degenerate central equidistant."""
    poly = ConvexPolygon.from_points(
        [(3, 0), (5, 2), (4, 4), (1, 4), (-1, 2), (0, 0)])
    return build_plane(poly, F(1, 2))


@pytest.fixture
def rng():
    return random.Random(20240817)


def fuzz_planes(seed: int, count: int, **kwargs):
    from cwpoly.fuzz import random_cw_plane

    r = random.Random(seed)
    return [random_cw_plane(r, **kwargs) for _ in range(count)]
