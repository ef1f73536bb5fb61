import pytest
from gmpy2 import mpq

from tvgraph.errors import IndexOutOfRange, TooFewPoints
from tvgraph.generators import regular_polygon
from tvgraph.geometry import (
    PointConfig,
    affine_dependence_kernel,
    convex_hull_indices_2d,
    in_convex_position_2d,
    in_general_position,
    orientation,
    rational_config,
    segment_intersection_point,
    strong_general_convex_position_2d,
)
from tvgraph.scalars import sign


def test_orientation_basic():
    cfg = rational_config(2, [(0, 0), (1, 0), (0, 1)])
    assert orientation(cfg, [0, 1, 2]) == 1
    assert orientation(cfg, [0, 2, 1]) == -1
    collinear = rational_config(2, [(0, 0), (1, 1), (2, 2)])
    assert orientation(collinear, [0, 1, 2]) == 0


def test_orientation_antisymmetry():
    cfg = rational_config(2, [(0, 0), (3, 1), (1, 4), (2, 2)])
    base = orientation(cfg, [0, 1, 2])
    assert orientation(cfg, [1, 0, 2]) == -base
    assert orientation(cfg, [2, 1, 0]) == -base


def test_orientation_octagon_consecutive():
    octagon = regular_polygon(8)
    for k in range(8):
        assert orientation(octagon, [k, (k + 1) % 8, (k + 2) % 8]) == 1


def test_orientation_errors():
    cfg = rational_config(2, [(0, 0), (1, 0), (0, 1)])
    with pytest.raises(IndexOutOfRange):
        orientation(cfg, [0, 1, 5])


def test_kernel_collinear_triple():
    cfg = rational_config(1, [(0,), (1,), (2,)])
    kernel = affine_dependence_kernel(cfg)
    assert len(kernel) == 1
    (v,) = kernel
    # proportional to the second difference (1, -2, 1)
    assert v[0] * (-2) == v[1] and v[2] == v[0] and v[0] != 0


def test_kernel_independent_points():
    cfg = rational_config(2, [(0, 0), (1, 0), (0, 1)])
    assert affine_dependence_kernel(cfg) == []


def test_kernel_quadrilateral_signs():
    # (1,1) is the midpoint of (2,0) and (0,2); the first point carries
    # coefficient 0, so the sign pattern is (0, -, -, +) up to global sign
    cfg = rational_config(2, [(0, 0), (2, 0), (0, 2), (1, 1)])
    kernel = affine_dependence_kernel(cfg)
    assert len(kernel) == 1
    (v,) = kernel
    signs = [sign(c) for c in v]
    if signs[3] < 0:
        signs = [-s for s in signs]
    assert signs == [0, -1, -1, 1]
    assert v[1] == v[2] and v[3] == -2 * v[1]


def test_general_position():
    assert in_general_position(rational_config(2, [(0, 0), (1, 0), (0, 1), (2, 3)]))
    assert not in_general_position(rational_config(2, [(0, 0), (1, 0), (2, 0), (0, 1)]))
    assert in_general_position(regular_polygon(6))
    with pytest.raises(TooFewPoints):
        in_general_position(rational_config(2, [(0, 0), (1, 0)]))


def test_convex_hull_square_with_interior():
    cfg = rational_config(2, [(0, 0), (4, 0), (4, 4), (0, 4), (2, 2), (1, 1)])
    hull = convex_hull_indices_2d(cfg)
    assert sorted(hull) == [0, 1, 2, 3]
    assert not in_convex_position_2d(cfg)
    assert in_convex_position_2d(rational_config(2, [(0, 0), (4, 0), (4, 4), (0, 4)]))


def test_segment_intersection():
    a, b = (mpq(0), mpq(0)), (mpq(2), mpq(2))
    c, d = (mpq(0), mpq(2)), (mpq(2), mpq(0))
    point = segment_intersection_point(a, b, c, d)
    assert point == (mpq(1), mpq(1))
    parallel = segment_intersection_point(a, b, (mpq(0), mpq(1)), (mpq(2), mpq(3)))
    assert parallel is None


def test_strong_position_hexagon_vs_heptagon():
    # even polygons have concurrent main diagonals, odd ones do not
    assert not strong_general_convex_position_2d(regular_polygon(6))
    assert strong_general_convex_position_2d(regular_polygon(7))


def test_strong_position_quadrilateral():
    cfg = rational_config(2, [(0, 0), (5, 1), (6, 5), (1, 4)])
    assert strong_general_convex_position_2d(cfg)
