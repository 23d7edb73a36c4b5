import random

from schnyder.drawing import count_crossings, dominance_violations, emit_svg, grid_points, is_injective
from schnyder.flips import random_realizer
from schnyder.realizer import barycentric


def test_crossing_primitives():
    assert count_crossings([(0, 0), (2, 2), (0, 2), (2, 0)], [(0, 1), (2, 3)]) == 1
    assert count_crossings([(0, 0), (2, 0), (1, 0), (3, 0)], [(0, 1), (2, 3)]) == 1
    assert count_crossings([(0, 0), (2, 0), (1, 0)], [(0, 1), (0, 2)]) == 1
    assert count_crossings([(0, 0), (2, 0), (1, 1)], [(0, 1), (0, 2)]) == 0
    assert count_crossings([(0, 0), (2, 0), (1, 0), (1, 3)], [(0, 1), (2, 3)]) == 1
    assert count_crossings([(0, 0), (1, 0), (5, 5), (6, 5)], [(0, 1), (2, 3)]) == 0


def test_small_drawings(k4_real, f5_real):
    for r in (k4_real, f5_real):
        pts = grid_points(barycentric(r))
        assert is_injective(pts)
        assert count_crossings(pts, list(r.base.edges())) == 0
        assert dominance_violations(barycentric(r), list(r.base.edges())) == []


def test_dominance_detects_swap(f5_real):
    coords = barycentric(f5_real)
    coords[3], coords[4] = coords[4], coords[3]
    assert dominance_violations(coords, list(f5_real.base.edges()))


def test_random_planar():
    rng = random.Random(9)
    for n in (10, 50, 150):
        r = random_realizer(n, rng)
        pts = grid_points(barycentric(r))
        assert is_injective(pts)
        assert count_crossings(pts, list(r.base.edges())) == 0


def test_svg(k4_real, f5_real):
    svg = emit_svg(k4_real)
    assert svg.count("<circle") == 4 and svg.count("<line") == 6
    assert emit_svg(f5_real).count("<line") == 9
    assert emit_svg(f5_real) == emit_svg(f5_real)
