import math

import numpy as np
import pytest

from radscene.anchors import (GOLDEN_RATIO, circle_anchors, fibonacci_sphere,
                              sphere_anchors)
from radscene.errors import TooFewAnchors

PLATONIC_P = (4, 6, 8, 12, 20)


def dot_multiset(points, decimals=9):
    p = len(points)
    dots = [round(float(points[i] @ points[j]), decimals)
            for i in range(p) for j in range(i + 1, p)]
    return sorted(dots)


def test_golden_ratio_identity():
    assert GOLDEN_RATIO ** 2 == pytest.approx(GOLDEN_RATIO + 1, abs=1e-12)


def test_octahedron():
    pts = sphere_anchors(6).points
    expected = {(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)}
    assert {tuple(int(x) for x in row) for row in pts} == expected


def test_tetrahedron_pairwise_dots():
    pts = sphere_anchors(4).points
    # e.g. (1,1,1).(1,-1,-1)/3 = -1/3; all pairs agree
    for d in dot_multiset(pts):
        assert d == pytest.approx(-1 / 3)


def test_cube_dot_multiset():
    dots = dot_multiset(sphere_anchors(8).points, decimals=6)
    assert set(dots) == {round(1 / 3, 6), round(-1 / 3, 6), -1.0}


def test_fibonacci_z_formula():
    pts = sphere_anchors(5).points
    assert pts[4, 2] == pytest.approx((2 * 5 - 1) / 5 - 1)  # z_5 = 0.8
    assert pts[0, 2] == pytest.approx(1 / 5 - 1)


def test_unit_norm_all_schemes():
    for p in list(PLATONIC_P) + [5, 7, 30, 101]:
        pts = sphere_anchors(p).points
        assert np.max(np.abs(np.linalg.norm(pts, axis=1) - 1)) <= 1e-12
    for p in (3, 4, 17):
        pts = circle_anchors(p).points
        assert np.max(np.abs(np.linalg.norm(pts, axis=1) - 1)) <= 1e-12


def test_platonic_rows_sum_to_zero_and_distinct():
    for p in PLATONIC_P:
        pts = sphere_anchors(p).points
        assert np.max(np.abs(pts.sum(axis=0))) <= 1e-12
        assert len({tuple(np.round(r, 12)) for r in pts}) == p


def test_scheme_labels():
    assert sphere_anchors(6).scheme == "platonic"
    assert sphere_anchors(7).scheme == "fibonacci"
    assert circle_anchors(5).scheme == "circle"


def test_too_few_anchors():
    with pytest.raises(TooFewAnchors):
        sphere_anchors(3)
    with pytest.raises(TooFewAnchors):
        circle_anchors(2)


def test_circle_p4():
    pts = circle_anchors(4).points
    expected = {(0, 1), (-1, 0), (0, -1), (1, 0)}
    assert {tuple(int(round(x)) for x in row) for row in pts} == expected


def test_circle_p3_angles():
    pts = circle_anchors(3).points
    for i in range(3):
        for j in range(i + 1, 3):
            ang = math.degrees(math.acos(np.clip(pts[i] @ pts[j], -1, 1)))
            assert ang == pytest.approx(120.0, abs=1e-9)


def test_circle_rows_sum_to_zero():
    for p in (3, 5, 12, 40):
        assert np.max(np.abs(circle_anchors(p).points.sum(axis=0))) <= 1e-12


def test_fibonacci_well_separation():
    from scipy.spatial.distance import pdist
    for p in range(5, 201):
        if p in PLATONIC_P:
            continue
        pts = fibonacci_sphere(p)
        assert pdist(pts).min() >= 1.0 / math.sqrt(p)


def test_icosahedron_dot_multiset_vs_vertex_list():
    # independent vertex list typed from the cyclic-permutation construction
    phi = (1 + math.sqrt(5)) / 2
    raw = []
    for a in (1.0, -1.0):
        for b in (phi, -phi):
            raw += [(0, a, b), (a, b, 0), (b, 0, a)]
    ref = np.array(raw) / math.sqrt(1 + phi * phi)
    assert dot_multiset(sphere_anchors(12).points) == dot_multiset(ref)


def test_dodecahedron_dot_multiset_vs_vertex_list():
    phi = (1 + math.sqrt(5)) / 2
    raw = [(sx, sy, sz) for sx in (1, -1) for sy in (1, -1) for sz in (1, -1)]
    for a in (1 / phi, -1 / phi):
        for b in (phi, -phi):
            raw += [(0, a, b), (a, b, 0), (b, 0, a)]
    ref = np.array(raw) / math.sqrt(3)
    assert dot_multiset(sphere_anchors(20).points) == dot_multiset(ref)
