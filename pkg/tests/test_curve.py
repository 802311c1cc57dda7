import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcrope.curve import (
    CircularArc,
    CurveArrays,
    CurveError,
    LineSegment,
    PiecewiseCurve,
    check_continuity,
    infimal_radius_of_curvature,
    length,
    sample,
)
from conftest import circle, stadium


def test_circle_length():
    assert length(circle()) == pytest.approx(2 * math.pi, abs=1e-15)


def test_stadium_length_and_radius():
    c = stadium()
    assert length(c) == pytest.approx(2 * math.pi + 6, abs=1e-12)
    assert infimal_radius_of_curvature(c) == 1.0
    assert check_continuity(c) == []


def test_polygon_has_no_radius():
    sq = PiecewiseCurve(
        [
            LineSegment([0, 0, 0], [1, 0, 0]),
            LineSegment([1, 0, 0], [1, 1, 0]),
            LineSegment([1, 1, 0], [0, 1, 0]),
            LineSegment([0, 1, 0], [0, 0, 0]),
        ]
    )
    with pytest.warns(UserWarning):
        assert infimal_radius_of_curvature(sq) == math.inf


def test_right_angle_diagnostic():
    c = PiecewiseCurve([LineSegment([0, 0, 0], [1, 0, 0]), LineSegment([1, 0, 0], [1, 1, 0])], closed=False)
    diag = check_continuity(c)
    assert len(diag) == 1
    assert diag[0].position_gap == 0.0
    assert diag[0].tangent_gap == pytest.approx(math.sqrt(2))


def test_degenerate_pieces_rejected():
    with pytest.raises(CurveError):
        LineSegment([1, 2, 3], [1, 2, 3])
    with pytest.raises(CurveError):
        CircularArc([0, 0, 0], [0, 0, 1], [0, 0, 0], 1.0)
    with pytest.raises(CurveError):
        # start not in the plane through the centre
        CircularArc([0, 0, 0], [0, 0, 1], [1, 0, 1], 1.0)


def test_stored_radius_is_checked():
    a = CircularArc([0, 0, 0], [0, 0, 1], [1, 0, 0], 1.0, radius=1.0)
    assert a.radius == 1.0
    with pytest.raises(CurveError):
        CircularArc([0, 0, 0], [0, 0, 1], [1, 0, 0], 1.0, radius=1.1)


def test_circle_sampling_counts():
    S = sample(circle(), 4 / math.pi)
    assert len(S) == 8
    ang = np.arctan2(S.points[:, 1], S.points[:, 0])
    assert np.allclose(np.diff(np.unwrap(ang)), math.pi / 4)


def test_segment_samples_include_endpoints():
    c = PiecewiseCurve([LineSegment([0, 0, 0], [2, 0, 0])], closed=False)
    S = sample(c, 1.0)
    assert np.allclose(S.points[0], [0, 0, 0])
    assert np.allclose(S.points[-1], [2, 0, 0])


def test_sampled_tangents_analytic():
    S = sample(circle(2.0, center=(1, -1, 3)), 30)
    assert np.allclose(np.linalg.norm(S.tangents, axis=1), 1.0, atol=1e-15)
    radial = S.points - np.array([1, -1, 3])
    assert np.max(np.abs(np.einsum("ij,ij->i", radial, S.tangents))) < 1e-14


def test_polygonal_length_converges():
    S = sample(circle(), 100)
    P = np.vstack([S.points, S.points[:1]])
    poly = np.linalg.norm(np.diff(P, axis=0), axis=1).sum()
    assert abs(poly - 2 * math.pi) / (2 * math.pi) < 1e-3


def test_curve_arrays_match_pieces():
    c = stadium()
    arrs = CurveArrays(c)
    s = np.linspace(0, length(c), 57, endpoint=False)
    P, T, K = arrs.evaluate(s, np.zeros(len(s), dtype=int))
    S = sample(c, 40)
    assert np.allclose(np.linalg.norm(T, axis=1), 1)
    # curvature vectors have magnitude 0 on segments and 1 on unit arcs
    k = np.linalg.norm(K, axis=1)
    assert set(np.round(k, 12)) <= {0.0, 1.0}
    P2, T2, _ = arrs.evaluate(S.s, S.loop)
    assert np.allclose(P2, S.points, atol=1e-12)
    assert np.allclose(T2, S.tangents, atol=1e-12)


def _rotation(a, b, g):
    Rz = np.array([[math.cos(a), -math.sin(a), 0], [math.sin(a), math.cos(a), 0], [0, 0, 1]])
    Ry = np.array([[math.cos(b), 0, math.sin(b)], [0, 1, 0], [-math.sin(b), 0, math.cos(b)]])
    Rx = np.array([[1, 0, 0], [0, math.cos(g), -math.sin(g)], [0, math.sin(g), math.cos(g)]])
    return Rz @ Ry @ Rx


angles = st.floats(-math.pi, math.pi, allow_nan=False)
coords = st.floats(-50, 50, allow_nan=False)


@settings(max_examples=50, deadline=None)
@given(angles, angles, angles, coords, coords, coords)
def test_rigid_motion_invariance(a, b, g, tx, ty, tz):
    c = stadium()
    R = _rotation(a, b, g)
    moved = c.transformed(R, (tx, ty, tz))
    assert length(moved) == pytest.approx(length(c), rel=1e-12)
    assert infimal_radius_of_curvature(moved) == infimal_radius_of_curvature(c)
    assert check_continuity(moved, 1e-8) == []


def test_reversal(trefoil_curve):
    r = trefoil_curve.reversed()
    assert length(r) == pytest.approx(length(trefoil_curve), rel=1e-14)
    assert check_continuity(r) == []


def test_scaling():
    c = stadium().scaled(2.5)
    assert length(c) == pytest.approx(2.5 * (2 * math.pi + 6))
    assert infimal_radius_of_curvature(c) == 2.5


def test_multi_loop_partition():
    c = PiecewiseCurve.from_loops([circle().pieces, circle(center=(5, 0, 0)).pieces])
    assert c.n_loops == 2
    assert [len(lp) for lp in c.loops()] == [1, 1]
    assert check_continuity(c) == []
    with pytest.raises(CurveError):
        PiecewiseCurve(c.pieces, True, (1, 2))
