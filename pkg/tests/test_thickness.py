import math

import numpy as np
import pytest

from arcrope.curve import CircularArc, LineSegment, PiecewiseCurve
from arcrope.thickness import (
    CurveNotClosed,
    dcsd_estimate,
    thickness_report,
    triple_circumradius_check,
)
from conftest import circle, stadium


def test_unit_circle():
    rep = thickness_report(circle())
    assert rep.min_radius == 1.0
    assert rep.dcsd == pytest.approx(2.0, abs=1e-9)
    assert rep.thickness == pytest.approx(1.0, abs=1e-6)


def test_radius_three_circle():
    assert thickness_report(circle(3.0), density=30).thickness == pytest.approx(3.0, abs=1e-6)


def test_stadium():
    est = dcsd_estimate(stadium())
    assert est.critical
    assert est.length == pytest.approx(2.0, abs=1e-6)
    assert thickness_report(stadium()).thickness == pytest.approx(1.0, abs=1e-3)


def test_trefoil_unit_thickness(trefoil_curve):
    rep = thickness_report(trefoil_curve, density=100)
    assert rep.dcsd >= 2 - 1e-3
    assert 1 - 1e-3 <= rep.thickness <= 1 + 1e-3
    assert rep.diagnostics == ()


def test_witness_points_on_curve(trefoil_curve):
    rep = thickness_report(trefoil_curve, density=50)
    p, q = rep.witness_points
    assert np.linalg.norm(q - p) == pytest.approx(rep.dcsd, rel=1e-12)


def test_report_format():
    s = thickness_report(circle()).format()
    assert s.startswith("thickness=1 ")
    assert "witness=(" in s


@pytest.mark.parametrize("lam", [0.5, 2.0])
def test_scaling_equivariance(lam):
    base = thickness_report(stadium())
    scaled = thickness_report(stadium().scaled(lam), density=100 / lam)
    assert scaled.min_radius == pytest.approx(lam * base.min_radius, rel=1e-12)
    assert scaled.dcsd == pytest.approx(lam * base.dcsd, rel=1e-6)
    assert scaled.thickness == pytest.approx(lam * base.thickness, rel=1e-6)


def test_rigid_motion_invariance(trefoil_curve):
    th = 0.7
    R = np.array([[math.cos(th), 0, math.sin(th)], [0, 1, 0], [-math.sin(th), 0, math.cos(th)]])
    a = thickness_report(trefoil_curve, density=50)
    b = thickness_report(trefoil_curve.transformed(R, (3, -2, 5)), density=50)
    assert b.thickness == pytest.approx(a.thickness, abs=1e-9)


def test_density_monotone(trefoil_curve):
    lo = dcsd_estimate(trefoil_curve, density=50).length
    hi = dcsd_estimate(trefoil_curve, density=100).length
    assert hi <= lo + 1e-6


def test_open_curve_rejected():
    c = PiecewiseCurve([LineSegment([0, 0, 0], [1, 0, 0])], closed=False)
    with pytest.raises(CurveNotClosed):
        dcsd_estimate(c)


def test_density_floor():
    with pytest.raises(ValueError):
        dcsd_estimate(circle(), density=5)


def test_two_circle_link_chord():
    # two linked unit circles: a Hopf link whose short chord is the centre offset
    a = circle()
    b = PiecewiseCurve([CircularArc([1, 0, 0], [0, 1, 0], [2, 0, 0], 2 * math.pi)])
    c = PiecewiseCurve.from_loops([a.pieces, b.pieces])
    rep = thickness_report(c, density=60)
    assert rep.dcsd == pytest.approx(1.0, abs=1e-6)
    assert rep.thickness == pytest.approx(0.5, abs=1e-6)


def test_triple_check_circles():
    assert triple_circumradius_check(circle(), density=10) == pytest.approx(1.0, abs=1e-9)
    assert triple_circumradius_check(circle(2.5), density=10) == pytest.approx(2.5, abs=1e-9)


def test_triple_check_stadium():
    r = triple_circumradius_check(stadium(), density=100)
    assert 1 - 1e-3 <= r <= 1 + 1e-12
