import math

import numpy as np
import pytest

from arcrope import catalog
from arcrope.builder import build
from arcrope.curve import CircularArc, LineSegment, PiecewiseCurve


def circle(radius=1.0, center=(0.0, 0.0, 0.0)):
    c = np.asarray(center, dtype=float)
    return PiecewiseCurve([CircularArc(c, [0, 0, 1], c + [radius, 0, 0], 2 * math.pi)])


def stadium(straight=3.0):
    """Two unit semicircles joined by parallel segments of length ``straight``."""
    L = straight
    return PiecewiseCurve(
        [
            LineSegment([0, -1, 0], [L, -1, 0]),
            CircularArc([L, 0, 0], [0, 0, 1], [L, -1, 0], math.pi),
            LineSegment([L, 1, 0], [0, 1, 0]),
            CircularArc([0, 0, 0], [0, 0, 1], [0, 1, 0], math.pi),
        ]
    )


@pytest.fixture(scope="session")
def trefoil():
    return catalog.load("3_1")


@pytest.fixture(scope="session")
def trefoil_mirror():
    return catalog.load("3_1m")


@pytest.fixture(scope="session")
def trefoil_curve(trefoil):
    return build(trefoil)
