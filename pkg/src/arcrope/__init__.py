"""Ropelength upper bounds from arc-presentations of knots and links."""

from .arcpres import (
    ArcPresentation,
    ArcPresentationError,
    ArcTriple,
    extremal,
    link_structure,
    max_skip_oracle,
    random_presentation,
    skip,
    validate,
)
from .bounds import bound_report, composite_report, skip_bound, thm1_bound, thm2_bound
from .builder import build, predicted_length, prop1_bound
from .connectsum import connect_sum, connect_sum_many, straighten_extreme_floor
from .curve import CircularArc, LineSegment, PiecewiseCurve, check_continuity, infimal_radius_of_curvature, length
from .formats import ParseError, emit_curve, emit_presentation, parse_curve, parse_presentation
from .mesh import TubeMesh, export_mesh
from .thickness import dcsd_estimate, thickness_report

__version__ = "0.1.0"

__all__ = [
    "ArcPresentation",
    "ArcPresentationError",
    "ArcTriple",
    "extremal",
    "link_structure",
    "max_skip_oracle",
    "random_presentation",
    "skip",
    "validate",
    "bound_report",
    "composite_report",
    "skip_bound",
    "thm1_bound",
    "thm2_bound",
    "build",
    "predicted_length",
    "prop1_bound",
    "connect_sum",
    "connect_sum_many",
    "straighten_extreme_floor",
    "CircularArc",
    "LineSegment",
    "PiecewiseCurve",
    "check_continuity",
    "infimal_radius_of_curvature",
    "length",
    "ParseError",
    "emit_curve",
    "emit_presentation",
    "parse_curve",
    "parse_presentation",
    "TubeMesh",
    "export_mesh",
    "dcsd_estimate",
    "thickness_report",
]
