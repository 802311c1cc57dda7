"""Realise an arc-presentation as a unit-thickness curve around a polygonal prism.

Each page becomes a vertical face of a regular prism with sides of length 2.
Arcs are drawn as fins outside their face (two unit quarter-circles joined
by a vertical segment); each floor carries one tangent-matched circular arc
inside the prism joining the two faces whose fins end on that floor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arcpres import ArcPresentation, link_structure, level_arcs
from .curve import LineSegment, PiecewiseCurve, arc_from_tangent

EZ = np.array([0.0, 0.0, 1.0])
SIDE = 2.0
FLOOR_HEIGHT = 2.0


class AlphaTooSmall(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class PrismLayout:
    alpha: int
    face_of_arc: tuple  # arc index -> face index
    side: float = SIDE
    floor_height: float = FLOOR_HEIGHT

    @property
    def apothem(self) -> float:
        return 1.0 / math.tan(math.pi / self.alpha)

    @property
    def total_height(self) -> float:
        return self.floor_height * self.alpha

    def face_angle(self, k: int) -> float:
        return 2 * math.pi * k / self.alpha

    def face_direction(self, k: int) -> np.ndarray:
        a = self.face_angle(k)
        return np.array([math.cos(a), math.sin(a), 0.0])

    @property
    def face_directions(self) -> np.ndarray:
        return np.array([self.face_direction(k) for k in range(self.alpha)])

    def level_height(self, level: int) -> float:
        return self.floor_height * level - 1.0

    def face_midpoint(self, k: int, level: int) -> np.ndarray:
        p = self.apothem * self.face_direction(k)
        p[2] = self.level_height(level)
        return p

    def face_steps(self, k: int, l: int) -> int:
        d = abs(k - l) % self.alpha
        return min(d, self.alpha - d)

    def binding_radius(self, k: int, l: int) -> float:
        """Radius of the tangent-matched arc between faces ``k`` and ``l``; ``inf`` when opposite."""
        d = self.face_steps(k, l)
        if 2 * d == self.alpha:
            return math.inf
        return math.tan(math.pi * d / self.alpha) / math.tan(math.pi / self.alpha)

    def binding_length(self, k: int, l: int) -> float:
        d = self.face_steps(k, l)
        r = self.binding_radius(k, l)
        if math.isinf(r):
            return 2 * self.apothem
        return r * (math.pi - 2 * math.pi * d / self.alpha)


def layout(A: ArcPresentation) -> PrismLayout:
    if A.alpha < 3:
        raise AlphaTooSmall("the prism construction needs alpha >= 3")
    order = A.page_order()
    face_of_arc = [0] * A.alpha
    for k, i in enumerate(order):
        face_of_arc[i] = k
    return PrismLayout(A.alpha, tuple(face_of_arc))


def fin_pieces(P: PrismLayout, face: int, start_level: int, end_level: int) -> list:
    """Fin on ``face`` from ``start_level`` to ``end_level``: quarter-circle, segment, quarter-circle."""
    n = P.face_direction(face)
    sgn = 1.0 if end_level > start_level else -1.0
    m0 = P.face_midpoint(face, start_level)
    m1 = P.face_midpoint(face, end_level)
    q0 = arc_from_tangent(m0, n, m0 + sgn * EZ, math.pi / 2, 1.0)
    top0 = m0 + n + sgn * EZ
    bot1 = m1 + n - sgn * EZ
    q1 = arc_from_tangent(bot1, sgn * EZ, m1 - sgn * EZ, math.pi / 2, 1.0)
    pieces = [q0]
    if abs(end_level - start_level) > 1:
        pieces.append(LineSegment(top0, bot1))
    pieces.append(q1)
    return pieces


def binding_piece(P: PrismLayout, level: int, face_in: int, face_out: int):
    """Piece on ``level`` entering the prism through ``face_in`` and leaving through ``face_out``."""
    m0 = P.face_midpoint(face_in, level)
    m1 = P.face_midpoint(face_out, level)
    r = P.binding_radius(face_in, face_out)
    if math.isinf(r):
        return LineSegment(m0, m1)
    n0 = P.face_direction(face_in)
    n1 = P.face_direction(face_out)
    d = P.face_steps(face_in, face_out)
    half = math.pi * d / P.alpha
    # the centre is where the two face lines meet
    center = (n0 + n1) * (P.apothem / (2 * math.cos(half) ** 2))
    center[2] = P.level_height(level)
    return arc_from_tangent(m0, -n0, center, math.pi - 2 * half, r)


def build(A: ArcPresentation) -> PiecewiseCurve:
    """Fin/prism realisation of ``A``; one closed loop per link component.

    Each loop starts with the first arc of its cycle traversed from ``x`` to
    ``y``; later arcs are traversed in whichever direction the cycle demands.
    """
    P = layout(A)
    loops = []
    for cycle in link_structure(A).cycles:
        pieces = []
        for idx, (i, forward) in enumerate(cycle):
            a = A.arcs[i]
            lo, hi = (a.x, a.y) if forward else (a.y, a.x)
            face = P.face_of_arc[i]
            pieces.extend(fin_pieces(P, face, lo, hi))
            j, _ = cycle[(idx + 1) % len(cycle)]
            pieces.append(binding_piece(P, hi, face, P.face_of_arc[j]))
        loops.append(pieces)
    return PiecewiseCurve.from_loops(loops, closed=True)


def fin_length_total(A: ArcPresentation) -> float:
    return (math.pi - 2) * A.alpha + 2 * sum(a.span for a in A.arcs)


def binding_length_total(A: ArcPresentation) -> float:
    P = layout(A)
    total = 0.0
    for level, (i, j) in sorted(level_arcs(A).items()):
        total += P.binding_length(P.face_of_arc[i], P.face_of_arc[j])
    return total


def predicted_length(A: ArcPresentation) -> float:
    """Closed-form length of ``build(A)``: fins plus binding arcs."""
    return fin_length_total(A) + binding_length_total(A)


def prop1_bound(alpha: int, skip: int) -> float:
    """Ropelength guaranteed by the prism construction for given arc count and total skip."""
    return 2 * alpha / math.tan(math.pi / alpha) + (math.pi - 2) * alpha + 2 * skip
