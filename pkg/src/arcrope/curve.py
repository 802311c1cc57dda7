"""Piecewise curves built from circular arcs and straight segments.

All lengths are in units of the tube radius. Pieces are immutable; rigid
motions and reversal return new objects.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

import numpy as np

EPS_JOIN = 1e-9


def _vec(p) -> np.ndarray:
    a = np.array(p, dtype=float).reshape(3)
    a.setflags(write=False)
    return a


class CurveError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class LineSegment:
    start: np.ndarray
    end: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "start", _vec(self.start))
        object.__setattr__(self, "end", _vec(self.end))
        if not np.linalg.norm(self.end - self.start) > 0:
            raise CurveError("degenerate segment: start == end")

    @property
    def length(self) -> float:
        return float(np.linalg.norm(self.end - self.start))

    @property
    def radius(self) -> float:
        return math.inf

    @property
    def direction(self) -> np.ndarray:
        d = self.end - self.start
        return d / np.linalg.norm(d)

    def point(self, u):
        u = np.asarray(u, dtype=float)[..., None]
        return self.start + u * self.direction

    def tangent(self, u):
        u = np.asarray(u, dtype=float)
        return np.broadcast_to(self.direction, u.shape + (3,)).copy()

    def start_tangent(self) -> np.ndarray:
        return self.direction

    def end_tangent(self) -> np.ndarray:
        return self.direction

    def reversed(self) -> "LineSegment":
        return LineSegment(self.end, self.start)

    def transformed(self, rotation, translation) -> "LineSegment":
        R = np.asarray(rotation, dtype=float)
        t = np.asarray(translation, dtype=float)
        return LineSegment(R @ self.start + t, R @ self.end + t)


@dataclass(frozen=True, eq=False)
class CircularArc:
    """Arc centred at ``center`` sweeping counter-clockwise about ``plane_normal``.

    The arc starts at ``start`` and turns through ``sweep_angle`` radians,
    so the initial tangent is ``plane_normal x (start - center) / radius``.
    """

    center: np.ndarray
    plane_normal: np.ndarray
    start: np.ndarray
    sweep_angle: float
    radius: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "center", _vec(self.center))
        n = np.array(self.plane_normal, dtype=float).reshape(3)
        norm = np.linalg.norm(n)
        if not norm > 0:
            raise CurveError("arc plane normal must be nonzero")
        object.__setattr__(self, "plane_normal", _vec(n / norm))
        object.__setattr__(self, "start", _vec(self.start))
        sweep = float(self.sweep_angle)
        if not 0.0 < sweep <= 2 * math.pi + 1e-12:
            raise CurveError(f"sweep angle {sweep} outside (0, 2pi]")
        object.__setattr__(self, "sweep_angle", sweep)
        rvec = self.start - self.center
        r = float(np.linalg.norm(rvec))
        if not r > 0:
            raise CurveError("arc radius must be positive")
        if abs(float(rvec @ self.plane_normal)) > 1e-9 * max(1.0, r):
            raise CurveError("arc start is not in the plane normal to plane_normal")
        if self.radius is not None:
            # an exact radius known to the caller overrides the rounded norm
            if abs(float(self.radius) - r) > 1e-9 * max(1.0, r):
                raise CurveError(f"stated radius {self.radius} disagrees with |start - center| = {r}")
            r = float(self.radius)
        object.__setattr__(self, "radius", r)

    @property
    def length(self) -> float:
        return self.radius * self.sweep_angle

    @property
    def e1(self) -> np.ndarray:
        v = self.start - self.center
        return v / np.linalg.norm(v)

    @property
    def e2(self) -> np.ndarray:
        return np.cross(self.plane_normal, self.e1)

    def point(self, u):
        phi = np.asarray(u, dtype=float)[..., None] / self.radius
        return self.center + self.radius * (np.cos(phi) * self.e1 + np.sin(phi) * self.e2)

    def tangent(self, u):
        phi = np.asarray(u, dtype=float)[..., None] / self.radius
        return -np.sin(phi) * self.e1 + np.cos(phi) * self.e2

    @property
    def end(self) -> np.ndarray:
        return self.point(self.length)

    def start_tangent(self) -> np.ndarray:
        return self.e2

    def end_tangent(self) -> np.ndarray:
        return self.tangent(self.length)

    def reversed(self) -> "CircularArc":
        return CircularArc(self.center, -self.plane_normal, self.end, self.sweep_angle, self.radius)

    def transformed(self, rotation, translation) -> "CircularArc":
        R = np.asarray(rotation, dtype=float)
        t = np.asarray(translation, dtype=float)
        # proper rotations only: the normal is a pseudovector
        return CircularArc(
            R @ self.center + t, R @ self.plane_normal, R @ self.start + t, self.sweep_angle, self.radius
        )


Piece = Union[LineSegment, CircularArc]


def arc_from_tangent(start, tangent, center, sweep_angle, radius=None) -> CircularArc:
    """Arc leaving ``start`` along ``tangent`` and turning about ``center``."""
    start = np.asarray(start, dtype=float)
    e1 = start - np.asarray(center, dtype=float)
    normal = np.cross(e1, np.asarray(tangent, dtype=float))
    return CircularArc(center, normal, start, sweep_angle, radius)


@dataclass(frozen=True, eq=False)
class PiecewiseCurve:
    """Chain of pieces, optionally split into several loops.

    ``loop_sizes`` partitions ``pieces`` into consecutive runs; each run is a
    separate component (closed when ``closed`` is true). A single loop is
    the default.
    """

    pieces: tuple
    closed: bool = True
    loop_sizes: tuple = ()

    def __post_init__(self):
        pieces = tuple(self.pieces)
        if not pieces:
            raise CurveError("curve needs at least one piece")
        object.__setattr__(self, "pieces", pieces)
        sizes = tuple(int(k) for k in self.loop_sizes) or (len(pieces),)
        if sum(sizes) != len(pieces) or min(sizes) < 1:
            raise CurveError("loop_sizes must partition the pieces")
        object.__setattr__(self, "loop_sizes", sizes)

    @classmethod
    def from_loops(cls, loops: Sequence[Sequence[Piece]], closed: bool = True) -> "PiecewiseCurve":
        loops = [tuple(lp) for lp in loops]
        return cls(tuple(p for lp in loops for p in lp), closed, tuple(len(lp) for lp in loops))

    def loops(self) -> Iterator[tuple]:
        i = 0
        for k in self.loop_sizes:
            yield self.pieces[i : i + k]
            i += k

    @property
    def n_loops(self) -> int:
        return len(self.loop_sizes)

    def loop_curve(self, index: int) -> "PiecewiseCurve":
        return PiecewiseCurve(list(self.loops())[index], self.closed)

    def reversed(self) -> "PiecewiseCurve":
        return PiecewiseCurve.from_loops(
            [[p.reversed() for p in reversed(lp)] for lp in self.loops()], self.closed
        )

    def transformed(self, rotation, translation=(0.0, 0.0, 0.0)) -> "PiecewiseCurve":
        return PiecewiseCurve.from_loops(
            [[p.transformed(rotation, translation) for p in lp] for lp in self.loops()], self.closed
        )

    def scaled(self, factor: float) -> "PiecewiseCurve":
        def scale(p):
            if isinstance(p, LineSegment):
                return LineSegment(factor * p.start, factor * p.end)
            return CircularArc(factor * p.center, p.plane_normal, factor * p.start, p.sweep_angle, factor * p.radius)

        return PiecewiseCurve.from_loops([[scale(p) for p in lp] for lp in self.loops()], self.closed)


def length(c: PiecewiseCurve) -> float:
    return math.fsum(p.length for p in c.pieces)


def infimal_radius_of_curvature(c: PiecewiseCurve) -> float:
    """Smallest arc radius; ``inf`` (with a warning) for an all-segment curve."""
    radii = [p.radius for p in c.pieces if isinstance(p, CircularArc)]
    if not radii:
        warnings.warn("curve has no arcs; corners between segments are not C^1", stacklevel=2)
        return math.inf
    return min(radii)


@dataclass(frozen=True)
class JoinDiagnostic:
    loop: int
    piece: int
    position_gap: float
    tangent_gap: float


def check_continuity(c: PiecewiseCurve, eps: float = EPS_JOIN) -> list:
    """Junctions whose position or unit-tangent mismatch exceeds ``eps``."""
    out = []
    base = 0
    for li, lp in enumerate(c.loops()):
        n = len(lp)
        last = n if c.closed else n - 1
        for k in range(last):
            a, b = lp[k], lp[(k + 1) % n]
            dp = float(np.linalg.norm(b.start - a.end))
            dt = float(np.linalg.norm(b.start_tangent() - a.end_tangent()))
            if dp > eps or dt > eps:
                out.append(JoinDiagnostic(li, base + k, dp, dt))
        base += n
    return out


@dataclass(frozen=True)
class Samples:
    points: np.ndarray
    tangents: np.ndarray
    s: np.ndarray
    piece: np.ndarray
    loop: np.ndarray

    def __len__(self):
        return len(self.s)

    def __iter__(self):
        return iter(zip(self.points, self.tangents, self.s))


def sample(c: PiecewiseCurve, density: float) -> Samples:
    """Arclength-uniform samples within each piece, piece endpoints included.

    Shared junction points appear once; a closed loop does not repeat its
    first point. The arclength parameter runs continuously over all loops.
    """
    if not density > 0:
        raise ValueError("density must be positive")
    pts, tans, ss, pid, lid = [], [], [], [], []
    s0 = 0.0
    idx = 0
    for li, lp in enumerate(c.loops()):
        for k, p in enumerate(lp):
            L = p.length
            m = max(1, math.ceil(L * density - 1e-9))
            include_end = (not c.closed) and k == len(lp) - 1
            u = np.linspace(0.0, L, m + 1)
            if not include_end:
                u = u[:-1]
            pts.append(p.point(u))
            tans.append(p.tangent(u))
            ss.append(s0 + u)
            pid.append(np.full(len(u), idx))
            lid.append(np.full(len(u), li))
            s0 += L
            idx += 1
    return Samples(
        np.concatenate(pts), np.concatenate(tans), np.concatenate(ss), np.concatenate(pid), np.concatenate(lid)
    )


class CurveArrays:
    """Vectorised evaluation of position, tangent and curvature vector at global arclength."""

    def __init__(self, c: PiecewiseCurve):
        self.curve = c
        n = len(c.pieces)
        self.is_arc = np.zeros(n, dtype=bool)
        self.s0 = np.zeros(n)
        self.lengths = np.array([p.length for p in c.pieces])
        self.origin = np.zeros((n, 3))
        self.e1 = np.zeros((n, 3))
        self.e2 = np.zeros((n, 3))
        self.r = np.ones(n)
        self.loop = np.zeros(n, dtype=int)
        s = 0.0
        i = 0
        loop_start, loop_len = [], []
        for li, lp in enumerate(c.loops()):
            loop_start.append(s)
            for p in lp:
                self.s0[i] = s
                self.loop[i] = li
                if isinstance(p, CircularArc):
                    self.is_arc[i] = True
                    self.origin[i] = p.center
                    self.e1[i] = p.e1
                    self.e2[i] = p.e2
                    self.r[i] = p.radius
                else:
                    self.origin[i] = p.start
                    self.e2[i] = p.direction
                s += p.length
                i += 1
            loop_len.append(s - loop_start[-1])
        self.loop_start = np.array(loop_start)
        self.loop_length = np.array(loop_len)
        self.total = s

    def wrap(self, s, loop):
        """Reduce ``s`` into its loop's parameter range (closed curves only)."""
        a = self.loop_start[loop]
        L = self.loop_length[loop]
        if not self.curve.closed:
            return np.clip(s, a, a + L)
        return a + np.mod(s - a, L)

    def piece_of(self, s, loop):
        i = np.searchsorted(self.s0, s, side="right") - 1
        i = np.clip(i, 0, len(self.s0) - 1)
        # keep the index inside the requested loop at boundaries
        lo = np.searchsorted(self.loop, loop, side="left")
        hi = np.searchsorted(self.loop, loop, side="right") - 1
        return np.clip(i, lo, hi)

    def evaluate(self, s, loop):
        s = self.wrap(np.asarray(s, dtype=float), loop)
        i = self.piece_of(s, loop)
        u = s - self.s0[i]
        arc = self.is_arc[i][:, None]
        r = self.r[i][:, None]
        phi = u[:, None] / r
        c, sn = np.cos(phi), np.sin(phi)
        e1, e2, o = self.e1[i], self.e2[i], self.origin[i]
        p_arc = o + r * (c * e1 + sn * e2)
        t_arc = -sn * e1 + c * e2
        k_arc = -(c * e1 + sn * e2) / r
        p_seg = o + u[:, None] * e2
        P = np.where(arc, p_arc, p_seg)
        T = np.where(arc, t_arc, e2)
        K = np.where(arc, k_arc, 0.0)
        return P, T, K
