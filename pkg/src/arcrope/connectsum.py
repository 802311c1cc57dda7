"""Connected sum of two prism-built curves without increasing total length.

The top floor of the lower curve and the bottom floor of the upper curve are
first straightened into horizontal segments. The curves are then stacked so
the two segments overlap on one line and share an endpoint. Both segments
and their four quarter-circles are removed; the shared end is closed by a
vertical segment of length 2 and the far ends by a short junction (a flat
step, or an S-bend through the common internal tangent of two unit circles).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .curve import CircularArc, LineSegment, PiecewiseCurve, arc_from_tangent, check_continuity, length

EZ = np.array([0.0, 0.0, 1.0])
TOL = 1e-9


class NotBuilderOutput(ValueError):
    pass


class NotPrepared(ValueError):
    pass


class OverlapDetected(RuntimeError):
    pass


FLAT = "flat"
BITANGENT = "bitangent"


@dataclass(frozen=True)
class JoinPlan:
    l1: float
    l2: float
    case: str
    saved_length: float
    theta: float = 0.0  # half of the arc angle replaced at each S-bend circle

    @property
    def half_diagonal(self) -> float:
        return math.tan(self.theta)


def _z_extent(p) -> tuple:
    if isinstance(p, LineSegment):
        z = (p.start[2], p.end[2])
        return min(z), max(z)
    e1, e2 = p.e1, p.e2
    amp = p.radius * math.hypot(e1[2], e2[2])
    zs = [p.start[2], p.end[2]]
    if amp > 0:
        phi = math.atan2(e2[2], e1[2]) % (2 * math.pi)
        for cand in (phi, (phi + math.pi) % (2 * math.pi)):
            if cand <= p.sweep_angle:
                zs.append(p.center[2] + p.radius * (math.cos(cand) * e1[2] + math.sin(cand) * e2[2]))
    return min(zs), max(zs)


def _is_quarter(p) -> bool:
    return (
        isinstance(p, CircularArc)
        and abs(p.radius - 1.0) < TOL
        and abs(p.sweep_angle - math.pi / 2) < TOL
        and abs(p.plane_normal[2]) < TOL
    )


def _is_horizontal(p, z) -> bool:
    lo, hi = _z_extent(p)
    return abs(lo - z) < TOL and abs(hi - z) < TOL


@dataclass(frozen=True)
class _Floor:
    loop: int
    first: int  # index within the loop of the quarter-circle leading into the floor
    zext: float
    sign: float  # +1 for the top floor, -1 for the bottom floor


def _find_floor(c: PiecewiseCurve, which: str) -> _Floor:
    if which not in ("top", "bottom"):
        raise ValueError("which must be 'top' or 'bottom'")
    sign = 1.0 if which == "top" else -1.0
    loops = list(c.loops())
    ext = [[_z_extent(p) for p in lp] for lp in loops]
    if sign > 0:
        zext = max(hi for e in ext for _, hi in e)
    else:
        zext = min(lo for e in ext for lo, _ in e)
    found = []
    for li, lp in enumerate(loops):
        n = len(lp)
        for k, p in enumerate(lp):
            if _is_horizontal(p, zext):
                found.append((li, (k - 1) % n))
    if len(found) != 1:
        raise NotBuilderOutput(f"expected one horizontal piece on the {which} floor, found {len(found)}")
    li, first = found[0]
    lp = loops[li]
    n = len(lp)
    if n < 4:
        raise NotBuilderOutput("loop too short to carry a fin structure")
    q_in, q_out = lp[first], lp[(first + 2) % n]
    if not (_is_quarter(q_in) and _is_quarter(q_out)):
        raise NotBuilderOutput(f"the {which} floor is not flanked by unit quarter-circles")
    if np.linalg.norm(q_in.start_tangent() - sign * EZ) > 1e-7 or np.linalg.norm(q_out.end_tangent() + sign * EZ) > 1e-7:
        raise NotBuilderOutput(f"fins at the {which} floor do not arrive vertically")
    skip_idx = {first, (first + 1) % n, (first + 2) % n}
    for lj, e in enumerate(ext):
        for k, (lo, hi) in enumerate(e):
            if lj == li and k in skip_idx:
                continue
            if (sign > 0 and hi > zext - 1 + 1e-7) or (sign < 0 and lo < zext + 1 - 1e-7):
                raise NotBuilderOutput(f"another piece reaches into the {which} floor")
    return _Floor(li, first, zext, sign)


def _floor_pieces(P_in, P_out, sign):
    """Quarter-circle, segment, quarter-circle from ``P_in`` up/down to the floor and back to ``P_out``."""
    D = P_out - P_in
    D[2] = 0.0
    dist = float(np.linalg.norm(D))
    if dist <= 2.0 + 1e-12:
        raise NotBuilderOutput("fin junctions too close to lay a straight floor segment")
    w = D / dist
    v = sign * EZ
    E_in = P_in + w + v
    E_out = P_out - w + v
    q_in = arc_from_tangent(P_in, v, P_in + w, math.pi / 2, 1.0)
    seg = LineSegment(E_in, E_out)
    q_out = arc_from_tangent(E_out, w, P_out - w, math.pi / 2, 1.0)
    return [q_in, seg, q_out]


def _replace(lp, first, new):
    n = len(lp)
    idx = [(first + i) % n for i in range(3)]
    out = list(lp)
    for i, p in zip(idx, new):
        out[i] = p
    return out


def straighten_extreme_floor(c: PiecewiseCurve, which: str = "top") -> PiecewiseCurve:
    """Replace the extreme binding arc by a straight segment between swivelled quarter-circles."""
    fl = _find_floor(c, which)
    loops = [list(lp) for lp in c.loops()]
    lp = loops[fl.loop]
    n = len(lp)
    P_in = np.array(lp[fl.first].start)
    P_out = np.array(lp[(fl.first + 2) % n].end)
    loops[fl.loop] = _replace(lp, fl.first, _floor_pieces(P_in, P_out, fl.sign))
    return PiecewiseCurve.from_loops(loops, c.closed)


def _prepared_floor(c: PiecewiseCurve, which: str):
    try:
        fl = _find_floor(c, which)
    except NotBuilderOutput as e:
        raise NotPrepared(str(e)) from e
    lp = list(c.loops())[fl.loop]
    n = len(lp)
    seg = lp[(fl.first + 1) % n]
    if not isinstance(seg, LineSegment):
        raise NotPrepared(f"the {which} floor has not been straightened")
    d = seg.direction
    if (
        np.linalg.norm(lp[fl.first].end_tangent() - d) > 1e-7
        or np.linalg.norm(lp[(fl.first + 2) % n].start_tangent() - d) > 1e-7
    ):
        raise NotPrepared(f"the {which} floor quarter-circles are not aligned with its segment")
    return fl, lp, seg


def _open_path(lp, first):
    """Loop pieces with the floor triple removed, running from its exit junction to its entry junction."""
    n = len(lp)
    start = (first + 3) % n
    rot = list(lp[start:]) + list(lp[:start])
    return rot[:-3]


def _rot_z(angle):
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def _junction(A, B, h, dx):
    """Unit-curvature path from ``A`` (heading +z) to ``B`` (heading +z), ``B`` two units higher.

    ``h`` is the horizontal unit vector from A towards B and ``dx >= 0`` the
    horizontal offset. Returns (pieces, case, theta).
    """
    if dx >= 2.0:
        p1 = arc_from_tangent(A, EZ, A + h, math.pi / 2, 1.0)
        a = A + h + EZ
        b = B - h - EZ
        p3 = arc_from_tangent(b, h, B - h, math.pi / 2, 1.0)
        pieces = [p1]
        if dx - 2.0 > 1e-12:
            pieces.append(LineSegment(a, b))
        pieces.append(p3)
        return pieces, FLAT, 0.0
    theta = math.atan((2.0 - dx) / 2.0)
    C1 = A + h
    C2 = B - h
    sweep = math.pi / 2 - 2 * theta
    heading = math.cos(2 * theta) * h + math.sin(2 * theta) * EZ
    pieces = []
    if sweep > 1e-12:
        p1 = arc_from_tangent(A, EZ, C1, sweep, 1.0)
        T1 = np.array(p1.end)
        pieces.append(p1)
    else:
        T1 = np.array(A, dtype=float)
    M = 0.5 * (C1 + C2)
    T2 = 2 * M - T1
    pieces.append(LineSegment(T1, T2))
    if sweep > 1e-12:
        pieces.append(arc_from_tangent(T2, heading, C2, sweep, 1.0))
    return pieces, BITANGENT, theta


def _centroid_xy(lp):
    pts = np.array([p.start for p in lp])
    return pts.mean(axis=0)


def _side(w, origin, point):
    d = point - origin
    return float(w[0] * d[1] - w[1] * d[0])


def plan_and_join(c1: PiecewiseCurve, c2: PiecewiseCurve):
    """Join ``c1`` (straightened on top) below ``c2`` (straightened on bottom); returns (curve, plan)."""
    if not (c1.closed and c2.closed):
        raise NotPrepared("both curves must be closed")
    f1, lp1, s1 = _prepared_floor(c1, "top")
    f2, lp2, s2 = _prepared_floor(c2, "bottom")
    n1, n2 = len(lp1), len(lp2)
    O = np.array(s1.start)
    w1 = s1.direction
    ell1 = s1.length
    ell2 = s2.length
    P_k = np.array(lp1[f1.first].start)
    P_l = np.array(lp1[(f1.first + 2) % n1].end)

    side1 = _side(w1, O, _centroid_xy(lp1))
    options = []
    for o_end, direction in (("start", s2.direction), ("end", -s2.direction)):
        ang = math.atan2(w1[1], w1[0]) - math.atan2(direction[1], direction[0])
        R = _rot_z(ang)
        anchor = np.array(s2.start if o_end == "start" else s2.end)
        t = O - R @ anchor
        side2 = _side(w1, O, R @ _centroid_xy(lp2) + t)
        options.append((side1 * side2, o_end, R, t))
    # binding prisms on opposite sides of the shared line when possible
    options.sort(key=lambda o: o[0])
    _, o_end, R, t = options[0]
    c2p = c2.transformed(R, t)
    lp2p = list(c2p.loops())[f2.loop]
    path2 = _open_path(lp2p, f2.first)  # from the far junction of the segment's end to its start side
    near_in = np.array(lp2p[f2.first].start)
    near_out = np.array(lp2p[(f2.first + 2) % n2].end)
    if o_end == "start":
        # shared end is the entry junction; walk the path backwards
        path2 = [p.reversed() for p in reversed(path2)]
        Po2, Pf2 = near_in, near_out
    else:
        Po2, Pf2 = near_out, near_in

    gap = Po2 - P_k
    if np.linalg.norm(gap - 2 * EZ) > 1e-7:
        raise NotPrepared("stacked curves do not line up at the shared endpoint")

    path1 = _open_path(lp1, f1.first)  # P_l ... P_k
    vertical = LineSegment(P_k, Po2)
    dx_signed = ell2 - ell1
    h = w1 if dx_signed >= 0 else -w1
    junction, case, theta = _junction(P_l, Pf2, h, abs(dx_signed))
    back = [p.reversed() for p in reversed(junction)]
    loop = list(path1) + [vertical] + list(path2) + back

    loops = []
    for li, lp in enumerate(c1.loops()):
        if li == f1.loop:
            loops.append(loop)
        else:
            loops.append(list(lp))
    for li, lp in enumerate(c2p.loops()):
        if li != f2.loop:
            loops.append(list(lp))
    out = PiecewiseCurve.from_loops(loops, closed=True)
    saved = length(c1) + length(c2) - length(out)
    plan = JoinPlan(min(ell1, ell2), max(ell1, ell2), case, saved, theta)
    return out, plan


def connect_sum(
    c1: PiecewiseCurve,
    c2: PiecewiseCurve,
    verify: bool = True,
    density: float = 50.0,
    min_thickness: float = 1 - 1e-3,
) -> PiecewiseCurve:
    """Connected sum of prepared curves; ``c1`` goes underneath ``c2``.

    With ``verify`` the result is checked for C^1 joins and unit thickness,
    raising ``OverlapDetected`` if the tubes interpenetrate.
    """
    out, _ = plan_and_join(c1, c2)
    if verify:
        verify_join(out, density, min_thickness)
    return out


def verify_join(c, density, min_thickness):
    from .thickness import thickness_report

    bad = check_continuity(c)
    if bad:
        raise OverlapDetected(f"joined curve is not C^1 at {len(bad)} junction(s)")
    rep = thickness_report(c, density=density)
    if rep.thickness < min_thickness:
        raise OverlapDetected(f"joined curve has thickness {rep.thickness:.6f}")


def connect_sum_many(curves: Sequence[PiecewiseCurve], verify: bool = True, density: float = 50.0) -> PiecewiseCurve:
    """Stack and join builder curves bottom to top, re-straightening the running top floor."""
    if len(curves) == 0:
        raise ValueError("need at least one curve")
    running = curves[0]
    for c in curves[1:]:
        running = connect_sum(
            straighten_extreme_floor(running, "top"), straighten_extreme_floor(c, "bottom"), verify, density
        )
    return running


def tangent_inequality_check(theta_samples: int = 1000) -> bool:
    """tan(theta) <= 2 theta on [0, pi/4], sampled uniformly including both ends."""
    if theta_samples < 100:
        raise ValueError("use at least 100 samples")
    th = np.linspace(0.0, math.pi / 4, theta_samples)
    return bool(np.all(np.tan(th) <= 2 * th))
