"""Triangulated tube around a piecewise curve, for viewing in any OBJ viewer."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .curve import PiecewiseCurve, sample

MIN_SEGMENTS = 6


class RadiusTooLarge(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class TubeMesh:
    vertices: np.ndarray  # (n, 3)
    faces: np.ndarray  # (k, 3) zero-based

    def to_obj(self) -> str:
        out = [f"v {x!r} {y!r} {z!r}" for x, y, z in self.vertices.tolist()]
        out += [f"f {a + 1} {b + 1} {c + 1}" for a, b, c in self.faces.tolist()]
        return "\n".join(out) + "\n"

    def edge_counts(self) -> Counter:
        F = self.faces
        cnt = Counter()
        for a, b in ((0, 1), (1, 2), (2, 0)):
            for u, v in zip(F[:, a].tolist(), F[:, b].tolist()):
                cnt[(min(u, v), max(u, v))] += 1
        return cnt

    def is_watertight(self) -> bool:
        return all(v == 2 for v in self.edge_counts().values())

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edge_counts()) + len(self.faces)

    def min_triangle_area(self) -> float:
        V = self.vertices[self.faces]
        cr = np.cross(V[:, 1] - V[:, 0], V[:, 2] - V[:, 0])
        return float(0.5 * np.linalg.norm(cr, axis=1).min())


def _perpendicular(t: np.ndarray) -> np.ndarray:
    a = np.array([1.0, 0.0, 0.0]) if abs(t[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    r = a - (a @ t) * t
    return r / np.linalg.norm(r)


def rotation_minimizing_frames(points: np.ndarray, tangents: np.ndarray, closed: bool) -> np.ndarray:
    """Reference normals by the double-reflection rule.

    For closed loops the holonomy left over after one circuit is spread
    evenly along arclength so the first and last frames agree.
    """
    n = len(points)
    R = np.empty_like(points)
    R[0] = _perpendicular(tangents[0])

    def step(x0, x1, t0, t1, r0):
        v1 = x1 - x0
        c1 = v1 @ v1
        if c1 < 1e-30:
            return r0
        rL = r0 - (2 / c1) * (v1 @ r0) * v1
        tL = t0 - (2 / c1) * (v1 @ t0) * v1
        v2 = t1 - tL
        c2 = v2 @ v2
        r1 = rL - (2 / c2) * (v2 @ rL) * v2 if c2 > 1e-30 else rL
        r1 = r1 - (r1 @ t1) * t1
        return r1 / np.linalg.norm(r1)

    for i in range(n - 1):
        R[i + 1] = step(points[i], points[i + 1], tangents[i], tangents[i + 1], R[i])
    if closed and n > 1:
        r_end = step(points[-1], points[0], tangents[-1], tangents[0], R[-1])
        t0 = tangents[0]
        b0 = np.cross(t0, R[0])
        twist = math.atan2(r_end @ b0, r_end @ R[0])  # angle from R[0] to r_end
        seg = np.linalg.norm(np.diff(np.vstack([points, points[:1]]), axis=0), axis=1)
        frac = np.concatenate([[0.0], np.cumsum(seg[:-1])]) / seg.sum()
        ang = -twist * frac
        B = np.cross(tangents, R)
        R = np.cos(ang)[:, None] * R + np.sin(ang)[:, None] * B
    return R


def export_mesh(
    c: PiecewiseCurve, m: int = 16, r: float = 1.0, density: float = 10.0, thickness: float = 1.0
) -> TubeMesh:
    """Tube of radius ``r`` with ``m`` cross-section vertices per curve sample."""
    if m < MIN_SEGMENTS:
        raise ValueError(f"need at least {MIN_SEGMENTS} cross-section segments, got {m}")
    if not (0 < r <= thickness):
        raise RadiusTooLarge(f"tube radius {r} must lie in (0, {thickness}]")
    S = sample(c, density)
    phi = 2 * math.pi * np.arange(m) / m
    cos, sin = np.cos(phi), np.sin(phi)
    verts, faces = [], []
    base = 0
    for li in range(c.n_loops):
        sel = S.loop == li
        P, T = S.points[sel], S.tangents[sel]
        n = len(P)
        R = rotation_minimizing_frames(P, T, c.closed)
        B = np.cross(T, R)
        ring = P[:, None, :] + r * (cos[None, :, None] * R[:, None, :] + sin[None, :, None] * B[:, None, :])
        verts.append(ring.reshape(-1, 3))
        rows = n if c.closed else n - 1
        i = np.arange(rows)[:, None]
        j = np.arange(m)[None, :]
        a = base + i * m + j
        b = base + i * m + (j + 1) % m
        cc = base + ((i + 1) % n) * m + j
        d = base + ((i + 1) % n) * m + (j + 1) % m
        faces.append(np.stack([a, b, d], axis=-1).reshape(-1, 3))
        faces.append(np.stack([a, d, cc], axis=-1).reshape(-1, 3))
        base += n * m
    return TubeMesh(np.vstack(verts), np.vstack(faces).astype(np.int64))
