"""Numerical thickness of piecewise arc/segment curves.

Thickness is the smaller of the least radius of curvature and half the
shortest doubly-critical chord, i.e. a chord perpendicular to the curve at
both of its endpoints. Chords are located by scanning sample pairs for
near-criticality and refining each candidate with a damped Newton iteration
on the two arclength parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree

from .curve import CurveArrays, PiecewiseCurve, infimal_radius_of_curvature, sample

DEFAULT_DENSITY = 100.0
DEFAULT_REFINE = 40
CRITICAL_TOL = 1e-6


class CurveNotClosed(ValueError):
    pass


class NoCriticalChord(RuntimeError):
    pass


@dataclass(frozen=True)
class ChordEstimate:
    length: float
    witness: tuple  # arclength parameters (s, t)
    points: tuple  # chord endpoints
    residual: float  # max(|f|, |g|) / length at the witness
    critical: bool
    candidates: int
    samples: int


@dataclass(frozen=True)
class ThicknessReport:
    min_radius: float
    dcsd: float
    thickness: float
    witnesses: tuple
    witness_points: tuple
    samples_used: int
    tolerance: float
    diagnostics: tuple = field(default=())

    @property
    def limited_by(self) -> str:
        return "curvature" if self.min_radius <= self.dcsd / 2 else "chord"

    def format(self) -> str:
        s, t = self.witnesses
        return (
            f"thickness={self.thickness:.12g} min_radius={self.min_radius:.12g} "
            f"dcsd={self.dcsd:.12g} witness=({s:.12g},{t:.12g})"
        )


def _separation(arrs: CurveArrays, si, ti, li, lj, closed: bool):
    """Arclength separation along the curve; ``inf`` for different loops."""
    d = np.abs(ti - si)
    if closed:
        L = arrs.loop_length[li]
        d = np.minimum(d, L - np.mod(d, L))
    return np.where(li == lj, d, np.inf)


def _filter_pairs(S, arrs, closed, h, cutoff, kmax, ii, jj):
    P, T = S.points, S.tangents
    D = P[jj] - P[ii]
    dist = np.linalg.norm(D, axis=1)
    f = np.einsum("ij,ij->i", T[ii], D)
    g = np.einsum("ij,ij->i", T[jj], D)
    thr = (2.0 + kmax * dist) * h
    keep = (np.abs(f) <= thr) & (np.abs(g) <= thr)
    ii, jj = ii[keep], jj[keep]
    sep = _separation(arrs, S.s[ii], S.s[jj], S.loop[ii], S.loop[jj], closed)
    keep = sep >= cutoff
    return ii[keep], jj[keep]


def _near_critical_pairs(S, arrs, closed, h, cutoff, kmax, max_chord, chunk=512):
    """Index pairs (i < j) of samples whose chord is within one cell of being doubly critical.

    A near-critical sample pair satisfies |f|, |g| <= (2 + kappa * d) * h,
    the most either residual can change across one sample cell.
    """
    P, T = S.points, S.tangents
    n = len(P)
    if max_chord is not None:
        pairs = cKDTree(P).query_pairs(max_chord, output_type="ndarray")
        if len(pairs) == 0:
            return np.zeros(0, dtype=int), np.zeros(0, dtype=int)
        return _filter_pairs(S, arrs, closed, h, cutoff, kmax, pairs[:, 0], pairs[:, 1])
    pp = np.einsum("ij,ij->i", P, P)
    tp = np.einsum("ij,ij->i", T, P)
    out_i, out_j = [], []
    for a in range(0, n, chunk):
        b = min(n, a + chunk)
        rows = np.arange(a, b)
        G = P[a:b] @ P.T
        dist = np.sqrt(np.maximum(pp[a:b, None] + pp[None, :] - 2 * G, 0.0))
        f = T[a:b] @ P.T - tp[a:b, None]  # T_i . (P_j - P_i)
        g = tp[None, :] - P[a:b] @ T.T  # T_j . (P_j - P_i)
        thr = (2.0 + kmax * dist) * h
        mask = (np.abs(f) <= thr) & (np.abs(g) <= thr)
        mask &= np.arange(n)[None, :] > rows[:, None]
        ii, jj = np.nonzero(mask)
        if len(ii) == 0:
            continue
        ii, jj = _filter_pairs(S, arrs, closed, h, cutoff, kmax, ii + a, jj)
        out_i.append(ii)
        out_j.append(jj)
    if not out_i:
        return np.zeros(0, dtype=int), np.zeros(0, dtype=int)
    return np.concatenate(out_i), np.concatenate(out_j)


def _refine(arrs, s, t, li, lj, iters, step_cap):
    """Damped Newton on (f, g) = (T(s).(c(t)-c(s)), T(t).(c(t)-c(s)))."""
    s = s.copy()
    t = t.copy()
    for _ in range(iters):
        P, Ts, Ks = arrs.evaluate(s, li)
        Q, Tt, Kt = arrs.evaluate(t, lj)
        D = Q - P
        f = np.einsum("ij,ij->i", Ts, D)
        g = np.einsum("ij,ij->i", Tt, D)
        tt = np.einsum("ij,ij->i", Ts, Tt)
        a11 = np.einsum("ij,ij->i", Ks, D) - 1.0
        a12 = tt
        a21 = -tt
        a22 = np.einsum("ij,ij->i", Kt, D) + 1.0
        # Levenberg-Marquardt normal equations; copes with the rank-one
        # Jacobians of families of parallel chords
        m11 = a11 * a11 + a21 * a21
        m12 = a11 * a12 + a21 * a22
        m22 = a12 * a12 + a22 * a22
        mu = 1e-12 * (m11 + m22) + 1e-300
        m11 = m11 + mu
        m22 = m22 + mu
        r1 = -(a11 * f + a21 * g)
        r2 = -(a12 * f + a22 * g)
        det = m11 * m22 - m12 * m12
        ds = (m22 * r1 - m12 * r2) / det
        dt = (m11 * r2 - m12 * r1) / det
        norm = np.hypot(ds, dt)
        scale = np.where(norm > step_cap, step_cap / np.maximum(norm, 1e-300), 1.0)
        s = s + scale * ds
        t = t + scale * dt
    P, Ts, _ = arrs.evaluate(s, li)
    Q, Tt, _ = arrs.evaluate(t, lj)
    D = Q - P
    f = np.einsum("ij,ij->i", Ts, D)
    g = np.einsum("ij,ij->i", Tt, D)
    dist = np.linalg.norm(D, axis=1)
    return arrs.wrap(s, li), arrs.wrap(t, lj), P, Q, dist, np.maximum(np.abs(f), np.abs(g))


def dcsd_estimate(
    c: PiecewiseCurve,
    density: float = DEFAULT_DENSITY,
    refine_iters: int = DEFAULT_REFINE,
    *,
    max_chord: float | None = None,
    strict: bool = False,
) -> ChordEstimate:
    """Shortest doubly-critical self-distance of a closed curve.

    Sample pairs closer than ``8 / density`` along the curve are ignored.
    With ``max_chord`` only chords up to that length are searched; if none
    is found there the search is repeated over all pairs. When refinement
    never meets the criticality tolerance the most nearly critical pair is
    returned with ``critical=False``, or ``NoCriticalChord`` is raised if
    ``strict``.
    """
    if not c.closed:
        raise CurveNotClosed("doubly-critical chords are defined here for closed curves")
    if density < 10:
        raise ValueError("density must be at least 10 samples per unit length")
    S = sample(c, density)
    arrs = CurveArrays(c)
    h = 1.0 / density
    cutoff = 8.0 / density
    rmin = infimal_radius_of_curvature(c) if any(p.radius < math.inf for p in c.pieces) else math.inf
    kmax = 0.0 if math.isinf(rmin) else 1.0 / rmin

    stages = [None]
    if max_chord is not None:
        stages = [max_chord, None]
    best_nc = None
    for bound in stages:
        reach = None if bound is None else bound + 2 * h
        ii, jj = _near_critical_pairs(S, arrs, c.closed, h, cutoff, kmax, reach)
        if len(ii) == 0:
            continue
        li, lj = S.loop[ii], S.loop[jj]
        s0, t0 = S.s[ii], S.s[jj]
        s, t, P, Q, dist, res = _refine(arrs, s0, t0, li, lj, refine_iters, h)
        moved = np.maximum(
            _separation(arrs, s, s0, li, li, c.closed), _separation(arrs, t, t0, lj, lj, c.closed)
        )
        sep = _separation(arrs, s, t, li, lj, c.closed)
        ok = (res <= CRITICAL_TOL * np.maximum(dist, h)) & (moved <= 3 * h) & (sep >= cutoff)
        rel = res / np.maximum(dist, h)
        k = int(np.argmin(rel))
        if best_nc is None or rel[k] < best_nc[0]:
            best_nc = (rel[k], s[k], t[k], P[k], Q[k], dist[k], len(ii))
        if np.any(ok):
            idx = np.nonzero(ok)[0]
            k = idx[np.argmin(dist[idx])]
            if bound is None or dist[k] <= bound:
                return ChordEstimate(
                    float(dist[k]),
                    (float(s[k]), float(t[k])),
                    (P[k].copy(), Q[k].copy()),
                    float(rel[k]),
                    True,
                    len(ii),
                    len(S),
                )
    if strict or best_nc is None:
        raise NoCriticalChord("no doubly-critical chord met the tolerance")
    rel, s, t, P, Q, dist, ncand = best_nc
    return ChordEstimate(float(dist), (float(s), float(t)), (P, Q), float(rel), False, ncand, len(S))


def thickness_report(
    c: PiecewiseCurve, density: float = DEFAULT_DENSITY, refine_iters: int = DEFAULT_REFINE
) -> ThicknessReport:
    rmin = infimal_radius_of_curvature(c)
    # chords longer than twice the curvature radius cannot set the thickness,
    # so search those first
    bound = None if math.isinf(rmin) else 2.0 * rmin * 1.05
    est = dcsd_estimate(c, density, refine_iters, max_chord=bound)
    diag = () if est.critical else (f"no chord met the criticality tolerance (residual {est.residual:.3g})",)
    return ThicknessReport(
        min_radius=rmin,
        dcsd=est.length,
        thickness=min(rmin, est.length / 2.0),
        witnesses=est.witness,
        witness_points=est.points,
        samples_used=est.samples,
        tolerance=CRITICAL_TOL,
        diagnostics=diag,
    )


def _circumradius(A, B, C):
    a = np.linalg.norm(B - C, axis=-1)
    b = np.linalg.norm(A - C, axis=-1)
    c = np.linalg.norm(A - B, axis=-1)
    cross = np.linalg.norm(np.cross(B - A, C - A), axis=-1)
    with np.errstate(divide="ignore", invalid="ignore"):
        R = a * b * c / (2.0 * cross)
    return np.where(cross > 0, R, np.inf)


def triple_circumradius_check(c: PiecewiseCurve, density: float = 20.0) -> float:
    """Smallest circumradius over triples of distinct sample points.

    Triples whose circumradius could beat the running minimum have all sides
    shorter than twice it, so neighbourhoods are pruned with a k-d tree.
    """
    if density < 10:
        raise ValueError("density must be at least 10 samples per unit length")
    P = sample(c, density).points
    n = len(P)
    if n < 3:
        return math.inf
    idx = np.arange(n)
    best = float(np.min(_circumradius(P[idx], P[(idx + 1) % n], P[(idx + 2) % n])))
    tree = cKDTree(P)
    for i in range(n):
        if math.isinf(best):
            nb = np.arange(i + 1, n)
        else:
            nb = np.array(tree.query_ball_point(P[i], 2.0 * best), dtype=int)
            nb = nb[nb > i]
        if len(nb) < 2:
            continue
        J, K = np.triu_indices(len(nb), 1)
        R = _circumradius(P[i], P[nb[J]], P[nb[K]])
        m = float(R.min())
        if m < best:
            best = m
    return best
