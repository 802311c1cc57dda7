"""Plain-text formats for presentations and curves.

Presentation file::

    arcpres alpha=5
    1 3 1/5
    ...

one arc per line as ``x y theta``; ``theta`` is radians, or ``p/q`` for a
fraction of a full turn. Curve file: one or more blocks, each a header
``curve closed=<0|1> pieces=<n>`` followed by ``seg`` / ``arc`` records.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .arcpres import ArcPresentation, ArcPresentationError, ArcTriple, LevelOutOfRange, validate
from .curve import CircularArc, LineSegment, PiecewiseCurve


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


_HEADER = re.compile(r"^arcpres\s+alpha\s*=\s*(\d+)\s*$")
_CURVE_HEADER = re.compile(r"^curve\s+closed\s*=\s*([01])\s+pieces\s*=\s*(\d+)\s*$")


def _content_lines(text: str):
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line


def _parse_theta(tok: str, line: int):
    if "/" in tok:
        try:
            return None, Fraction(tok)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad page fraction {tok!r}", line) from None
    try:
        val = float(tok)
    except ValueError:
        raise ParseError(f"bad page angle {tok!r}", line) from None
    if not math.isfinite(val):
        raise ParseError(f"page angle {tok!r} is not finite", line)
    return val, None


def parse_presentation(text: str) -> ArcPresentation:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty presentation file")
    n0, head = lines[0]
    m = _HEADER.match(head)
    if not m:
        raise ParseError("expected header 'arcpres alpha=<n>'", n0)
    alpha = int(m.group(1))
    body = lines[1:]
    if len(body) != alpha:
        raise ParseError(f"header says alpha={alpha} but {len(body)} arcs follow", n0)
    arcs, where = [], []
    for n, line in body:
        toks = line.split()
        if len(toks) != 3:
            raise ParseError("expected 'x y theta'", n)
        try:
            x, y = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError("levels must be integers", n) from None
        val, frac = _parse_theta(toks[2], n)
        arcs.append(ArcTriple.from_turns(x, y, frac) if frac is not None else ArcTriple(x, y, val))
        where.append(n)
    levels = sorted({lvl for a in arcs for lvl in (a.x, a.y)})
    if len(levels) == alpha and levels != list(range(1, alpha + 1)):
        bad = next(i for i, a in enumerate(arcs) if not (1 <= a.x <= alpha and 1 <= a.y <= alpha))
        err = LevelOutOfRange(
            f"line {where[bad]}: levels {levels} are not 1..{alpha}; renumber them in order to 1..{alpha}",
            bad,
        )
        err.line = where[bad]
        raise err
    try:
        return validate(arcs)
    except ArcPresentationError as e:
        if e.index is not None:
            e.line = where[e.index]
            e.args = (f"line {e.line}: {e.args[0]}",)
        raise


def _fmt_turns(f: Fraction) -> str:
    # always with a slash, so that zero stays an exact fraction
    return f"{f.numerator}/{f.denominator}"


def emit_presentation(A: ArcPresentation) -> str:
    out = [f"arcpres alpha={A.alpha}"]
    for a in A.arcs:
        theta = _fmt_turns(a.turns) if a.turns is not None else repr(a.theta)
        out.append(f"{a.x} {a.y} {theta}")
    return "\n".join(out) + "\n"


def _f(x) -> str:
    return repr(float(x))


def emit_curve(c: PiecewiseCurve) -> str:
    out = []
    for lp in c.loops():
        out.append(f"curve closed={int(c.closed)} pieces={len(lp)}")
        for p in lp:
            if isinstance(p, LineSegment):
                out.append("seg " + " ".join(_f(v) for v in (*p.start, *p.end)))
            else:
                vals = (*p.center, *p.plane_normal, *p.start, p.sweep_angle)
                out.append("arc " + " ".join(_f(v) for v in vals))
    return "\n".join(out) + "\n"


def parse_curve(text: str) -> PiecewiseCurve:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty curve file")
    loops = []
    closed = None
    i = 0
    while i < len(lines):
        n, head = lines[i]
        m = _CURVE_HEADER.match(head)
        if not m:
            raise ParseError("expected header 'curve closed=<0|1> pieces=<n>'", n)
        cl = m.group(1) == "1"
        if closed is not None and cl != closed:
            raise ParseError("all curve blocks must agree on closed=", n)
        closed = cl
        count = int(m.group(2))
        if count < 1:
            raise ParseError("a curve block needs at least one piece", n)
        if i + count > len(lines) - 1:
            raise ParseError(f"expected {count} pieces after header", n)
        pieces = []
        for n2, rec in lines[i + 1 : i + 1 + count]:
            toks = rec.split()
            try:
                vals = [float(v) for v in toks[1:]]
            except ValueError:
                raise ParseError("non-numeric field in piece record", n2) from None
            try:
                if toks[0] == "seg" and len(vals) == 6:
                    pieces.append(LineSegment(vals[:3], vals[3:]))
                elif toks[0] == "arc" and len(vals) == 10:
                    pieces.append(CircularArc(vals[:3], vals[3:6], vals[6:9], vals[9]))
                else:
                    raise ParseError(f"unrecognised piece record {toks[0]!r}", n2)
            except ValueError as e:
                if isinstance(e, ParseError):
                    raise
                raise ParseError(str(e), n2) from None
        loops.append(pieces)
        i += 1 + count
    return PiecewiseCurve.from_loops(loops, closed=bool(closed))
