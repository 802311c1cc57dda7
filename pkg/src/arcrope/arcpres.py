"""Arc-presentations: validation, total skip, link components, extremal examples.

A presentation is a list of arcs ``(x, y, theta)`` joining levels ``x`` and
``y`` of the binding axis on the page at angle ``theta``. Levels run over
``1..alpha`` and each appears as an endpoint exactly twice.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

TWO_PI = 2 * math.pi
ORACLE_MAX_ALPHA = 9


class ArcPresentationError(ValueError):
    """Base class for invalid presentations; ``index`` is the offending arc."""

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


class DuplicatePage(ArcPresentationError):
    pass


class BadLevelMultiplicity(ArcPresentationError):
    pass


class SelfLoop(ArcPresentationError):
    pass


class LevelOutOfRange(ArcPresentationError):
    pass


class AlphaTooLarge(ValueError):
    pass


def normalize_angle(theta: float) -> float:
    t = math.fmod(float(theta), TWO_PI)
    if t < 0:
        t += TWO_PI
    return 0.0 if t >= TWO_PI else t


@dataclass(frozen=True)
class ArcTriple:
    """One arc; ``turns`` keeps the page as an exact fraction of a full turn when known."""

    x: int
    y: int
    theta: float
    turns: Optional[Fraction] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "theta", normalize_angle(self.theta))

    @classmethod
    def from_turns(cls, x: int, y: int, turns) -> "ArcTriple":
        f = Fraction(turns) % 1
        return cls(int(x), int(y), normalize_angle(TWO_PI * float(f)), f)

    def reversed(self) -> "ArcTriple":
        return ArcTriple(self.y, self.x, self.theta, self.turns)

    @property
    def span(self) -> int:
        return abs(self.x - self.y)


@dataclass(frozen=True)
class ArcPresentation:
    arcs: tuple

    @property
    def alpha(self) -> int:
        return len(self.arcs)

    def __iter__(self):
        return iter(self.arcs)

    def __len__(self):
        return len(self.arcs)

    def mirror(self) -> "ArcPresentation":
        """Negate every page angle; reflects the embedding through a plane containing the axis."""
        out = []
        for a in self.arcs:
            if a.turns is not None:
                out.append(ArcTriple.from_turns(a.x, a.y, -a.turns))
            else:
                out.append(ArcTriple(a.x, a.y, normalize_angle(-a.theta)))
        return validate(out)

    def page_order(self) -> list:
        """Arc indices sorted by increasing page angle."""
        return sorted(range(self.alpha), key=lambda i: self.arcs[i].theta)


@dataclass(frozen=True)
class LinkStructure:
    components: int
    cycles: tuple  # each cycle: tuple of (arc index, forward?) in traversal order


def validate(raw: Iterable) -> ArcPresentation:
    arcs = []
    for a in raw:
        if isinstance(a, ArcTriple):
            arcs.append(ArcTriple(int(a.x), int(a.y), normalize_angle(a.theta), a.turns))
        else:
            x, y, theta = a
            arcs.append(ArcTriple(int(x), int(y), normalize_angle(theta)))
    if not arcs:
        raise ArcPresentationError("presentation is empty")
    alpha = len(arcs)
    seen = {}
    for i, a in enumerate(arcs):
        if a.x == a.y:
            raise SelfLoop(f"arc {i} joins level {a.x} to itself", i)
        for lvl in (a.x, a.y):
            if not 1 <= lvl <= alpha:
                raise LevelOutOfRange(f"arc {i}: level {lvl} outside 1..{alpha}", i)
        for j, b in seen.items():
            if math.isclose(a.theta, b.theta, rel_tol=0.0, abs_tol=1e-12) or (
                a.turns is not None and a.turns == b.turns
            ):
                raise DuplicatePage(f"arcs {j} and {i} share page angle {a.theta!r}", i)
        seen[i] = a
    counts = Counter(lvl for a in arcs for lvl in (a.x, a.y))
    for lvl in range(1, alpha + 1):
        if counts[lvl] != 2:
            first = next((i for i, a in enumerate(arcs) if lvl in (a.x, a.y)), None)
            raise BadLevelMultiplicity(f"level {lvl} is used {counts[lvl]} times, expected 2", first)
    return ArcPresentation(tuple(arcs))


def skip(A: ArcPresentation) -> int:
    return sum(a.span for a in A.arcs)


def level_arcs(A: ArcPresentation) -> dict:
    """Map each level to the two arc indices with an endpoint there."""
    out: dict = {}
    for i, a in enumerate(A.arcs):
        out.setdefault(a.x, []).append(i)
        out.setdefault(a.y, []).append(i)
    return out


def link_structure(A: ArcPresentation) -> LinkStructure:
    at = level_arcs(A)
    unused = set(range(A.alpha))
    cycles = []
    while unused:
        start = min(unused)
        cycle = []
        i, forward = start, True
        while True:
            unused.discard(i)
            cycle.append((i, forward))
            a = A.arcs[i]
            lvl = a.y if forward else a.x
            pair = at[lvl]
            j = pair[1] if pair[0] == i else pair[0]
            if j == start:
                break
            forward = A.arcs[j].x == lvl
            i = j
        cycles.append(tuple(cycle))
    return LinkStructure(len(cycles), tuple(cycles))


def from_levels(levels: Sequence[int], pages: Optional[Sequence[int]] = None) -> ArcPresentation:
    """Single-component presentation visiting ``levels`` cyclically.

    Arc k joins ``levels[k]`` to ``levels[k+1]`` on page ``2*pi*pages[k]/alpha``.
    """
    n = len(levels)
    pages = list(range(n)) if pages is None else list(pages)
    return validate(
        ArcTriple.from_turns(levels[k], levels[(k + 1) % n], Fraction(pages[k], n)) for k in range(n)
    )


def extremal_levels(alpha: int) -> list:
    """Zig-zag cycle alternating between the upper and lower halves of the levels."""
    k = alpha // 2
    high = list(range(alpha, k, -1))
    low = list(range(k, 0, -1))
    out = []
    for i, h in enumerate(high):
        out.append(h)
        if i < len(low):
            out.append(low[i])
    return out


def extremal(alpha: int) -> ArcPresentation:
    if alpha < 2:
        raise ValueError("alpha must be at least 2")
    return from_levels(extremal_levels(alpha))


def random_presentation(alpha: int, rng: Optional[random.Random] = None, shuffle_pages: bool = True) -> ArcPresentation:
    """Uniform random cyclic ordering of levels; pages are a random arrangement of 2*pi*k/alpha."""
    rng = rng or random.Random()
    levels = list(range(1, alpha + 1))
    rng.shuffle(levels)
    pages = list(range(alpha))
    if shuffle_pages:
        rng.shuffle(pages)
    return from_levels(levels, pages)


def max_skip_oracle(alpha: int) -> int:
    """Largest total skip over all single-cycle presentations, by exhaustive enumeration.

    Cycles are enumerated with level 1 fixed in first position, so every cyclic
    ordering appears (twice, once per direction). Multi-component presentations
    are not enumerated.
    """
    if alpha < 2:
        raise ValueError("alpha must be at least 2")
    if alpha > ORACLE_MAX_ALPHA:
        raise AlphaTooLarge(f"exhaustive search capped at alpha={ORACLE_MAX_ALPHA}")
    rest = np.array(list(itertools.permutations(range(2, alpha + 1))), dtype=np.int64)
    cyc = np.hstack([np.ones((len(rest), 1), dtype=np.int64), rest])
    total = np.abs(np.diff(cyc, axis=1)).sum(axis=1) + np.abs(cyc[:, -1] - cyc[:, 0])
    return int(total.max())
