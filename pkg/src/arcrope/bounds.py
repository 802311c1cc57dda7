"""Closed-form ropelength bounds in terms of arc index and crossing number.

The crossing-number bounds assume every non-split link with crossing number
``c`` has an arc-presentation with at most ``c + 2`` arcs (Bae and Park).
That value is taken as given; nothing here derives it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .builder import prop1_bound

# crossing-number bound coefficients rounded up to three significant figures
QUAD = 1.64
LINEAR = 7.69
CONST = 6.74


class EmptyComposite(ValueError):
    pass


def exact_coefficients() -> tuple:
    """Quadratic, linear and constant coefficients before rounding up."""
    return (2 / math.pi + 1, 8 / math.pi + 2 + math.pi, 8 / math.pi + 4 * math.pi / 3)


def decimal_coefficients() -> tuple:
    return (QUAD, LINEAR, CONST)


def skip_bound(alpha: int) -> int:
    if alpha < 2:
        raise ValueError("alpha must be at least 2")
    return (alpha * alpha - 1) // 2 if alpha % 2 else alpha * alpha // 2


def bae_park_alpha(c: int) -> int:
    """Arc count available for a non-split link of crossing number ``c`` (hypothesis, not derived)."""
    return c + 2


def thm1_bound(c: int, exact: bool = False) -> float:
    if c < 2:
        raise ValueError("crossing number must be at least 2")
    a, b, k = exact_coefficients() if exact else decimal_coefficients()
    return a * c * c + b * c + k


def thm2_bound(components: Sequence[int]) -> float:
    """Composite bound: the per-prime-factor crossing-number bounds added up."""
    if len(components) == 0:
        raise EmptyComposite("a composite needs at least one prime component")
    return math.fsum(thm1_bound(c, exact=False) for c in components)


def taylor_step_check(alpha: int) -> bool:
    """Whether replacing cot(pi/alpha) by alpha/pi - pi/(3 alpha) still bounds the prism length."""
    if alpha < 3:
        raise ValueError("alpha must be at least 3")
    lhs = 2 * alpha / math.tan(math.pi / alpha) + (math.pi - 2) * alpha + alpha**2
    rhs = (2 / math.pi + 1) * alpha**2 + (math.pi - 2) * alpha - 2 * math.pi / 3
    return lhs <= rhs


@dataclass(frozen=True)
class BoundReport:
    crossing_number: object  # int, or list of ints for composites
    alpha_used: object
    skip_bound: object
    prop1_value: float
    thm1_value: float
    thm1_decimal: float
    thm2_value: Optional[float] = None
    notes: tuple = field(default=())

    def as_pairs(self) -> list:
        out = [
            ("crossing_number", self.crossing_number),
            ("alpha_used", self.alpha_used),
            ("skip_bound", self.skip_bound),
            ("prop1_value", self.prop1_value),
            ("thm1_value", self.thm1_value),
            ("thm1_decimal", self.thm1_decimal),
        ]
        if self.thm2_value is not None:
            out.append(("thm2_value", self.thm2_value))
        return out

    def format_block(self) -> str:
        def fmt(v):
            if isinstance(v, float):
                return f"{v:.10g}"
            if isinstance(v, (list, tuple)):
                return ",".join(str(x) for x in v)
            return str(v)

        lines = [f"{k}={fmt(v)}" for k, v in self.as_pairs()]
        lines += [f"# {n}" for n in self.notes]
        return "\n".join(lines)


_BAE_PARK_NOTE = "alpha_used = c + 2 from the Bae-Park arc-index theorem (assumed)"


def bound_report(c: int) -> BoundReport:
    alpha = bae_park_alpha(c)
    sb = skip_bound(alpha)
    return BoundReport(
        crossing_number=c,
        alpha_used=alpha,
        skip_bound=sb,
        prop1_value=prop1_bound(alpha, sb),
        thm1_value=thm1_bound(c, exact=True),
        thm1_decimal=thm1_bound(c, exact=False),
        notes=(_BAE_PARK_NOTE,),
    )


def composite_report(components: Sequence[int]) -> BoundReport:
    if len(components) == 0:
        raise EmptyComposite("a composite needs at least one prime component")
    alphas = [bae_park_alpha(c) for c in components]
    sbs = [skip_bound(a) for a in alphas]
    return BoundReport(
        crossing_number=list(components),
        alpha_used=alphas,
        skip_bound=sbs,
        prop1_value=math.fsum(prop1_bound(a, s) for a, s in zip(alphas, sbs)),
        thm1_value=math.fsum(thm1_bound(c, exact=True) for c in components),
        thm1_decimal=math.fsum(thm1_bound(c, exact=False) for c in components),
        thm2_value=thm2_bound(components),
        notes=(_BAE_PARK_NOTE,),
    )
