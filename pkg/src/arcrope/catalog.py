"""Golden presentations shipped with the package."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .arcpres import ArcPresentation
from .formats import parse_presentation


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    crossing_number: int
    filename: Optional[str]  # None when only the bound is available
    note: str = ""

    @property
    def bound_only(self) -> bool:
        return self.filename is None


ENTRIES = {
    "3_1": CatalogEntry("3_1", 3, "trefoil.arcs"),
    "3_1m": CatalogEntry("3_1m", 3, "trefoil_mirror.arcs", "mirror image of 3_1"),
    "7_1": CatalogEntry("7_1", 7, None, "bound-only: no arc-presentation shipped"),
}


def entry(name: str) -> CatalogEntry:
    try:
        return ENTRIES[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(ENTRIES)}") from None


def text(name: str) -> str:
    e = entry(name)
    if e.bound_only:
        raise LookupError(f"{name} is bound-only; no presentation file is shipped")
    return resources.files(__package__).joinpath("catalog", e.filename).read_text()


def load(name: str) -> ArcPresentation:
    return parse_presentation(text(name))
