"""Bundled instances: the OSG files under ``data/`` plus T1, T2, T3."""

from __future__ import annotations

from importlib import resources

from .core import OrderedSemigroup
from .osg import loads
from .transform import build_full_transformation

HANDMADE = ("z2", "brandt", "chain3", "null3")
LAW_CORPUS = ("example26", "T1", "T2", "T3") + HANDMADE


def bundled_text(name: str) -> str:
    return resources.files("ordsemi").joinpath("data", f"{name}.osg").read_text(encoding="utf-8")


def load(name: str) -> OrderedSemigroup:
    """A bundled OSG file by stem, or ``T<n>`` for the ordered full transformation semigroup."""
    if name[:1] == "T" and name[1:].isdigit():
        return build_full_transformation(int(name[1:])).ordered()
    return loads(bundled_text(name))


def law_corpus() -> list[OrderedSemigroup]:
    return [load(name) for name in LAW_CORPUS]
