"""Bundled reference grids.

Every grid printed in the source figures is transcribed to JSON once and
validated by the library's verifiers in the test suite, so transcription
typos and code bugs stay distinguishable.  Names describe the signal set,
fade state, and construction stage, e.g. ``psk8_k2_l4_rect`` is the
interchanged Latin rectangle stage for 8-PSK at the (k=2, l=4)
representative.
"""

from __future__ import annotations

import json
from importlib import resources

from ..gridio import grid_from_obj
from ..latin import Grid

__all__ = ["available", "load_grid", "load_points"]


def _read(name: str) -> str:
    return resources.files(__package__).joinpath(f"{name}.json").read_text()


def available() -> list[str]:
    """Sorted names of all bundled fixture files (without extension)."""
    out = []
    for entry in resources.files(__package__).iterdir():
        if entry.name.endswith(".json"):
            out.append(entry.name[: -len(".json")])
    return sorted(out)


def load_grid(name: str) -> Grid:
    """Load a bundled grid by fixture name."""
    return grid_from_obj(json.loads(_read(name)))


def load_points(name: str) -> list[complex]:
    """Load a bundled point list (JSON records with "re"/"im") by name."""
    return [complex(p["re"], p["im"]) for p in json.loads(_read(name))]
