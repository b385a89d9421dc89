"""Bundled example polyominoes, one .grid file each."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .polyomino import Polyomino, parse


def names() -> tuple[str, ...]:
    """Fixture names, sorted."""
    root = resources.files(__package__) / "fixtures"
    return tuple(sorted(p.name[: -len(".grid")] for p in root.iterdir() if p.name.endswith(".grid")))


def fixture_path(name: str) -> Path:
    path = Path(str(resources.files(__package__) / "fixtures" / f"{name}.grid"))
    if not path.exists():
        raise KeyError(f"no fixture named {name!r}")
    return path


def load(name: str) -> Polyomino:
    return parse(fixture_path(name).read_text())
