"""Bundled example data."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .table import DecisionTable, ParseOptions, parse_table


def table1_path() -> Path:
    """Filesystem path of the bundled 12-object example table."""
    return Path(resources.files(__package__) / "data" / "table1.csv")


def load_table1() -> DecisionTable:
    """A 12-object, 4-attribute table with 15 unknown cells.

    Decisions split the objects into classes P and Q.  Small enough to work
    through by hand, yet every relation in :mod:`roughtable.relations`
    behaves differently on it, so it anchors the documentation and the
    regression tests.
    """
    text = table1_path().read_text(encoding="utf-8")
    return parse_table(text, ParseOptions(id_column=True))
