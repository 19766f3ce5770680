"""Shared table builders, generators, and oracles for the tests."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from roughtable import MISSING, DecisionTable


def build_table(rows: dict[str, tuple[str, ...]], attrs: tuple[str, ...] | None = None) -> DecisionTable:
    """Build a table from rows of condition tokens plus a final decision.

    "*" tokens become MISSING.  Attribute names default to c1, c2, ...
    """
    width = len(next(iter(rows.values()))) - 1
    if attrs is None:
        attrs = tuple(f"c{i + 1}" for i in range(width))
    grid: dict[tuple[str, str], object] = {}
    decisions: dict[str, str] = {}
    for obj, cells in rows.items():
        *cond, decision = cells
        decisions[obj] = decision
        for attr, token in zip(attrs, cond):
            grid[(obj, attr)] = MISSING if token == "*" else token
    return DecisionTable(tuple(rows), attrs, "d", grid, decisions)


def random_table(
    rng: random.Random,
    max_objects: int = 10,
    max_attrs: int = 4,
    symbols: str = "0123",
    missing_share: float = 0.0,
    decisions: str = "PQ",
    min_decisions: int = 1,
) -> DecisionTable:
    """A random table; at most ``missing_share`` of all cells are unknown."""
    n = rng.randint(1, max_objects)
    m = rng.randint(1, max_attrs)
    rows = [[rng.choice(symbols) for _ in range(m)] for _ in range(n)]
    budget = int(missing_share * n * m)
    if budget:
        cells = [(i, j) for i in range(n) for j in range(m)]
        for i, j in rng.sample(cells, rng.randint(0, budget)):
            rows[i][j] = "*"
    labels = [rng.choice(decisions) for _ in range(n)]
    if min_decisions > 1 and n >= min_decisions:
        while len(set(labels)) < min_decisions:
            labels[rng.randrange(n)] = rng.choice(decisions)
    return build_table(
        {f"o{i + 1}": (*rows[i], labels[i]) for i in range(n)}
    )


@st.composite
def tables(
    draw,
    max_objects: int = 7,
    max_attrs: int = 4,
    symbols: tuple[str, ...] = ("0", "1", "2"),
    allow_missing: bool = True,
    decisions: tuple[str, ...] = ("P", "Q", "R"),
) -> DecisionTable:
    """Hypothesis strategy for small decision tables."""
    n = draw(st.integers(1, max_objects))
    m = draw(st.integers(1, max_attrs))
    tokens = symbols + (("*",) if allow_missing else ())
    cell = st.sampled_from(tokens)
    rows = {}
    for i in range(n):
        cells = draw(st.tuples(*[cell] * m))
        rows[f"o{i + 1}"] = (*cells, draw(st.sampled_from(decisions)))
    return build_table(rows)


def classical_approx(
    table: DecisionTable, target: set[str]
) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Equivalence-class rough approximation computed straight from rows.

    Independent of the relations module; rows are compared as raw tuples.
    """
    groups: dict[tuple, list[str]] = {}
    for obj in table.objects:
        groups.setdefault(table.row(obj), []).append(obj)
    lower, upper = [], []
    for obj in table.objects:
        block = groups[table.row(obj)]
        if all(member in target for member in block):
            lower.append(obj)
        if any(member in target for member in block):
            upper.append(obj)
    return tuple(lower), tuple(upper)


# Hand-checked neighborhoods of the bundled 12-object table.
TABLE1_L = {
    "a1": {"a1", "a11", "a12"},
    "a2": {"a2", "a3"},
    "a3": {"a2", "a3"},
    "a4": {"a4", "a5", "a11", "a12"},
    "a5": {"a4", "a5", "a11", "a12"},
    "a6": {"a6"},
    "a7": {"a7", "a9", "a12"},
    "a8": {"a8"},
    "a9": {"a7", "a9", "a11", "a12"},
    "a10": {"a10"},
    "a11": {"a1", "a4", "a5", "a9", "a11", "a12"},
    "a12": {"a1", "a4", "a5", "a7", "a9", "a11", "a12"},
}

TABLE1_M = {
    "a1": {"a1", "a4", "a5", "a9", "a11", "a12"},
    "a2": {"a2", "a3"},
    "a3": {"a2", "a3"},
    "a4": {"a1", "a4", "a5", "a9", "a11", "a12"},
    "a5": {"a1", "a4", "a5", "a9", "a11", "a12"},
    "a6": {"a6"},
    "a7": {"a1", "a7", "a9", "a12"},
    "a8": {"a8"},
    "a9": {"a1", "a4", "a5", "a7", "a9", "a11", "a12"},
    "a10": {"a10"},
    "a11": {"a1", "a4", "a5", "a9", "a11", "a12"},
    "a12": {"a1", "a4", "a5", "a7", "a9", "a11", "a12"},
}

TABLE1_CLASS_P = ("a1", "a2", "a4", "a7", "a10", "a12")
TABLE1_CLASS_Q = ("a3", "a5", "a6", "a8", "a9", "a11")

TABLE1_LOWER_P = ("a10",)
TABLE1_LOWER_Q = ("a6", "a8")
TABLE1_UPPER_P = ("a1", "a2", "a3", "a4", "a5", "a7", "a9", "a10", "a11", "a12")
TABLE1_UPPER_Q = ("a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "a11", "a12")
TABLE1_POSITIVE_REGION = ("a6", "a8", "a10")

# Objects whose neighborhood grows when moving from L to the positive
# transitive relation at k=1/4.
TABLE1_GROWTH = ("a1", "a4", "a5", "a7", "a9")

# Pairs the decision filter admits on the bundled table (limited
# tolerance) that no attribute can discern.
TABLE1_INSEPARABLE = (
    ("a4", "a10"),
    ("a5", "a10"),
    ("a7", "a8"),
    ("a8", "a10"),
    ("a10", "a11"),
)
