"""Attribute reduction through an extended discernibility matrix.

The matrix is built only for object pairs the decision forces us to tell
apart: pairs where exactly one side sits in the positive region, or where
both do but their decisions differ.  Unknown cells never discern, so a
stored pair can come out with an empty entry; such a pair is inseparable
and reduct construction refuses to continue.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .approximation import positive_region
from .relations import RelationConfig, RelationKind
from .table import DecisionTable, project, values_agree, is_missing


class InseparablePairError(ValueError):
    """Two objects must be discerned but no attribute can do it."""

    def __init__(self, pair: tuple[str, str]):
        self.pair = pair
        super().__init__(
            f"objects {pair[0]!r} and {pair[1]!r} need different treatment "
            "but no condition attribute discerns them"
        )


@dataclass(frozen=True)
class DiscernibilityMatrix:
    """Discerning attribute sets for the pairs that must be told apart.

    Keys pair objects in table order (first component earlier).  Entries may
    be empty; emptiness marks an inseparable pair.  ``attrs`` records the
    condition attributes of the originating table, in table order.
    """

    objects: tuple[str, ...]
    attrs: tuple[str, ...]
    entries: dict[tuple[str, str], frozenset[str]]

    def get(self, x: str, y: str) -> frozenset[str] | None:
        """Stored entry for the unordered pair, or None if filtered out."""
        if (x, y) in self.entries:
            return self.entries[(x, y)]
        return self.entries.get((y, x))


@dataclass(frozen=True)
class ReductSet:
    """All minimal attribute subsets preserving the positive region.

    ``reducts`` are sorted lexicographically by attribute position;
    ``core`` is their intersection.
    """

    reducts: tuple[frozenset[str], ...]
    core: frozenset[str]


def discernibility_entry(table: DecisionTable, x: str, y: str) -> frozenset[str]:
    """Attributes where ``x`` and ``y`` hold different known values.

    An unknown cell discerns nothing, whatever the other side holds.
    """
    if x == y:
        raise ValueError("a discernibility entry needs two distinct objects")
    return frozenset(
        a
        for a in table.condition_attrs
        if not is_missing(table.value(x, a))
        and not is_missing(table.value(y, a))
        and not values_agree(table.value(x, a), table.value(y, a))
    )


def _needs_discerning(
    table: DecisionTable, pos: frozenset[str], x: str, y: str
) -> bool:
    in_x, in_y = x in pos, y in pos
    if in_x != in_y:
        return True
    return in_x and table.decision(x) != table.decision(y)


def pair_filter(
    table: DecisionTable,
    x: str,
    y: str,
    attrs: Iterable[str],
    config: RelationConfig,
) -> bool:
    """Whether the decision requires ``x`` and ``y`` to be discerned."""
    table.index(x), table.index(y)
    pos = frozenset(positive_region(table, attrs, config))
    return _needs_discerning(table, pos, x, y)


def discernibility_matrix(
    table: DecisionTable, attrs: Iterable[str], config: RelationConfig
) -> DiscernibilityMatrix:
    """Build the matrix over all pairs passing the decision filter.

    ``attrs`` and ``config`` fix the positive region used by the filter; the
    entries themselves always range over all condition attributes.
    """
    pos = frozenset(positive_region(table, attrs, config))
    entries: dict[tuple[str, str], frozenset[str]] = {}
    for x, y in combinations(table.objects, 2):
        if _needs_discerning(table, pos, x, y):
            entries[(x, y)] = discernibility_entry(table, x, y)
    return DiscernibilityMatrix(table.objects, table.condition_attrs, entries)


def discernibility_function(matrix: DiscernibilityMatrix) -> tuple[frozenset[str], ...]:
    """The matrix as a reduced conjunction of attribute alternatives.

    Duplicate entries collapse and absorbed clauses (supersets of another
    clause) drop out.  Raises :class:`InseparablePairError` on an empty
    entry, since no attribute choice can satisfy it.
    """
    for pair, entry in matrix.entries.items():
        if not entry:
            raise InseparablePairError(pair)
    unique = set(matrix.entries.values())
    kept = [c for c in unique if not any(other < c for other in unique)]
    order = {a: i for i, a in enumerate(matrix.attrs)}
    kept.sort(key=lambda c: (len(c), tuple(sorted(order[a] for a in c))))
    return tuple(kept)


def _minimal_hitting_sets(
    clauses: Sequence[frozenset[str]], order: Sequence[str]
) -> list[frozenset[str]]:
    """All minimal sets meeting every clause, by depth-first branching."""
    if not clauses:
        return [frozenset()]
    pos = {a: i for i, a in enumerate(order)}
    work = sorted(set(clauses), key=lambda c: (len(c), tuple(sorted(pos[a] for a in c))))
    found: list[frozenset[str]] = []
    seen: set[frozenset[str]] = set()

    def search(chosen: frozenset[str]) -> None:
        if chosen in seen:
            return
        seen.add(chosen)
        unhit = next((c for c in work if not c & chosen), None)
        if unhit is None:
            found.append(chosen)
            return
        # growing past an already complete hitting set cannot stay minimal
        if any(f <= chosen for f in found):
            return
        for a in sorted(unhit, key=pos.__getitem__):
            search(chosen | {a})

    search(frozenset())
    return [s for s in found if not any(o < s for o in found)]


def _sorted_reduct_set(
    reducts: Iterable[frozenset[str]], order: Sequence[str]
) -> ReductSet:
    pos = {a: i for i, a in enumerate(order)}
    unique = sorted(set(reducts), key=lambda r: tuple(sorted(pos[a] for a in r)))
    core = frozenset(order).intersection(*unique) if unique else frozenset()
    return ReductSet(tuple(unique), core)


def reducts_from_function(
    clauses: Sequence[frozenset[str]], attrs: Sequence[str]
) -> ReductSet:
    """Minimal hitting sets of a discernibility function.

    ``attrs`` fixes the attribute order used for sorting.  With no clauses
    at all, the empty set is the single reduct.
    """
    universe = set(attrs)
    for clause in clauses:
        if not clause:
            raise ValueError("an empty clause cannot be satisfied")
        if not clause <= universe:
            raise KeyError(f"clause {sorted(clause)} mentions unknown attributes")
    return _sorted_reduct_set(_minimal_hitting_sets(clauses, attrs), attrs)


def reducts_bruteforce(
    table: DecisionTable, attrs: Iterable[str], config: RelationConfig
) -> ReductSet:
    """Reducts by scanning attribute subsets in increasing size.

    A subset qualifies when restricting the table to it leaves the positive
    region unchanged; supersets of an accepted subset are skipped, which is
    exactly minimality.  Intended as an independent check on small tables.
    """
    from .relations import _attr_tuple

    universe = _attr_tuple(table, attrs)
    if len(universe) > 20:
        raise ValueError(f"brute force capped at 20 attributes, got {len(universe)}")
    target = frozenset(positive_region(table, universe, config))
    degree_based = config.kind in (
        RelationKind.K_LIMITED_TOLERANCE,
        RelationKind.POSITIVE_TRANSITIVE,
    )
    found: list[frozenset[str]] = []
    sizes = range(0 if not degree_based else 1, len(universe) + 1)
    for size in sizes:
        for combo in combinations(universe, size):
            candidate = frozenset(combo)
            if any(f <= candidate for f in found):
                continue
            if size == 0:
                preserved = frozenset(positive_region(table, (), config)) == target
            else:
                restricted = project(table, candidate)
                preserved = (
                    frozenset(positive_region(restricted, candidate, config)) == target
                )
            if preserved:
                found.append(candidate)
    return _sorted_reduct_set(found, universe)
