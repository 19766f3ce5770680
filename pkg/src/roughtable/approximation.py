"""Lower and upper approximations of object sets under a chosen relation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .relations import RelationConfig, neighborhood_map
from .table import DecisionTable


@dataclass(frozen=True)
class ApproximationResult:
    """Approximations of a target set, all in table order.

    ``accuracy`` is |lower| / |upper|, defined as 1 when both are empty.
    """

    target: tuple[str, ...]
    lower: tuple[str, ...]
    upper: tuple[str, ...]
    boundary: tuple[str, ...]
    accuracy: Fraction


def _check_target(table: DecisionTable, target: Iterable[str]) -> frozenset[str]:
    members = frozenset(target)
    unknown = members - set(table.objects)
    if unknown:
        raise ValueError(f"target objects not in the table: {sorted(unknown)}")
    return members


def decision_classes(table: DecisionTable) -> dict[str, tuple[str, ...]]:
    """Objects grouped by decision value, keyed in order of first appearance."""
    classes: dict[str, list[str]] = {}
    for obj in table.objects:
        classes.setdefault(table.decision(obj), []).append(obj)
    return {d: tuple(members) for d, members in classes.items()}


def lower_approx(
    table: DecisionTable,
    target: Iterable[str],
    attrs: Iterable[str],
    config: RelationConfig,
) -> tuple[str, ...]:
    """Objects whose whole neighborhood lies inside the target."""
    members = _check_target(table, target)
    nb = neighborhood_map(table, attrs, config)
    return tuple(x for x in table.objects if members.issuperset(nb[x]))


def upper_approx(
    table: DecisionTable,
    target: Iterable[str],
    attrs: Iterable[str],
    config: RelationConfig,
) -> tuple[str, ...]:
    """Objects whose neighborhood meets the target."""
    members = _check_target(table, target)
    nb = neighborhood_map(table, attrs, config)
    return tuple(x for x in table.objects if not members.isdisjoint(nb[x]))


def approximate(
    table: DecisionTable,
    target: Iterable[str],
    attrs: Iterable[str],
    config: RelationConfig,
) -> ApproximationResult:
    """Lower/upper approximations, boundary, and accuracy for one target set."""
    members = _check_target(table, target)
    nb = neighborhood_map(table, attrs, config)
    lower = tuple(x for x in table.objects if members.issuperset(nb[x]))
    upper = tuple(x for x in table.objects if not members.isdisjoint(nb[x]))
    in_lower = set(lower)
    boundary = tuple(x for x in upper if x not in in_lower)
    accuracy = Fraction(len(lower), len(upper)) if upper else Fraction(1)
    return ApproximationResult(
        target=tuple(x for x in table.objects if x in members),
        lower=lower,
        upper=upper,
        boundary=boundary,
        accuracy=accuracy,
    )


def positive_region(
    table: DecisionTable, attrs: Iterable[str], config: RelationConfig
) -> tuple[str, ...]:
    """Union of the lower approximations of all decision classes."""
    nb = neighborhood_map(table, attrs, config)
    classes = [frozenset(members) for members in decision_classes(table).values()]
    return tuple(
        x for x in table.objects if any(cls.issuperset(nb[x]) for cls in classes)
    )
