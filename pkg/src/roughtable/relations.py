"""Binary relations between objects of an incomplete decision table.

Six relations are provided, all evaluated attribute-wise over a chosen
subset ``B`` of condition attributes:

* ``equivalence``: classical indiscernibility; cells must be literally
  equal, so it only behaves sensibly on complete tables.
* ``tolerance``: a missing value matches anything (reflexive, symmetric).
* ``similarity``: every known value of ``x`` must be matched by ``y``
  exactly; ``x``'s missing cells are unconstrained (reflexive, transitive,
  not symmetric).
* ``limited_tolerance``: tolerance restricted to pairs that agree on at
  least one attribute known to both, with an escape hatch for pairs where
  both rows are entirely unknown.
* ``k_limited_tolerance``: limited tolerance with a minimum agreement
  degree ``k``.
* ``positive_transitive``: a one-step transitive closure of
  ``k_limited_tolerance`` through ``similarity``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable

from .table import DecisionTable, is_missing, values_agree


class RelationKind(Enum):
    """Names of the supported relations.  Values double as CLI tokens."""

    EQUIVALENCE = "equivalence"
    TOLERANCE = "tolerance"
    SIMILARITY = "similarity"
    LIMITED_TOLERANCE = "limited-tolerance"
    K_LIMITED_TOLERANCE = "k-limited-tolerance"
    POSITIVE_TRANSITIVE = "positive-transitive"


def parse_rational(value: Fraction | int | float | str) -> Fraction:
    """Coerce a user-supplied number to an exact fraction.

    Strings accept both "1/4" and "0.25"; floats are read through their
    decimal repr, so ``0.25`` means exactly a quarter.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    try:
        if isinstance(value, float):
            return Fraction(str(value))
        if isinstance(value, str):
            return Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        pass
    raise ValueError(f"not a rational number: {value!r}")


@dataclass(frozen=True)
class RelationConfig:
    """A relation kind plus its parameters.

    ``k`` is the agreement threshold used by ``k_limited_tolerance`` and
    ``positive_transitive`` (ignored by the other kinds) and must lie in
    [0, 1].  ``symmetrize`` closes ``positive_transitive`` under symmetry;
    the raw relation is directional.
    """

    kind: RelationKind
    k: Fraction = field(default=Fraction(1, 4))
    symmetrize: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.kind, RelationKind):
            raise TypeError(f"kind must be a RelationKind, got {self.kind!r}")
        object.__setattr__(self, "k", parse_rational(self.k))
        if not 0 <= self.k <= 1:
            raise ValueError(f"k must lie in [0, 1], got {self.k}")


def _attr_tuple(table: DecisionTable, attrs: Iterable[str]) -> tuple[str, ...]:
    """Normalize an attribute subset to table order, validating membership."""
    wanted = set(attrs)
    unknown = wanted - set(table.condition_attrs)
    if unknown:
        raise KeyError(f"unknown attributes: {sorted(unknown)}")
    return tuple(a for a in table.condition_attrs if a in wanted)


def shared_agreeing_attrs(
    table: DecisionTable, x: str, y: str, attrs: Iterable[str]
) -> frozenset[str]:
    """Attributes in ``attrs`` where ``x`` and ``y`` are both known and equal."""
    return frozenset(
        a for a in _attr_tuple(table, attrs) if values_agree(table.value(x, a), table.value(y, a))
    )


def agreement_degree(
    table: DecisionTable, x: str, y: str, attrs: Iterable[str]
) -> Fraction:
    """Fraction of ``attrs`` on which ``x`` and ``y`` agree with known values."""
    subset = _attr_tuple(table, attrs)
    if not subset:
        raise ValueError("agreement degree is undefined on an empty attribute set")
    return Fraction(len(shared_agreeing_attrs(table, x, y, subset)), len(subset))


def equivalence(table: DecisionTable, x: str, y: str, attrs: Iterable[str]) -> bool:
    """Cells literally equal on every attribute; MISSING counts as a value."""
    return all(table.value(x, a) == table.value(y, a) for a in _attr_tuple(table, attrs))


def tolerance(table: DecisionTable, x: str, y: str, attrs: Iterable[str]) -> bool:
    """Per attribute: either side unknown, or equal."""
    return all(
        is_missing(u) or is_missing(v) or u == v
        for u, v in ((table.value(x, a), table.value(y, a)) for a in _attr_tuple(table, attrs))
    )


def similarity(table: DecisionTable, x: str, y: str, attrs: Iterable[str]) -> bool:
    """Every known value of ``x`` is matched exactly by ``y``.

    Directional: ``similarity(x, y)`` does not imply ``similarity(y, x)``.
    """
    return all(
        is_missing(u) or u == v
        for u, v in ((table.value(x, a), table.value(y, a)) for a in _attr_tuple(table, attrs))
    )


def limited_tolerance(table: DecisionTable, x: str, y: str, attrs: Iterable[str]) -> bool:
    """Tolerance restricted to pairs with at least one shared known value.

    Two rows relate when either both are entirely unknown on ``attrs``, or
    they agree on at least one attribute known to both and conflict on none.
    """
    subset = _attr_tuple(table, attrs)
    pairs = [(table.value(x, a), table.value(y, a)) for a in subset]
    if all(is_missing(u) and is_missing(v) for u, v in pairs):
        return True
    both_known = [(u, v) for u, v in pairs if not is_missing(u) and not is_missing(v)]
    return bool(both_known) and all(u == v for u, v in both_known)


def k_limited_tolerance(
    table: DecisionTable,
    x: str,
    y: str,
    attrs: Iterable[str],
    k: Fraction | int | float | str = Fraction(1, 4),
) -> bool:
    """Limited tolerance with agreement degree at least ``k``.

    The all-unknown escape hatch of limited tolerance is kept regardless of
    ``k``.  Note the relation is not reflexive once ``k`` exceeds the share
    of known values in a row.
    """
    k = parse_rational(k)
    if not 0 <= k <= 1:
        raise ValueError(f"k must lie in [0, 1], got {k}")
    subset = _attr_tuple(table, attrs)
    if not subset:
        raise ValueError("k-limited tolerance is undefined on an empty attribute set")
    pairs = [(table.value(x, a), table.value(y, a)) for a in subset]
    if all(is_missing(u) and is_missing(v) for u, v in pairs):
        return True
    both_known = [(u, v) for u, v in pairs if not is_missing(u) and not is_missing(v)]
    if not both_known or any(u != v for u, v in both_known):
        return False
    return agreement_degree(table, x, y, subset) >= k


def bridge_triple(
    table: DecisionTable,
    x: str,
    y: str,
    z: str,
    attrs: Iterable[str],
    k: Fraction | int | float | str = Fraction(1, 4),
) -> bool:
    """True when ``z`` links ``x`` to ``y``: k-limited tolerance from ``x``
    to ``z``, then similarity from ``z`` to ``y``."""
    subset = _attr_tuple(table, attrs)
    return k_limited_tolerance(table, x, z, subset, k) and similarity(table, z, y, subset)


def bridge_witness(
    table: DecisionTable,
    x: str,
    y: str,
    attrs: Iterable[str],
    k: Fraction | int | float | str = Fraction(1, 4),
) -> str | None:
    """First object (in table order) that bridges ``x`` to ``y``, if any."""
    subset = _attr_tuple(table, attrs)
    for z in table.objects:
        if bridge_triple(table, x, y, z, subset, k):
            return z
    return None


def positive_transitive(
    table: DecisionTable,
    x: str,
    y: str,
    attrs: Iterable[str],
    k: Fraction | int | float | str = Fraction(1, 4),
    symmetrize: bool = False,
) -> bool:
    """k-limited tolerance extended by one similarity step.

    ``x`` relates to ``y`` directly, or through some witness ``z`` with
    ``k_limited_tolerance(x, z)`` and ``similarity(z, y)``.  Directional by
    default; ``symmetrize`` accepts the pair when either direction holds.
    """
    subset = _attr_tuple(table, attrs)

    def directed(p: str, q: str) -> bool:
        return (
            k_limited_tolerance(table, p, q, subset, k)
            or bridge_witness(table, p, q, subset, k) is not None
        )

    if directed(x, y):
        return True
    return symmetrize and directed(y, x)


@dataclass(frozen=True)
class RelationMatrix:
    """A boolean relation over the table's objects, one bitmask per row.

    Bit ``j`` of ``rows[i]`` is set when object ``i`` relates to object
    ``j`` (indices in table order).
    """

    objects: tuple[str, ...]
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != len(self.objects):
            raise ValueError("one bitmask row per object required")
        limit = 1 << len(self.objects)
        if any(not 0 <= row < limit for row in self.rows):
            raise ValueError("row bitmask wider than the object universe")

    def index(self, obj: str) -> int:
        try:
            return self.objects.index(obj)
        except ValueError:
            raise KeyError(f"unknown object: {obj!r}") from None

    def bit(self, x: str, y: str) -> bool:
        """True when ``x`` relates to ``y``."""
        return bool(self.rows[self.index(x)] >> self.index(y) & 1)

    def neighborhood(self, x: str) -> tuple[str, ...]:
        """Objects related to ``x``, in table order."""
        row = self.rows[self.index(x)]
        return tuple(o for j, o in enumerate(self.objects) if row >> j & 1)

    def to_neighborhoods(self) -> dict[str, tuple[str, ...]]:
        """All neighborhoods keyed by object, in table order."""
        return {x: self.neighborhood(x) for x in self.objects}

    def issubset(self, other: "RelationMatrix") -> bool:
        """True when every related pair here also relates in ``other``."""
        if self.objects != other.objects:
            raise ValueError("matrices range over different objects")
        return all(mine & ~theirs == 0 for mine, theirs in zip(self.rows, other.rows))

    def is_symmetric(self) -> bool:
        return all(
            (self.rows[i] >> j & 1) == (self.rows[j] >> i & 1)
            for i in range(len(self.objects))
            for j in range(i + 1, len(self.objects))
        )

    def is_reflexive(self) -> bool:
        return all(row >> i & 1 for i, row in enumerate(self.rows))


def _pair_predicate(
    table: DecisionTable, attrs: tuple[str, ...], config: RelationConfig
) -> Callable[[str, str], bool]:
    kind = config.kind
    if kind is RelationKind.EQUIVALENCE:
        return lambda x, y: equivalence(table, x, y, attrs)
    if kind is RelationKind.TOLERANCE:
        return lambda x, y: tolerance(table, x, y, attrs)
    if kind is RelationKind.SIMILARITY:
        return lambda x, y: similarity(table, x, y, attrs)
    if kind is RelationKind.LIMITED_TOLERANCE:
        return lambda x, y: limited_tolerance(table, x, y, attrs)
    if kind is RelationKind.K_LIMITED_TOLERANCE:
        return lambda x, y: k_limited_tolerance(table, x, y, attrs, config.k)
    raise AssertionError(f"unhandled relation kind: {kind}")


def relation_matrix(
    table: DecisionTable, attrs: Iterable[str], config: RelationConfig
) -> RelationMatrix:
    """Evaluate ``config``'s relation over all object pairs.

    The positive transitive kind is built from the k-limited tolerance and
    similarity matrices by one round of bitwise row unions rather than by
    scanning witnesses per pair.
    """
    subset = _attr_tuple(table, attrs)
    objects = table.objects
    n = len(objects)
    if config.kind is RelationKind.POSITIVE_TRANSITIVE:
        base = relation_matrix(table, subset, RelationConfig(RelationKind.K_LIMITED_TOLERANCE, config.k))
        sim = relation_matrix(table, subset, RelationConfig(RelationKind.SIMILARITY))
        rows = []
        for i in range(n):
            acc = pending = base.rows[i]
            while pending:
                low = pending & -pending
                pending ^= low
                acc |= sim.rows[low.bit_length() - 1]
            rows.append(acc)
        if config.symmetrize:
            mirrored = list(rows)
            for i in range(n):
                for j in range(n):
                    if rows[i] >> j & 1:
                        mirrored[j] |= 1 << i
            rows = mirrored
        return RelationMatrix(objects, tuple(rows))
    related = _pair_predicate(table, subset, config)
    rows = []
    for x in objects:
        row = 0
        for j, y in enumerate(objects):
            if related(x, y):
                row |= 1 << j
        rows.append(row)
    return RelationMatrix(objects, tuple(rows))


def neighborhood_map(
    table: DecisionTable, attrs: Iterable[str], config: RelationConfig
) -> dict[str, tuple[str, ...]]:
    """Neighborhood of every object under ``config``, keyed in table order."""
    return relation_matrix(table, attrs, config).to_neighborhoods()
