"""Decision tables over symbolic attributes with missing values.

A decision table holds a finite set of objects, an ordered set of condition
attributes, and a single decision attribute.  Condition cells are either a
symbolic value (a string) or the ``MISSING`` marker; decision values are
always known.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class TableError(ValueError):
    """A decision table violates a structural constraint."""


class TableParseError(TableError):
    """Raw table text could not be parsed into a decision table."""


class _MissingType:
    """The type of the ``MISSING`` marker.  Only one instance exists."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "MISSING"

    def __reduce__(self):
        # keep the singleton property across pickling
        return (_MissingType, ())

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self


#: Marker stored in a cell whose value is unknown.
MISSING = _MissingType()

#: A condition cell: a symbolic value or the missing marker.
AttrValue = str | _MissingType


def is_missing(value: AttrValue) -> bool:
    """True if ``value`` is the missing marker."""
    return value is MISSING


def values_agree(u: AttrValue, v: AttrValue) -> bool:
    """True if both values are known and equal.

    A missing value never agrees with anything, not even another missing
    value.
    """
    return u is not MISSING and v is not MISSING and u == v


class DecisionTable:
    """An immutable decision table.

    Parameters
    ----------
    objects:
        Object identifiers, in display order.  Must be unique and nonempty.
    condition_attrs:
        Condition attribute names, in display order.  Must be unique,
        nonempty, and must not contain ``decision_attr``.
    decision_attr:
        Name of the decision attribute.
    grid:
        Mapping ``(object, attribute) -> value`` covering exactly the
        ``objects x condition_attrs`` rectangle.
    decisions:
        Mapping ``object -> decision value``.  Decision values are strings;
        a missing decision is rejected.
    """

    def __init__(
        self,
        objects: Iterable[str],
        condition_attrs: Iterable[str],
        decision_attr: str,
        grid: dict[tuple[str, str], AttrValue],
        decisions: dict[str, str],
    ) -> None:
        self.objects: tuple[str, ...] = tuple(objects)
        self.condition_attrs: tuple[str, ...] = tuple(condition_attrs)
        self.decision_attr: str = decision_attr
        self.grid: dict[tuple[str, str], AttrValue] = dict(grid)
        self.decisions: dict[str, str] = dict(decisions)
        self._obj_pos = {o: i for i, o in enumerate(self.objects)}
        self._attr_pos = {a: i for i, a in enumerate(self.condition_attrs)}
        self._validate()

    def _validate(self) -> None:
        if not self.objects:
            raise TableError("a decision table needs at least one object")
        if not self.condition_attrs:
            raise TableError("a decision table needs at least one condition attribute")
        if len(self._obj_pos) != len(self.objects):
            raise TableError("object identifiers must be unique")
        if len(self._attr_pos) != len(self.condition_attrs):
            raise TableError("condition attribute names must be unique")
        if self.decision_attr in self._attr_pos:
            raise TableError(
                f"decision attribute {self.decision_attr!r} also appears as a condition attribute"
            )
        expected = {(o, a) for o in self.objects for a in self.condition_attrs}
        if set(self.grid) != expected:
            missing = expected - set(self.grid)
            extra = set(self.grid) - expected
            detail = []
            if missing:
                detail.append(f"missing cells: {sorted(missing)[:3]}")
            if extra:
                detail.append(f"unexpected cells: {sorted(extra)[:3]}")
            raise TableError("grid does not cover the object/attribute rectangle (" + "; ".join(detail) + ")")
        for cell, value in self.grid.items():
            if not (value is MISSING or isinstance(value, str)):
                raise TableError(f"cell {cell} holds {value!r}; expected a string or MISSING")
        if set(self.decisions) != set(self.objects):
            raise TableError("decisions must cover exactly the table's objects")
        for obj, value in self.decisions.items():
            if not isinstance(value, str):
                raise TableError(f"decision for {obj!r} is {value!r}; expected a string")

    def value(self, obj: str, attr: str) -> AttrValue:
        """The condition cell for ``obj`` at ``attr``."""
        try:
            return self.grid[(obj, attr)]
        except KeyError:
            if obj not in self._obj_pos:
                raise KeyError(f"unknown object: {obj!r}") from None
            raise KeyError(f"unknown attribute: {attr!r}") from None

    def decision(self, obj: str) -> str:
        """The decision value for ``obj``."""
        try:
            return self.decisions[obj]
        except KeyError:
            raise KeyError(f"unknown object: {obj!r}") from None

    def row(self, obj: str) -> tuple[AttrValue, ...]:
        """Condition values of ``obj`` in attribute order."""
        if obj not in self._obj_pos:
            raise KeyError(f"unknown object: {obj!r}")
        return tuple(self.grid[(obj, a)] for a in self.condition_attrs)

    def index(self, obj: str) -> int:
        """Position of ``obj`` in table order."""
        try:
            return self._obj_pos[obj]
        except KeyError:
            raise KeyError(f"unknown object: {obj!r}") from None

    def attr_index(self, attr: str) -> int:
        """Position of ``attr`` among the condition attributes."""
        try:
            return self._attr_pos[attr]
        except KeyError:
            raise KeyError(f"unknown attribute: {attr!r}") from None

    def __iter__(self) -> Iterator[str]:
        return iter(self.objects)

    def __len__(self) -> int:
        return len(self.objects)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DecisionTable):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.condition_attrs == other.condition_attrs
            and self.decision_attr == other.decision_attr
            and self.grid == other.grid
            and self.decisions == other.decisions
        )

    def __repr__(self) -> str:
        return (
            f"DecisionTable({len(self.objects)} objects, "
            f"{len(self.condition_attrs)} condition attrs, decision={self.decision_attr!r})"
        )


@dataclass(frozen=True)
class ParseOptions:
    """How to read delimited table text.

    ``decision_attr`` selects the decision column by name; by default the
    last column is the decision.  With ``id_column`` the first column holds
    object identifiers, otherwise objects are numbered "1", "2", ... in row
    order.  Cells equal to ``missing_token`` become ``MISSING``.
    """

    delimiter: str = ","
    missing_token: str = "*"
    decision_attr: str | None = None
    id_column: bool = False


def parse_table(text: str, options: ParseOptions = ParseOptions()) -> DecisionTable:
    """Parse delimited text (header row + data rows) into a decision table.

    Blank lines are ignored.  Raises :class:`TableParseError` on ragged rows,
    duplicate identifiers or attribute names, an unknown decision column, a
    missing decision value, or an empty table.
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise TableParseError("empty table: no header row")
    header = [h.strip() for h in lines[0].split(options.delimiter)]
    if options.id_column:
        if len(header) < 2:
            raise TableParseError("id column requested but the header has a single column")
        attr_names = header[1:]
    else:
        attr_names = header
    if any(not name for name in attr_names):
        raise TableParseError("empty attribute name in header")
    if len(set(attr_names)) != len(attr_names):
        raise TableParseError("duplicate attribute names in header")

    decision_attr = options.decision_attr if options.decision_attr is not None else attr_names[-1]
    if decision_attr not in attr_names:
        raise TableParseError(f"unknown decision column: {decision_attr!r}")
    condition_attrs = tuple(a for a in attr_names if a != decision_attr)
    if not condition_attrs:
        raise TableParseError("no condition attributes besides the decision column")

    objects: list[str] = []
    grid: dict[tuple[str, str], AttrValue] = {}
    decisions: dict[str, str] = {}
    for row_no, line in enumerate(lines[1:], start=2):
        cells = [c.strip() for c in line.split(options.delimiter)]
        if len(cells) != len(header):
            raise TableParseError(
                f"row {row_no}: expected {len(header)} cells, found {len(cells)}"
            )
        if options.id_column:
            obj, cells = cells[0], cells[1:]
        else:
            obj = str(len(objects) + 1)
        if obj in decisions:
            raise TableParseError(f"row {row_no}: duplicate object id {obj!r}")
        objects.append(obj)
        for attr, token in zip(attr_names, cells):
            if attr == decision_attr:
                if token == options.missing_token:
                    raise TableParseError(f"row {row_no}: missing decision value for {obj!r}")
                decisions[obj] = token
            else:
                grid[(obj, attr)] = MISSING if token == options.missing_token else token
    if not objects:
        raise TableParseError("empty table: no data rows")
    return DecisionTable(objects, condition_attrs, decision_attr, grid, decisions)


def serialize_table(
    table: DecisionTable, delimiter: str = ",", missing_token: str = "*"
) -> str:
    """Render a table back to delimited text.

    The first column holds object identifiers under the header ``id``, so
    ``parse_table(serialize_table(t), ParseOptions(id_column=True))``
    reconstructs ``t``.
    """
    header = ["id", *table.condition_attrs, table.decision_attr]
    lines = [delimiter.join(header)]
    for obj in table.objects:
        cells = [obj]
        for attr in table.condition_attrs:
            value = table.value(obj, attr)
            cells.append(missing_token if value is MISSING else value)
        cells.append(table.decision(obj))
        lines.append(delimiter.join(cells))
    return "\n".join(lines) + "\n"


def specified_attrs(table: DecisionTable, obj: str) -> frozenset[str]:
    """Condition attributes on which ``obj`` has a known value."""
    return frozenset(a for a in table.condition_attrs if table.value(obj, a) is not MISSING)


def project(table: DecisionTable, attrs: Iterable[str]) -> DecisionTable:
    """Restrict the table to a subset of condition attributes.

    Attribute order follows the original table.  The subset must be nonempty
    and contained in the table's condition attributes.
    """
    wanted = set(attrs)
    unknown = wanted - set(table.condition_attrs)
    if unknown:
        raise KeyError(f"unknown attributes: {sorted(unknown)}")
    kept = tuple(a for a in table.condition_attrs if a in wanted)
    if not kept:
        raise TableError("projection needs at least one condition attribute")
    grid = {(o, a): table.value(o, a) for o in table.objects for a in kept}
    return DecisionTable(table.objects, kept, table.decision_attr, grid, table.decisions)
