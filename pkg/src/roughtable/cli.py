"""Command line interface for inspecting incomplete decision tables.

Exit codes: 0 success, 2 unreadable or malformed input, 3 bad
configuration (unknown relation, bad threshold, bad selection), 4 table
inconsistency (a pair that must be discerned but cannot be).
"""

from __future__ import annotations

import json
from pathlib import Path

import click

from .approximation import approximate, decision_classes
from .reduction import (
    InseparablePairError,
    discernibility_function,
    discernibility_matrix,
    reducts_bruteforce,
    reducts_from_function,
)
from .relations import RelationConfig, RelationKind, neighborhood_map
from .table import ParseOptions, TableError, parse_table


class ParseFailure(click.ClickException):
    exit_code = 2


class ConfigFailure(click.ClickException):
    exit_code = 3


class InconsistentTable(click.ClickException):
    exit_code = 4


def _table_options(f):
    f = click.option(
        "--missing",
        "missing_token",
        default="*",
        show_default=True,
        help="Token marking an unknown cell.",
    )(f)
    f = click.option(
        "--id-column",
        is_flag=True,
        help="Treat the first column as object identifiers.",
    )(f)
    f = click.option(
        "--decision",
        "decision_attr",
        default=None,
        help="Decision column name (default: the last column).",
    )(f)
    return f


def _relation_option(f):
    return click.option(
        "--relation",
        default=RelationKind.POSITIVE_TRANSITIVE.value,
        show_default=True,
        help="Relation to use: " + ", ".join(k.value for k in RelationKind) + ".",
    )(f)


def _shared_options(f):
    f = click.option(
        "--format",
        "fmt",
        default="text",
        show_default=True,
        help="Output format: text or json.",
    )(f)
    f = click.option(
        "--symmetrize",
        is_flag=True,
        help="Close the positive transitive relation under symmetry.",
    )(f)
    f = click.option(
        "--k",
        "k_text",
        default="1/4",
        show_default=True,
        help='Agreement threshold, e.g. "1/4" or "0.25".',
    )(f)
    return f


def _load_table(path, decision_attr, id_column, missing_token):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseFailure(f"cannot read {path}: {exc}")
    options = ParseOptions(
        missing_token=missing_token, decision_attr=decision_attr, id_column=id_column
    )
    try:
        return parse_table(text, options)
    except TableError as exc:
        raise ParseFailure(str(exc))


def _config(relation, k_text, symmetrize):
    try:
        kind = RelationKind(relation)
    except ValueError:
        tokens = ", ".join(k.value for k in RelationKind)
        raise ConfigFailure(f"unknown relation {relation!r} (choose from: {tokens})")
    try:
        return RelationConfig(kind, k_text, symmetrize)
    except ValueError as exc:
        raise ConfigFailure(str(exc))


def _check_format(fmt):
    if fmt not in ("text", "json"):
        raise ConfigFailure(f"unknown format {fmt!r} (choose from: text, json)")
    return fmt


def _fmt_set(members) -> str:
    return "{" + ", ".join(members) + "}"


def _emit(fmt, lines, payload):
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2))
    else:
        for line in lines:
            click.echo(line)


def _payload(command, path, table, result):
    return {
        "command": command,
        "table": {
            "path": str(path),
            "objects": len(table.objects),
            "attributes": len(table.condition_attrs),
        },
        "result": result,
    }


def _ordered(table, members) -> list[str]:
    members = set(members)
    return [o for o in table.objects if o in members]


@click.group()
@click.version_option(package_name="roughtable")
def cli():
    """Analyze incomplete decision tables with rough approximations."""


@cli.command("classes")
@click.argument("input", type=click.Path(exists=True, dir_okay=False))
@_table_options
@_relation_option
@_shared_options
def cmd_classes(input, decision_attr, id_column, missing_token, relation, k_text, symmetrize, fmt):
    """Show each object's neighborhood under the chosen relation."""
    fmt = _check_format(fmt)
    table = _load_table(input, decision_attr, id_column, missing_token)
    config = _config(relation, k_text, symmetrize)
    nb = neighborhood_map(table, table.condition_attrs, config)
    lines = [f"{obj}: {_fmt_set(nb[obj])}" for obj in table.objects]
    result = {
        "relation": relation,
        "k": str(config.k),
        "symmetrize": config.symmetrize,
        "neighborhoods": [
            {"object": obj, "members": list(nb[obj])} for obj in table.objects
        ],
    }
    _emit(fmt, lines, _payload("classes", input, table, result))


@cli.command("approx")
@click.argument("input", type=click.Path(exists=True, dir_okay=False))
@_table_options
@_relation_option
@_shared_options
@click.option("--class", "class_symbol", default=None, help="Approximate one decision class.")
@click.option(
    "--objects",
    "objects_text",
    default=None,
    help="Approximate an explicit comma-separated object set.",
)
def cmd_approx(
    input,
    decision_attr,
    id_column,
    missing_token,
    relation,
    k_text,
    symmetrize,
    fmt,
    class_symbol,
    objects_text,
):
    """Lower/upper approximations of a decision class or an object set."""
    fmt = _check_format(fmt)
    table = _load_table(input, decision_attr, id_column, missing_token)
    config = _config(relation, k_text, symmetrize)
    if (class_symbol is None) == (objects_text is None):
        raise ConfigFailure("pass exactly one of --class or --objects")
    if class_symbol is not None:
        classes = decision_classes(table)
        if class_symbol not in classes:
            known = ", ".join(classes)
            raise ConfigFailure(f"unknown decision symbol {class_symbol!r} (classes: {known})")
        target = classes[class_symbol]
    else:
        target = [o.strip() for o in objects_text.split(",") if o.strip()]
        unknown = [o for o in target if o not in set(table.objects)]
        if unknown:
            raise ConfigFailure(f"unknown objects: {', '.join(unknown)}")
    res = approximate(table, target, table.condition_attrs, config)
    lines = [
        f"target: {_fmt_set(res.target)}",
        f"lower: {_fmt_set(res.lower)}",
        f"upper: {_fmt_set(res.upper)}",
        f"boundary: {_fmt_set(res.boundary)}",
        f"accuracy: {res.accuracy}",
    ]
    result = {
        "relation": relation,
        "k": str(config.k),
        "symmetrize": config.symmetrize,
        "target": list(res.target),
        "lower": list(res.lower),
        "upper": list(res.upper),
        "boundary": list(res.boundary),
        "accuracy": str(res.accuracy),
    }
    _emit(fmt, lines, _payload("approx", input, table, result))


@cli.command("reduce")
@click.argument("input", type=click.Path(exists=True, dir_okay=False))
@_table_options
@_relation_option
@_shared_options
@click.option(
    "--verify",
    is_flag=True,
    help="Cross-check against a brute-force subset scan (small tables only).",
)
def cmd_reduce(
    input, decision_attr, id_column, missing_token, relation, k_text, symmetrize, fmt, verify
):
    """Compute all attribute reducts and their core."""
    fmt = _check_format(fmt)
    table = _load_table(input, decision_attr, id_column, missing_token)
    config = _config(relation, k_text, symmetrize)
    attrs = table.condition_attrs
    matrix = discernibility_matrix(table, attrs, config)
    try:
        clauses = discernibility_function(matrix)
    except InseparablePairError as exc:
        raise InconsistentTable(str(exc))
    reduct_set = reducts_from_function(clauses, attrs)

    def in_order(attr_set):
        return [a for a in attrs if a in attr_set]

    lines = [f"reducts: {len(reduct_set.reducts)}"]
    lines += [f"  {_fmt_set(in_order(r))}" for r in reduct_set.reducts]
    lines.append(f"core: {_fmt_set(in_order(reduct_set.core))}")
    result = {
        "relation": relation,
        "k": str(config.k),
        "symmetrize": config.symmetrize,
        "reducts": [in_order(r) for r in reduct_set.reducts],
        "core": in_order(reduct_set.core),
    }
    if verify:
        try:
            oracle = reducts_bruteforce(table, attrs, config)
        except ValueError as exc:
            raise ConfigFailure(str(exc))
        agree = set(oracle.reducts) == set(reduct_set.reducts)
        lines.append("oracle: agree" if agree else "oracle: disagree")
        if not agree:
            lines += [f"  oracle {_fmt_set(in_order(r))}" for r in oracle.reducts]
        result["verify"] = {
            "agree": agree,
            "oracle_reducts": [in_order(r) for r in oracle.reducts],
        }
    _emit(fmt, lines, _payload("reduce", input, table, result))


@cli.command("matrix")
@click.argument("input", type=click.Path(exists=True, dir_okay=False))
@_table_options
@_relation_option
@_shared_options
def cmd_matrix(input, decision_attr, id_column, missing_token, relation, k_text, symmetrize, fmt):
    """Print the discernibility matrix entries that the decision requires."""
    fmt = _check_format(fmt)
    table = _load_table(input, decision_attr, id_column, missing_token)
    config = _config(relation, k_text, symmetrize)
    matrix = discernibility_matrix(table, table.condition_attrs, config)

    def in_order(attr_set):
        return [a for a in table.condition_attrs if a in attr_set]

    lines = [
        f"({x}, {y}): {_fmt_set(in_order(entry))}"
        for (x, y), entry in matrix.entries.items()
    ]
    result = {
        "relation": relation,
        "k": str(config.k),
        "symmetrize": config.symmetrize,
        "pairs": [
            {"objects": [x, y], "attributes": in_order(entry)}
            for (x, y), entry in matrix.entries.items()
        ],
    }
    _emit(fmt, lines, _payload("matrix", input, table, result))


@cli.command("compare")
@click.argument("input", type=click.Path(exists=True, dir_okay=False))
@_table_options
@_shared_options
@click.option(
    "--relations",
    "relations_text",
    required=True,
    help="Comma-separated relation tokens to compare (at least two).",
)
def cmd_compare(
    input, decision_attr, id_column, missing_token, k_text, symmetrize, fmt, relations_text
):
    """Compare neighborhoods and class approximations across relations."""
    fmt = _check_format(fmt)
    table = _load_table(input, decision_attr, id_column, missing_token)
    tokens = [t.strip() for t in relations_text.split(",") if t.strip()]
    if len(tokens) < 2:
        raise ConfigFailure("compare needs at least two relations")
    configs = [(tok, _config(tok, k_text, symmetrize)) for tok in tokens]

    neighborhoods = {
        tok: neighborhood_map(table, table.condition_attrs, cfg) for tok, cfg in configs
    }
    lines = [f"relations: {', '.join(tokens)} (k={configs[0][1].k})"]
    nb_rows = []
    for obj in table.objects:
        per_kind = [set(neighborhoods[tok][obj]) for tok, _ in configs]
        diff = _ordered(table, set.union(*per_kind) - set.intersection(*per_kind))
        lines.append(f"object {obj}:")
        for tok, _ in configs:
            lines.append(f"  {tok}: {_fmt_set(neighborhoods[tok][obj])}")
        lines.append(f"  difference: {_fmt_set(diff)}")
        nb_rows.append(
            {
                "object": obj,
                "members": [
                    {"relation": tok, "objects": list(neighborhoods[tok][obj])}
                    for tok, _ in configs
                ],
                "difference": diff,
            }
        )
    class_rows = []
    for symbol, members in decision_classes(table).items():
        approxes = [
            (tok, approximate(table, members, table.condition_attrs, cfg))
            for tok, cfg in configs
        ]
        lowers = [set(res.lower) for _, res in approxes]
        uppers = [set(res.upper) for _, res in approxes]
        lower_diff = _ordered(table, set.union(*lowers) - set.intersection(*lowers))
        upper_diff = _ordered(table, set.union(*uppers) - set.intersection(*uppers))
        lines.append(f"class {symbol}:")
        for tok, res in approxes:
            lines.append(f"  {tok}: lower {_fmt_set(res.lower)} upper {_fmt_set(res.upper)}")
        lines.append(f"  lower difference: {_fmt_set(lower_diff)}")
        lines.append(f"  upper difference: {_fmt_set(upper_diff)}")
        class_rows.append(
            {
                "decision": symbol,
                "approximations": [
                    {"relation": tok, "lower": list(res.lower), "upper": list(res.upper)}
                    for tok, res in approxes
                ],
                "lower_difference": lower_diff,
                "upper_difference": upper_diff,
            }
        )
    result = {
        "relations": tokens,
        "k": str(configs[0][1].k),
        "symmetrize": symmetrize,
        "neighborhoods": nb_rows,
        "classes": class_rows,
    }
    _emit(fmt, lines, _payload("compare", input, table, result))


def main():
    cli()


if __name__ == "__main__":
    main()
