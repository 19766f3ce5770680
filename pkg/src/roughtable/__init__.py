"""Rough-set analysis of incomplete decision tables."""

from .approximation import (
    ApproximationResult,
    approximate,
    decision_classes,
    lower_approx,
    positive_region,
    upper_approx,
)
from .datasets import load_table1, table1_path
from .estimators import ReductSelector
from .reduction import (
    DiscernibilityMatrix,
    InseparablePairError,
    ReductSet,
    discernibility_entry,
    discernibility_function,
    discernibility_matrix,
    pair_filter,
    reducts_bruteforce,
    reducts_from_function,
)
from .relations import (
    RelationConfig,
    RelationKind,
    RelationMatrix,
    agreement_degree,
    bridge_triple,
    bridge_witness,
    equivalence,
    k_limited_tolerance,
    limited_tolerance,
    neighborhood_map,
    parse_rational,
    positive_transitive,
    relation_matrix,
    shared_agreeing_attrs,
    similarity,
    tolerance,
)
from .table import (
    MISSING,
    AttrValue,
    DecisionTable,
    ParseOptions,
    TableError,
    TableParseError,
    is_missing,
    parse_table,
    project,
    serialize_table,
    specified_attrs,
    values_agree,
)

__version__ = "0.1.0"

__all__ = [
    "MISSING",
    "AttrValue",
    "ApproximationResult",
    "DecisionTable",
    "DiscernibilityMatrix",
    "InseparablePairError",
    "ParseOptions",
    "ReductSelector",
    "ReductSet",
    "RelationConfig",
    "RelationKind",
    "RelationMatrix",
    "TableError",
    "TableParseError",
    "agreement_degree",
    "approximate",
    "bridge_triple",
    "bridge_witness",
    "decision_classes",
    "discernibility_entry",
    "discernibility_function",
    "discernibility_matrix",
    "equivalence",
    "is_missing",
    "k_limited_tolerance",
    "limited_tolerance",
    "load_table1",
    "lower_approx",
    "neighborhood_map",
    "pair_filter",
    "parse_rational",
    "parse_table",
    "positive_region",
    "positive_transitive",
    "project",
    "reducts_bruteforce",
    "reducts_from_function",
    "relation_matrix",
    "serialize_table",
    "shared_agreeing_attrs",
    "similarity",
    "specified_attrs",
    "table1_path",
    "tolerance",
    "upper_approx",
    "values_agree",
]
