"""Scikit-learn style feature selection backed by attribute reducts."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.feature_selection import SelectorMixin
from sklearn.utils.validation import check_is_fitted

from .reduction import discernibility_function, discernibility_matrix, reducts_from_function
from .relations import RelationConfig, RelationKind
from .table import MISSING, AttrValue, DecisionTable


def _cell(value, missing_token: str) -> AttrValue:
    if value is None:
        return MISSING
    if isinstance(value, float) and math.isnan(value):
        return MISSING
    token = str(value)
    return MISSING if token == missing_token else token


class ReductSelector(SelectorMixin, BaseEstimator):
    """Select the attributes of one reduct of a symbolic decision table.

    ``fit`` treats ``X`` as a table of symbolic values (cells are compared
    through ``str``), builds the discernibility matrix under the chosen
    relation, and keeps the first reduct in attribute order.  ``None``,
    ``NaN``, and cells equal to ``missing_token`` count as unknown.

    Parameters
    ----------
    relation:
        One of the :class:`~roughtable.relations.RelationKind` tokens,
        e.g. "positive-transitive" or "equivalence".
    k:
        Agreement threshold for the degree-based relations.  Accepts
        fractions, "1/4"-style strings, or decimals.
    symmetrize:
        Close the positive transitive relation under symmetry.
    missing_token:
        String form of cells to treat as unknown.
    """

    def __init__(
        self,
        relation: str = RelationKind.POSITIVE_TRANSITIVE.value,
        k: Fraction | int | float | str = Fraction(1, 4),
        symmetrize: bool = False,
        missing_token: str = "*",
    ):
        self.relation = relation
        self.k = k
        self.symmetrize = symmetrize
        self.missing_token = missing_token

    def fit(self, X, y):
        """Compute reducts of the table formed by ``X`` and decisions ``y``."""
        feature_names = None
        if hasattr(X, "columns"):
            feature_names = [str(c) for c in X.columns]
        X = np.asarray(X, dtype=object)
        if X.ndim != 2:
            raise ValueError(f"X must be 2-dimensional, got shape {X.shape}")
        n_objects, n_features = X.shape
        if n_objects == 0 or n_features == 0:
            raise ValueError("X needs at least one row and one column")
        y = np.asarray(y, dtype=object).ravel()
        if len(y) != n_objects:
            raise ValueError(f"X has {n_objects} rows but y has {len(y)} entries")

        attrs = tuple(feature_names) if feature_names else tuple(
            f"x{j}" for j in range(n_features)
        )
        objects = tuple(str(i) for i in range(n_objects))
        grid = {
            (objects[i], attrs[j]): _cell(X[i, j], self.missing_token)
            for i in range(n_objects)
            for j in range(n_features)
        }
        decisions = {}
        for i in range(n_objects):
            token = str(y[i])
            if y[i] is None or token == self.missing_token:
                raise ValueError(f"decision for row {i} is missing")
            decisions[objects[i]] = token
        table = DecisionTable(objects, attrs, "__decision__", grid, decisions)
        config = RelationConfig(RelationKind(self.relation), self.k, self.symmetrize)

        matrix = discernibility_matrix(table, attrs, config)
        reduct_set = reducts_from_function(discernibility_function(matrix), attrs)
        index = {a: j for j, a in enumerate(attrs)}
        self.reducts_ = tuple(
            tuple(sorted(index[a] for a in reduct)) for reduct in reduct_set.reducts
        )
        self.core_ = tuple(sorted(index[a] for a in reduct_set.core))
        self.n_features_in_ = n_features
        if feature_names:
            self.feature_names_in_ = np.asarray(feature_names, dtype=object)
        mask = np.zeros(n_features, dtype=bool)
        if self.reducts_:
            mask[list(self.reducts_[0])] = True
        self._support_mask = mask
        return self

    def _get_support_mask(self):
        check_is_fitted(self)
        return self._support_mask

    def transform(self, X):
        """Keep only the columns of the selected reduct."""
        check_is_fitted(self)
        X = np.asarray(X, dtype=object)
        if X.ndim != 2:
            raise ValueError(f"X must be 2-dimensional, got shape {X.shape}")
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} features, but fit saw {self.n_features_in_}"
            )
        return X[:, self._support_mask]
