import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from roughtable import InseparablePairError, ReductSelector

X_CONSISTENT = [
    ["0", "0"],
    ["0", "1"],
    ["1", "0"],
]
Y_CONSISTENT = ["A", "B", "A"]


def test_fit_selects_a_reduct():
    sel = ReductSelector(relation="equivalence").fit(X_CONSISTENT, Y_CONSISTENT)
    assert sel.reducts_ == ((1,),)
    assert sel.core_ == (1,)
    assert sel.n_features_in_ == 2
    assert sel.get_support().tolist() == [False, True]


def test_transform_keeps_reduct_columns():
    sel = ReductSelector(relation="equivalence").fit(X_CONSISTENT, Y_CONSISTENT)
    out = sel.transform(X_CONSISTENT)
    assert out.shape == (3, 1)
    assert out[:, 0].tolist() == ["0", "1", "0"]
    both = sel.fit_transform(X_CONSISTENT, Y_CONSISTENT)
    assert both.tolist() == out.tolist()


def test_feature_names_out():
    sel = ReductSelector(relation="equivalence").fit(X_CONSISTENT, Y_CONSISTENT)
    assert sel.get_feature_names_out().tolist() == ["x1"]


def test_missing_tokens_are_unknown_cells():
    X = [["3", "2"], [None, "2"], [float("nan"), "*"]]
    y = ["P", "P", "Q"]
    sel = ReductSelector(relation="tolerance").fit(X, y)
    assert sel.n_features_in_ == 2


def test_numeric_cells_are_compared_as_strings():
    X = np.array([[0, 0], [0, 1], [1, 0]], dtype=object)
    sel = ReductSelector(relation="equivalence").fit(X, np.array(["A", "B", "A"]))
    assert sel.reducts_ == ((1,),)


def test_inconsistent_table_raises():
    # literally distinct rows, so both count as certain under equivalence,
    # but every difference hides behind an unknown cell
    X = [["3", "*", "*", "3"], ["*", "0", "0", "*"]]
    with pytest.raises(InseparablePairError):
        ReductSelector(relation="equivalence").fit(X, ["P", "Q"])


def test_input_validation():
    sel = ReductSelector()
    with pytest.raises(ValueError, match="2-dimensional"):
        sel.fit(["0", "1"], ["A", "B"])
    with pytest.raises(ValueError, match="rows but y"):
        sel.fit(X_CONSISTENT, ["A", "B"])
    with pytest.raises(ValueError, match="decision for row 1 is missing"):
        sel.fit([["0"], ["1"]], ["A", "*"])
    with pytest.raises(NotFittedError):
        ReductSelector().transform(X_CONSISTENT)


def test_transform_checks_width():
    sel = ReductSelector(relation="equivalence").fit(X_CONSISTENT, Y_CONSISTENT)
    with pytest.raises(ValueError, match="features"):
        sel.transform([["0", "1", "2"]])


def test_sklearn_param_protocol():
    sel = ReductSelector(relation="tolerance", k="1/2", symmetrize=True, missing_token="?")
    params = sel.get_params()
    assert params["relation"] == "tolerance"
    assert params["k"] == "1/2"
    twin = clone(sel)
    assert twin.get_params() == params


def test_bad_relation_token_fails_at_fit():
    with pytest.raises(ValueError):
        ReductSelector(relation="nope").fit(X_CONSISTENT, Y_CONSISTENT)


def test_single_class_selects_nothing():
    sel = ReductSelector(relation="tolerance").fit([["0"], ["1"]], ["A", "A"])
    assert sel.reducts_ == ((),)
    out = sel.transform([["0"], ["1"]])
    assert out.shape == (2, 0)
