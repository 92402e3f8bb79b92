from fractions import Fraction

import pytest

from querytree import (
    DecisionTree,
    Distribution,
    Internal,
    IntervalSet,
    Leaf,
    OutcomeSet,
    Unconstrained,
    WinePairs,
    expected_depth,
    huffman_tree,
    validate_tree,
)


def balanced_four() -> DecisionTree:
    root = Internal(
        OutcomeSet([0, 1]),
        Internal(OutcomeSet([0]), Leaf(0), Leaf(1)),
        Internal(OutcomeSet([2]), Leaf(2), Leaf(3)),
    )
    return DecisionTree(root, 4)


def test_candidates_assigned_top_down():
    t = balanced_four()
    assert t.root.candidates.members == (0, 1, 2, 3)
    assert t.root.left.candidates.members == (0, 1)
    assert t.root.right.right.candidates.members == (3,)


def test_rejects_non_partitioning_query():
    # query covers all candidates: right branch empty
    root = Internal(OutcomeSet([0, 1]), Leaf(0), Leaf(1))
    with pytest.raises(ValueError):
        DecisionTree(root, 2)


def test_rejects_wrong_leaf():
    root = Internal(OutcomeSet([0]), Leaf(0), Leaf(2))
    with pytest.raises(ValueError):
        DecisionTree(root, 2)


def test_rejects_fat_leaf():
    root = Internal(OutcomeSet([0]), Leaf(0), Leaf(1))
    with pytest.raises(ValueError):
        DecisionTree(root, 3)  # right branch holds {1, 2} but is a leaf


def test_expected_depth_trivial():
    assert expected_depth(DecisionTree(Leaf(0), 1), Distribution([1.0])) == 0


def test_expected_depth_balanced():
    d = Distribution([0.25, 0.25, 0.25, 0.25])
    assert expected_depth(balanced_four(), d) == 2.0


def test_expected_depth_exact():
    d = Distribution([Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)])
    root = Internal(OutcomeSet([0]), Leaf(0), Internal(OutcomeSet([1]), Leaf(1), Leaf(2)))
    assert expected_depth(DecisionTree(root, 3), d) == Fraction(3, 2)


def test_expected_depth_alphabet_mismatch():
    with pytest.raises(ValueError, match="alphabet"):
        expected_depth(balanced_four(), Distribution([0.5, 0.5]))


def test_validate_unconstrained_always_feasible():
    assert validate_tree(balanced_four(), Unconstrained()).feasible


def test_validate_interval_root_split():
    # {0,1} vs {2,3} realizable by the interval [0,1]
    report = validate_tree(balanced_four(), IntervalSet(4))
    assert report.feasible


def test_validate_reports_infeasible_root():
    d = Distribution(
        [Fraction(1, 10), Fraction(1, 10), Fraction(3, 20), Fraction(3, 20),
         Fraction(3, 10), Fraction(1, 5)]
    )
    report = validate_tree(huffman_tree(d), WinePairs(4))
    assert not report.feasible
    assert report.violations[0].path == ""
    assert "root" in report.describe()


def test_json_round_trip():
    t = balanced_four()
    text = t.to_json()
    back = DecisionTree.from_json(text, 4)
    assert back.to_dict() == t.to_dict()
    assert back.to_dict() == {
        "query": [0, 1],
        "left": {"query": [0], "left": {"outcome": 0}, "right": {"outcome": 1}},
        "right": {"query": [2], "left": {"outcome": 2}, "right": {"outcome": 3}},
    }


def test_leaves_and_paths():
    t = balanced_four()
    assert sorted(t.leaves()) == [(0, 2), (1, 2), (2, 2), (3, 2)]
    paths = [p for p, _ in t.internal_nodes()]
    assert sorted(paths) == ["", "0", "1"]
