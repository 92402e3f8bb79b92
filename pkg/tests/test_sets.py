from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from querytree import (
    AlphabetTooLargeError,
    Explicit,
    IntervalSet,
    OutcomeSet,
    Unconstrained,
    WinePairs,
    is_decision_complete,
    realizable_bipartitions,
)

from oracles import interval_splits, powerset


def test_outcome_set_sorted_dedup():
    s = OutcomeSet([3, 1, 3, 2])
    assert s.members == (1, 2, 3)
    assert s.mask == 0b1110
    assert 2 in s and 0 not in s


def test_outcome_set_ops():
    a, b = OutcomeSet([0, 1, 2]), OutcomeSet([2, 3])
    assert a.intersection(b).members == (2,)
    assert a.difference(b).members == (0, 1)
    assert a.union(b).members == (0, 1, 2, 3)
    assert not a.isdisjoint(b)
    assert OutcomeSet([5]).is_singleton()


def test_unconstrained_enumerates_every_bipartition():
    ds = Unconstrained()
    c = OutcomeSet([0, 2, 5, 6])
    splits = ds.splits(c)
    assert len(splits) == 2 ** (len(c) - 1) - 1
    for a, b in splits:
        assert a.union(b) == c and a.isdisjoint(b)
        assert 0 in a  # canonical orientation: lowest candidate left
    assert len({a.mask for a, _ in splits}) == len(splits)


def test_interval_splits_match_run_oracle():
    ds = IntervalSet(8)
    c = frozenset({0, 2, 3, 6, 7})
    got = {(a.mask, b.mask) for a, b in ds.splits(OutcomeSet(c))}
    want_sides = interval_splits(c, 0, 7)
    # pair each side with its complement, orient by lowest member
    want = set()
    for side in want_sides:
        other = c - side
        a, b = (side, other) if min(c) in side else (other, side)
        want.add((sum(1 << i for i in a), sum(1 << i for i in b)))
    assert got == want


def test_interval_realizes_agrees_with_enumeration():
    ds = IntervalSet(6)
    universe = range(6)
    for size in (2, 3, 4, 5):
        for cand in combinations(universe, size):
            c = frozenset(cand)
            sides = interval_splits(c, 0, 5)
            for part in powerset(cand):
                part = frozenset(part)
                if not part or part == c:
                    continue
                assert ds.realizes(OutcomeSet(c), OutcomeSet(part)) == (part in sides)


def test_wine_pairs_alphabet_and_masks():
    ds = WinePairs(4)
    assert ds.n == 6
    assert ds.pairs[0] == (1, 2) and ds.pairs[-1] == (3, 4)
    # tasting one bottle or a pair of bottles gives 10 distinct useful queries
    assert len(ds.query_masks()) == 10


def test_wine_pairs_root_split_infeasible():
    # the balanced 3/3 split of outcomes {0,1,5} vs {2,3,4} has no query
    ds = WinePairs(4)
    c = OutcomeSet(range(6))
    assert not ds.realizes(c, OutcomeSet([0, 1, 5]))
    assert ds.realizes(c, OutcomeSet([0, 1, 2]))  # taste bottle 1


def test_explicit_set():
    ds = Explicit([[0, 1], [2]], n=3)
    c = OutcomeSet([0, 1, 2])
    splits = ds.splits(c)
    assert len(splits) == 1  # both queries induce the same bipartition
    assert ds.realizes(c, OutcomeSet([2]))
    assert not ds.realizes(c, OutcomeSet([1]))


def test_explicit_rejects_out_of_range():
    with pytest.raises(ValueError):
        Explicit([[0, 3]], n=3)


def test_decision_complete_unconstrained():
    assert is_decision_complete(Unconstrained(), 6)


def test_decision_complete_wine_pairs_false():
    # only 2**4 - 1 subsets of bottles exist: short of the 2**5 - 1 needed
    assert not is_decision_complete(WinePairs(4), 6)


def test_decision_complete_intervals():
    # derived by subset enumeration: every bipartition of {0,1,2} is
    # interval-realizable, but {0,2}|{1,3} is not over four outcomes
    assert is_decision_complete(IntervalSet(3), 3)
    assert not is_decision_complete(IntervalSet(4), 4)


def test_decision_complete_guard():
    with pytest.raises(AlphabetTooLargeError):
        is_decision_complete(IntervalSet(25), 25)


def test_decision_complete_matches_definition_small():
    # cross-check against the raw definition for every explicit family
    # over a 3-outcome alphabet drawn from a few random subsets
    import random

    rng = random.Random(1)
    n = 3
    all_queries = [frozenset(q) for q in powerset(range(n))]
    for _ in range(25):
        chosen = [q for q in all_queries if q and len(q) < n and rng.random() < 0.5]
        ds = Explicit([list(q) for q in chosen], n=n)
        complete = all(
            frozenset(s) in chosen or frozenset(range(n)) - frozenset(s) in chosen
            for s in powerset(range(n))
            if 0 < len(s) < n
        )
        assert is_decision_complete(ds, n) == complete


def test_bipartition_count_consistency():
    # fewer realizable bipartitions than needed implies not complete
    for ds, n in [(WinePairs(4), 6), (IntervalSet(5), 5), (IntervalSet(3), 3)]:
        if realizable_bipartitions(ds, n) < 2 ** (n - 1) - 1:
            assert not is_decision_complete(ds, n)


@settings(max_examples=60)
@given(st.sets(st.integers(min_value=0, max_value=11), min_size=2, max_size=8))
def test_interval_split_dedup_and_canonical(members):
    ds = IntervalSet(12)
    c = OutcomeSet(members)
    splits = ds.splits(c)
    seen = set()
    for a, b in splits:
        assert a.mask | b.mask == c.mask and a.mask & b.mask == 0
        assert len(a) and len(b)
        assert min(members) in a
        assert a.mask not in seen
        seen.add(a.mask)
