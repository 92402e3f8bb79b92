import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from querytree import (
    Distribution,
    entropy,
    expected_depth,
    huffman_tree,
    shannon_length,
    shannon_symbol_length,
)

from oracles import min_depth_unconstrained

# frozen from a 50-digit evaluation of -sum(p log2 p)
ENTROPY_1234 = 1.8464393446710155


def exact_dist(*fracs):
    return Distribution([Fraction(*f) for f in fracs])


WINE = exact_dist((8, 23), (6, 23), (4, 23), (2, 23), (2, 23), (1, 23))
STEPS = exact_dist((1, 10), (2, 10), (3, 10), (4, 10))


def random_distribution(rng, n):
    w = [rng.random() for _ in range(n)]
    s = sum(w)
    return Distribution([x / s for x in w])


class TestEntropy:
    def test_deterministic(self):
        assert entropy(Distribution([1.0])) == 0.0

    def test_uniform_four(self):
        assert entropy(Distribution([0.25] * 4)) == 2.0

    def test_steps(self):
        assert math.isclose(entropy(STEPS), ENTROPY_1234, abs_tol=1e-12)

    @settings(max_examples=80)
    @given(st.lists(st.floats(min_value=0.01, max_value=1.0), min_size=1, max_size=12))
    def test_bounds(self, weights):
        total = sum(weights)
        d = Distribution([w / total for w in weights])
        h = entropy(d)
        assert -1e-9 <= h <= math.log2(len(d)) + 1e-9


class TestShannon:
    def test_exact_powers_of_two(self):
        assert shannon_length(Distribution([0.5, 0.5])) == 1.0
        assert shannon_length(Distribution([0.25] * 4)) == 2.0

    def test_symbol_lengths(self):
        assert [shannon_symbol_length(p) for p in STEPS] == [4, 3, 2, 2]
        assert shannon_length(STEPS) == Fraction(12, 5)

    def test_single_symbol(self):
        assert shannon_symbol_length(Fraction(1)) == 0
        assert shannon_length(Distribution([1.0])) == 0

    def test_exact_and_float_agree(self):
        rng = random.Random(5)
        for _ in range(50):
            num = rng.randrange(1, 1000)
            den = rng.randrange(num + 1, 2000)
            f = Fraction(num, den)
            assert shannon_symbol_length(f) == shannon_symbol_length(num / den)

    @settings(max_examples=80)
    @given(st.lists(st.floats(min_value=0.01, max_value=1.0), min_size=1, max_size=12))
    def test_within_one_of_entropy(self, weights):
        total = sum(weights)
        d = Distribution([w / total for w in weights])
        assert shannon_length(d) < entropy(d) + 1


class TestHuffman:
    def test_wine_example(self):
        assert expected_depth(huffman_tree(WINE), WINE) == Fraction(54, 23)

    def test_steps_example(self):
        assert expected_depth(huffman_tree(STEPS), STEPS) == Fraction(19, 10)

    def test_two_bad_wine_bound(self):
        d = exact_dist((1, 10), (1, 10), (3, 20), (3, 20), (3, 10), (1, 5))
        assert expected_depth(huffman_tree(d), d) == Fraction(5, 2)

    def test_single_outcome(self):
        t = huffman_tree(Distribution([1.0]))
        assert list(t.leaves()) == [(0, 0)]

    def test_deterministic_under_ties(self):
        d = Distribution.uniform(5)
        assert huffman_tree(d).to_dict() == huffman_tree(d).to_dict()

    def test_optimal_against_exhaustive_enumeration(self):
        rng = random.Random(20260810)
        for trial in range(12):
            n = rng.randrange(2, 9)
            d = random_distribution(rng, n)
            best = min_depth_unconstrained(d.probs)
            got = expected_depth(huffman_tree(d), d)
            assert math.isclose(got, best, abs_tol=1e-9), (trial, n)

    def test_lower_bounded_by_entropy(self):
        rng = random.Random(7)
        for _ in range(40):
            d = random_distribution(rng, rng.randrange(1, 14))
            assert expected_depth(huffman_tree(d), d) >= entropy(d) - 1e-9
