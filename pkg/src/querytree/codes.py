"""Entropy and the two baseline codes: Huffman and Shannon.

Huffman gives the optimal tree when queries are unconstrained; the
Shannon per-symbol length ``ceil(-log2 p)`` is the classical upper
bound the balanced-split construction is measured against.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction

from .distribution import Distribution, Probability
from .sets import OutcomeSet
from .tree import DecisionTree, Internal, Leaf, Node


def entropy(dist: Distribution) -> float:
    """Shannon entropy in bits, always a float."""
    # + 0.0 normalizes the -0.0 of deterministic distributions
    return -sum(float(p) * math.log2(float(p)) for p in dist) + 0.0


def shannon_symbol_length(p: Probability) -> int:
    """Smallest integer L with p >= 2**-L, i.e. ceil(-log2 p)."""
    if isinstance(p, Fraction):
        if not 0 < p <= 1:
            raise ValueError(f"probability {p} outside (0, 1]")
        length = 0
        scaled = p
        while scaled < 1:
            scaled *= 2
            length += 1
        return length
    if not 0.0 < p <= 1.0:
        raise ValueError(f"probability {p} outside (0, 1]")
    return math.ceil(-math.log2(p))


def shannon_length(dist: Distribution) -> Probability:
    """Expected Shannon code length, sum of p * ceil(-log2 p)."""
    return sum(p * shannon_symbol_length(p) for p in dist)


def huffman_tree(dist: Distribution) -> DecisionTree:
    """The classical bottom-up merge, returned as a decision tree.

    Deterministic: the two nodes with the smallest (mass, lowest
    contained outcome) keys merge first, and the smaller key becomes the
    left child.
    """
    n = len(dist)
    heap: list[tuple[Probability, int, int, Node]] = [
        (dist[i], i, 1 << i, Leaf(i)) for i in range(n)
    ]
    heapq.heapify(heap)
    while len(heap) > 1:
        mass_a, min_a, mask_a, node_a = heapq.heappop(heap)
        mass_b, min_b, mask_b, node_b = heapq.heappop(heap)
        merged = Internal(OutcomeSet.from_mask(mask_a), node_a, node_b)
        heapq.heappush(
            heap, (mass_a + mass_b, min(min_a, min_b), mask_a | mask_b, merged)
        )
    return DecisionTree(heap[0][3], n)
