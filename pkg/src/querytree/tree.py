"""Binary decision trees over an outcome alphabet.

Internal nodes carry the query set asked at that point; the left child
covers candidates inside the query, the right child the rest.  Leaves
pin down a single outcome.  Candidate sets are derived from the root
downward at construction and cached on the nodes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .distribution import Distribution, Probability
from .sets import DecisionSet, OutcomeSet, full_set


class Leaf:
    __slots__ = ("outcome", "candidates")

    def __init__(self, outcome: int):
        self.outcome = outcome
        self.candidates: Optional[OutcomeSet] = None

    def __repr__(self) -> str:
        return f"Leaf({self.outcome})"


class Internal:
    __slots__ = ("query", "left", "right", "candidates")

    def __init__(self, query: OutcomeSet, left: "Node", right: "Node"):
        self.query = query
        self.left = left
        self.right = right
        self.candidates: Optional[OutcomeSet] = None

    def __repr__(self) -> str:
        return f"Internal(query={list(self.query)})"


Node = Union[Leaf, Internal]


class DecisionTree:
    """A validated decision tree over alphabet ``0..n-1``.

    Construction walks the tree once, assigns each node its candidate
    set, and rejects structurally broken trees: empty branches,
    non-singleton leaves, or leaves that do not partition the root
    candidates.
    """

    def __init__(self, root: Node, alphabet_size: int):
        if alphabet_size < 1:
            raise ValueError("alphabet size must be >= 1")
        self.root = root
        self.alphabet_size = alphabet_size
        self._assign_candidates(root, full_set(alphabet_size))

    def _assign_candidates(self, node: Node, candidates: OutcomeSet) -> None:
        if len(candidates) == 0:
            raise ValueError("a tree branch has an empty candidate set")
        node.candidates = candidates
        if isinstance(node, Leaf):
            if not candidates.is_singleton() or node.outcome not in candidates:
                raise ValueError(
                    f"leaf for outcome {node.outcome} has candidates {list(candidates)}"
                )
            return
        left_c = candidates.intersection(node.query)
        right_c = candidates.difference(node.query)
        if len(left_c) == 0 or len(right_c) == 0:
            raise ValueError(
                f"query {list(node.query)} does not properly split {list(candidates)}"
            )
        self._assign_candidates(node.left, left_c)
        self._assign_candidates(node.right, right_c)

    def leaves(self) -> Iterator[tuple[int, int]]:
        """Yield (outcome, depth) pairs in left-to-right order."""
        stack = [(self.root, 0)]
        while stack:
            node, depth = stack.pop()
            if isinstance(node, Leaf):
                yield node.outcome, depth
            else:
                stack.append((node.right, depth + 1))
                stack.append((node.left, depth + 1))

    def internal_nodes(self) -> Iterator[tuple[str, Internal]]:
        """Yield (path, node) with paths like '' (root), '0', '01', ..."""
        stack = [("", self.root)]
        while stack:
            path, node = stack.pop()
            if isinstance(node, Internal):
                yield path, node
                stack.append((path + "1", node.right))
                stack.append((path + "0", node.left))

    def depth_of(self) -> dict[int, int]:
        return dict(self.leaves())

    def to_dict(self) -> dict:
        def encode(node: Node) -> dict:
            if isinstance(node, Leaf):
                return {"outcome": node.outcome}
            return {
                "query": list(node.query),
                "left": encode(node.left),
                "right": encode(node.right),
            }

        return encode(self.root)

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict, alphabet_size: int) -> "DecisionTree":
        def decode(obj: dict) -> Node:
            if "outcome" in obj:
                return Leaf(int(obj["outcome"]))
            return Internal(
                OutcomeSet(obj["query"]), decode(obj["left"]), decode(obj["right"])
            )

        return cls(decode(data), alphabet_size)

    @classmethod
    def from_json(cls, text: str, alphabet_size: int) -> "DecisionTree":
        return cls.from_dict(json.loads(text), alphabet_size)


def expected_depth(tree: DecisionTree, dist: Distribution) -> Probability:
    """Average number of queries: sum of p(outcome) * leaf depth.

    Exact when the distribution is exact.
    """
    if tree.alphabet_size != len(dist):
        raise ValueError(
            f"tree alphabet size {tree.alphabet_size} != distribution size {len(dist)}"
        )
    return sum(dist[outcome] * depth for outcome, depth in tree.leaves())


@dataclass(frozen=True)
class Violation:
    """One internal node whose split no query can realize."""

    path: str
    candidates: OutcomeSet
    left: OutcomeSet
    right: OutcomeSet

    def describe(self) -> str:
        where = "root" if self.path == "" else f"path {self.path}"
        return (
            f"{where}: no query separates {list(self.left)} from "
            f"{list(self.right)} within {list(self.candidates)}"
        )


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    def describe(self) -> str:
        if self.feasible:
            return "feasible"
        return "infeasible: " + "; ".join(v.describe() for v in self.violations)


def validate_tree(tree: DecisionTree, ds: DecisionSet) -> FeasibilityReport:
    """Check every internal node's split against the query family.

    Realizability is per node: any allowed query may be asked anywhere,
    and asking a query is interchangeable with asking its complement.
    Infeasibility is reported, not raised.
    """
    violations = []
    for path, node in tree.internal_nodes():
        left_c = node.left.candidates
        if not ds.realizes(node.candidates, left_c):
            violations.append(
                Violation(path, node.candidates, left_c, node.right.candidates)
            )
    violations.sort(key=lambda v: (len(v.path), v.path))
    return FeasibilityReport(feasible=not violations, violations=tuple(violations))
