"""Tree-construction algorithms under a constrained query family.

Three strategies:

* ``brute_force_optimal``: exact minimum expected depth by memoized
  search over candidate subsets.  Exponential; guarded by alphabet size.
* ``greedy_huffman``: bottom-up pairwise merging in ascending order of
  probability sums, with backtracking when a merge order dead-ends.
* ``gbsc``: top-down, at each node picking the realizable split whose
  two sides are closest in probability mass.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .distribution import Distribution, Probability
from .errors import (
    AlphabetTooLargeError,
    MergeBudgetExceededError,
    NoFeasibleMergeError,
    PartitionStuckError,
    UnsolvableError,
)
from .sets import DecisionSet, OutcomeSet, Unconstrained, bits_of
from .tree import DecisionTree, Internal, Leaf, Node, expected_depth

BRUTE_FORCE_GUARD = 20
PARTITION_GUARD = 24
DEFAULT_MERGE_BUDGET = 10_000_000


@dataclass
class SolveStats:
    nodes_explored: int = 0
    wall_time: float = 0.0
    backtracks: int = 0

    def to_dict(self) -> dict:
        return {
            "nodes_explored": self.nodes_explored,
            "wall_time": self.wall_time,
            "backtracks": self.backtracks,
        }


@dataclass
class SolveResult:
    tree: DecisionTree
    expected_len: Probability
    stats: SolveStats = field(default_factory=SolveStats)

    def to_dict(self) -> dict:
        return {
            "expected_len": float(self.expected_len),
            "stats": self.stats.to_dict(),
            "tree": self.tree.to_dict(),
        }


def _index_masses(dist: Distribution) -> list[Probability]:
    return list(dist.probs)


def brute_force_optimal(
    dist: Distribution, ds: DecisionSet, max_n: int = BRUTE_FORCE_GUARD
) -> SolveResult:
    """Exact optimum over all feasible trees.

    Cost recurrence over candidate masks: cost(C) = p(C) + min over
    realizable splits (A, B) of cost(A) + cost(B), with singletons free.
    Raises ``UnsolvableError`` when no feasible tree exists.
    """
    n = len(dist)
    if n > max_n:
        raise AlphabetTooLargeError(f"brute force is guarded to n <= {max_n}, got {n}")
    start = time.perf_counter()
    masses = _index_masses(dist)
    full = (1 << n) - 1

    # memo: mask -> (cost, best split left mask); infeasible stored as (None, None)
    memo: dict[int, tuple[Optional[Probability], Optional[int]]] = {}

    def mass_of(mask: int) -> Probability:
        return sum(masses[i] for i in bits_of(mask))

    def solve(c_mask: int) -> Optional[Probability]:
        if c_mask & (c_mask - 1) == 0:
            return 0
        hit = memo.get(c_mask)
        if hit is not None:
            return hit[0]
        best: Optional[Probability] = None
        best_a: Optional[int] = None
        for a, b in ds.split_masks(c_mask):
            ca = solve(a)
            if ca is None:
                continue
            cb = solve(b)
            if cb is None:
                continue
            total = ca + cb
            if best is None or total < best:
                best, best_a = total, a
        if best is None:
            memo[c_mask] = (None, None)
            return None
        cost = mass_of(c_mask) + best
        memo[c_mask] = (cost, best_a)
        return cost

    optimum = solve(full)
    if optimum is None:
        raise UnsolvableError(
            "some reachable candidate set admits no realizable split"
        )

    def build(c_mask: int) -> Node:
        if c_mask & (c_mask - 1) == 0:
            return Leaf(c_mask.bit_length() - 1)
        a = memo[c_mask][1]
        assert a is not None
        return Internal(OutcomeSet.from_mask(a), build(a), build(c_mask & ~a))

    tree = DecisionTree(build(full), n)
    stats = SolveStats(nodes_explored=len(memo), wall_time=time.perf_counter() - start)
    return SolveResult(tree=tree, expected_len=optimum, stats=stats)


MergeOracle = Callable[[OutcomeSet, OutcomeSet], bool]


def greedy_huffman(
    dist: Distribution,
    ds: DecisionSet,
    merge_oracle: Optional[MergeOracle] = None,
    budget: int = DEFAULT_MERGE_BUDGET,
) -> SolveResult:
    """Bottom-up greedy merging with backtracking.

    At each level all node pairs are tried in ascending order of combined
    probability (ties by the lowest outcome contained in each node); a
    pair merges only if some query separates the two candidate sets
    within their union.  The first complete tree found is returned.

    Raises ``NoFeasibleMergeError`` when the search space is exhausted
    and ``MergeBudgetExceededError`` when ``budget`` merge attempts were
    spent first.
    """
    n = len(dist)
    start = time.perf_counter()

    if merge_oracle is None:
        def merge_oracle(a: OutcomeSet, b: OutcomeSet) -> bool:
            return ds.realizes_mask(a.mask | b.mask, a.mask)

    stats = SolveStats()

    @dataclass
    class _MergeNode:
        mass: Probability
        min_outcome: int
        candidates: OutcomeSet
        node: Node

    def merge(a: _MergeNode, b: _MergeNode) -> _MergeNode:
        if (b.mass, b.min_outcome) < (a.mass, a.min_outcome):
            a, b = b, a
        union = a.candidates.union(b.candidates)
        return _MergeNode(
            mass=a.mass + b.mass,
            min_outcome=min(a.min_outcome, b.min_outcome),
            candidates=union,
            node=Internal(a.candidates, a.node, b.node),
        )

    def search(nodes: list[_MergeNode]) -> Optional[_MergeNode]:
        if len(nodes) == 1:
            return nodes[0]
        order = sorted(
            (
                (x.mass + y.mass, min(x.min_outcome, y.min_outcome),
                 max(x.min_outcome, y.min_outcome), i, j)
                for i, x in enumerate(nodes)
                for j in range(i + 1, len(nodes))
                for y in (nodes[j],)
            ),
        )
        for _, _, _, i, j in order:
            a, b = nodes[i], nodes[j]
            if not merge_oracle(a.candidates, b.candidates):
                continue
            if stats.nodes_explored >= budget:
                raise MergeBudgetExceededError(
                    f"merge search hit its budget of {budget} attempts",
                    attempts=stats.nodes_explored,
                )
            stats.nodes_explored += 1
            rest = [x for k, x in enumerate(nodes) if k != i and k != j]
            rest.append(merge(a, b))
            found = search(rest)
            if found is not None:
                return found
            stats.backtracks += 1
        return None

    leaves = [
        _MergeNode(dist[i], i, OutcomeSet.from_mask(1 << i), Leaf(i)) for i in range(n)
    ]
    result = search(leaves)
    if result is None:
        raise NoFeasibleMergeError("no merge order yields a feasible tree")
    tree = DecisionTree(result.node, n)
    stats.wall_time = time.perf_counter() - start
    return SolveResult(tree=tree, expected_len=expected_depth(tree, dist), stats=stats)


def _balanced_partition_unconstrained(c_mask: int, masses: list[Probability]) -> int:
    """Branch and bound for the most probability-balanced bipartition.

    Returns the mask of the side containing the lowest member.  Items are
    placed in descending mass order; a branch is cut when no completion
    can strictly beat the incumbent imbalance.  Exact; ties go to the
    first split found under (heaviest-first, take-first) order.
    """
    members = tuple(bits_of(c_mask))
    if len(members) > PARTITION_GUARD:
        raise AlphabetTooLargeError(
            f"balanced partition is guarded to {PARTITION_GUARD} outcomes"
        )
    order = sorted(members, key=lambda i: (-masses[i], i))
    total = sum(masses[i] for i in members)
    remaining = [total - sum(masses[i] for i in order[:k]) for k in range(len(order) + 1)]

    best_diff: Optional[Probability] = None
    best_mask = 0

    def place(k: int, sum_a: Probability, mask_a: int) -> None:
        nonlocal best_diff, best_mask
        if best_diff is not None and best_diff == 0:
            return
        if k == len(order):
            if mask_a == 0 or mask_a == c_mask:
                return
            diff = abs(total - 2 * sum_a)
            if best_diff is None or diff < best_diff:
                best_diff, best_mask = diff, mask_a
            return
        if best_diff is not None:
            # min achievable |2*final_sum_a - total| from this prefix
            gap = 2 * sum_a - total
            reach = gap + 2 * remaining[k]
            floor = gap if gap >= 0 else (-reach if reach <= 0 else 0)
            if floor >= best_diff:
                return
        i = order[k]
        place(k + 1, sum_a + masses[i], mask_a | (1 << i))
        place(k + 1, sum_a, mask_a)

    first = order[0]
    place(1, masses[first], 1 << first)
    low = c_mask & -c_mask
    return best_mask if best_mask & low else c_mask ^ best_mask


def optimal_partition(
    candidates: OutcomeSet, dist: Distribution, ds: DecisionSet
) -> tuple[OutcomeSet, OutcomeSet]:
    """Most probability-balanced realizable split of a candidate set.

    The side containing the lowest candidate is returned first.  Ties go
    to the first split found in the family's deterministic enumeration
    order.  Raises ``PartitionStuckError`` when nothing splits.
    """
    if len(candidates) < 2:
        raise ValueError("need at least two candidates to partition")
    masses = _index_masses(dist)
    if isinstance(ds, Unconstrained):
        a_mask = _balanced_partition_unconstrained(candidates.mask, masses)
        b_mask = candidates.mask & ~a_mask
        return OutcomeSet.from_mask(a_mask), OutcomeSet.from_mask(b_mask)

    best_key: Optional[Probability] = None
    best: Optional[tuple[int, int]] = None
    for a, b in ds.split_masks(candidates.mask):
        diff = sum(masses[i] for i in bits_of(a)) - sum(masses[i] for i in bits_of(b))
        key = -diff if diff < 0 else diff
        if best_key is None or key < best_key:
            best_key, best = key, (a, b)
            if key == 0:
                break
    if best is None:
        raise PartitionStuckError(
            f"no query splits candidates {list(candidates)}"
        )
    return OutcomeSet.from_mask(best[0]), OutcomeSet.from_mask(best[1])


PartitionFn = Callable[[OutcomeSet, Distribution], tuple[OutcomeSet, OutcomeSet]]


def gbsc(
    dist: Distribution,
    ds: DecisionSet,
    partition: Optional[PartitionFn] = None,
) -> SolveResult:
    """Top-down construction by recursive balanced splitting.

    Every split comes from the query family, so the resulting tree is
    feasible by construction.  Propagates ``PartitionStuckError`` when a
    candidate set cannot be split.
    """
    n = len(dist)
    start = time.perf_counter()
    stats = SolveStats()

    if partition is None:
        def partition(c: OutcomeSet, d: Distribution) -> tuple[OutcomeSet, OutcomeSet]:
            return optimal_partition(c, d, ds)

    def build(c: OutcomeSet) -> Node:
        if c.is_singleton():
            return Leaf(c.members[0])
        stats.nodes_explored += 1
        left, right = partition(c, dist)
        return Internal(left, build(left), build(right))

    root_candidates = OutcomeSet.from_mask((1 << n) - 1)
    tree = DecisionTree(build(root_candidates), n)
    stats.wall_time = time.perf_counter() - start
    return SolveResult(tree=tree, expected_len=expected_depth(tree, dist), stats=stats)
