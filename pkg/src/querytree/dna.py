"""Locating a single target segment on a sequence with interval probes.

The target position is one of ``n`` sites; each probe asks whether the
position lies in a chosen interval.  This specializes the generic
solvers: mergeability has a constant-time test, and the balanced split
at a node needs only a scan over prefix sums of the node's members
instead of enumerating every interval.
"""

from __future__ import annotations

import random
import time
from bisect import bisect_left
from dataclasses import dataclass
from typing import Optional, Sequence

from .distribution import Distribution, Probability
from .errors import MergeBudgetExceededError, NoFeasibleMergeError
from .sets import IntervalSet, OutcomeSet, span_mask
from .solvers import (
    DEFAULT_MERGE_BUDGET,
    SolveResult,
    brute_force_optimal,
    gbsc,
    greedy_huffman,
)


@dataclass(frozen=True)
class IntervalQuery:
    """A probe over 1-based positions ``lo..hi`` inclusive."""

    lo: int
    hi: int

    def __post_init__(self):
        if not 1 <= self.lo <= self.hi:
            raise ValueError(f"bad interval [{self.lo}, {self.hi}]")

    def covers(self, position: int) -> bool:
        return self.lo <= position <= self.hi

    def outcome_set(self) -> OutcomeSet:
        """Member outcome indices (0-based) of this interval."""
        return OutcomeSet(range(self.lo - 1, self.hi))


def tight_interval(s: OutcomeSet) -> IntervalQuery:
    """Shortest interval covering an outcome set, in 1-based positions."""
    if len(s) == 0:
        raise ValueError("empty set has no covering interval")
    return IntervalQuery(s.members[0] + 1, s.members[-1] + 1)


def can_merge(a: OutcomeSet, b: OutcomeSet) -> bool:
    """Whether two candidate sets may share a parent under interval probes.

    True iff some interval isolates one side within the union, i.e. one
    side's covering range contains no member of the other side.  Runs in
    constant time on the cached masks.
    """
    if a.mask & b.mask:
        raise ValueError("candidate sets overlap")
    if len(a) == 0 or len(b) == 0:
        raise ValueError("candidate sets must be nonempty")
    return span_mask(a.mask) & b.mask == 0 or span_mask(b.mask) & a.mask == 0


def interval_partition(
    candidates: OutcomeSet, dist: Distribution
) -> tuple[OutcomeSet, OutcomeSet]:
    """Most balanced split of a candidate set induced by any interval.

    Any interval cuts a contiguous run out of the sorted members, so the
    search walks runs via prefix sums: for each left endpoint the best
    right endpoint is found by bisecting for half the total mass.  Ties
    prefer the shorter covering interval, then the smaller start.
    Returns ``(inside, outside)`` relative to the chosen interval.
    """
    members = candidates.members
    k = len(members)
    if k < 2:
        raise ValueError("need at least two candidates to partition")
    prefix: list[Probability] = [0] * (k + 1)
    for t, idx in enumerate(members):
        prefix[t + 1] = prefix[t] + dist[idx]
    total = prefix[k]

    best = None  # (imbalance, covering length, covering lo, i, j)
    for i in range(k):
        # run mass grows with j, so only the runs bracketing the
        # half-total crossing can minimize the imbalance for this i
        target = prefix[i] + total / 2
        cut = bisect_left(prefix, target, lo=i + 1, hi=k + 1)
        for j1 in (cut - 1, cut):
            j = j1 - 1
            if j < i or j >= k:
                continue
            if i == 0 and j == k - 1:
                continue
            run_mass = prefix[j + 1] - prefix[i]
            diff = total - 2 * run_mass
            if diff < 0:
                diff = -diff
            length = members[j] - members[i] + 1
            key = (diff, length, members[i])
            if best is None or key < best[:3]:
                best = (*key, i, j)

    assert best is not None
    i, j = best[3], best[4]
    inside = OutcomeSet(members[i : j + 1])
    outside = candidates.difference(inside)
    return inside, outside


def dna_greedy_huffman(
    dist: Distribution, budget: int = DEFAULT_MERGE_BUDGET
) -> SolveResult:
    """Bottom-up greedy merge specialized with the interval merge test."""
    ds = IntervalSet(len(dist))
    return greedy_huffman(dist, ds, merge_oracle=can_merge, budget=budget)


def dna_gbsc(dist: Distribution) -> SolveResult:
    """Top-down balanced splitting specialized to interval probes."""
    ds = IntervalSet(len(dist))
    return gbsc(dist, ds, partition=interval_partition)


def random_distribution(n: int, seed: int) -> Distribution:
    """IID uniform weights, normalized.  Seeded per instance."""
    rng = random.Random(seed)
    weights = [rng.random() for _ in range(n)]
    total = sum(weights)
    return Distribution([w / total for w in weights])


@dataclass
class CompareRow:
    instance_id: int
    n: int
    length_brute: Optional[float]
    length_greedy: Optional[float]
    length_gbsc: float
    gap: Optional[float]
    time_greedy_ns: int
    time_gbsc_ns: int


@dataclass
class CompareSummary:
    instances: int
    zero_gap_fraction: float
    median_gap: float
    max_gap: float
    mean_time_greedy_ns: float
    mean_time_gbsc_ns: float


def instance_seed(master_seed: int, instance_id: int) -> int:
    return master_seed ^ instance_id


def compare_instance(
    n: int,
    seed: int,
    instance_id: int = 0,
    include_brute: bool = True,
    merge_budget: int = DEFAULT_MERGE_BUDGET,
) -> CompareRow:
    """Run both greedy solvers (and optionally brute force) on one instance."""
    dist = random_distribution(n, seed)
    ds = IntervalSet(n)

    t0 = time.perf_counter_ns()
    greedy = dna_greedy_huffman(dist, budget=merge_budget)
    t_greedy = time.perf_counter_ns() - t0

    t0 = time.perf_counter_ns()
    balanced = dna_gbsc(dist)
    t_gbsc = time.perf_counter_ns() - t0

    length_brute = None
    gap = None
    if include_brute:
        brute = brute_force_optimal(dist, ds)
        length_brute = float(brute.expected_len)
        gap = (float(greedy.expected_len) - length_brute) / length_brute
    return CompareRow(
        instance_id=instance_id,
        n=n,
        length_brute=length_brute,
        length_greedy=float(greedy.expected_len),
        length_gbsc=float(balanced.expected_len),
        gap=gap,
        time_greedy_ns=t_greedy,
        time_gbsc_ns=t_gbsc,
    )


def compare_experiment(
    n: int,
    instances: int,
    master_seed: int,
    include_brute: Optional[bool] = None,
    merge_budget: int = DEFAULT_MERGE_BUDGET,
) -> tuple[list[CompareRow], CompareSummary]:
    """Greedy-versus-optimal sweep over seeded random instances."""
    if include_brute is None:
        include_brute = n <= 20
    rows = [
        compare_instance(
            n,
            instance_seed(master_seed, i),
            instance_id=i,
            include_brute=include_brute,
            merge_budget=merge_budget,
        )
        for i in range(instances)
    ]
    gaps = sorted(r.gap for r in rows if r.gap is not None)
    if gaps:
        zero = sum(1 for g in gaps if g < 1e-9) / len(gaps)
        median = gaps[len(gaps) // 2]
        worst = gaps[-1]
    else:
        zero, median, worst = 0.0, 0.0, 0.0
    summary = CompareSummary(
        instances=instances,
        zero_gap_fraction=zero,
        median_gap=median,
        max_gap=worst,
        mean_time_greedy_ns=sum(r.time_greedy_ns for r in rows) / len(rows),
        mean_time_gbsc_ns=sum(r.time_gbsc_ns for r in rows) / len(rows),
    )
    return rows, summary


@dataclass
class RuntimePoint:
    n: int
    mean_time_greedy_ns: float
    mean_time_gbsc_ns: float


def runtime_sweep(
    lengths: Sequence[int],
    seeds_per_length: int,
    master_seed: int,
    merge_budget: int = 200_000,
) -> list[RuntimePoint]:
    """Mean solver runtimes across sequence lengths, for growth-shape plots.

    The merge budget is kept modest here: rare pathological instances
    otherwise dominate wall time without changing the growth picture.
    """
    points = []
    for n in lengths:
        greedy_total = 0
        gbsc_total = 0
        for i in range(seeds_per_length):
            seed = instance_seed(master_seed, n * 1_000_003 + i)
            dist = random_distribution(n, seed)
            t0 = time.perf_counter_ns()
            try:
                dna_greedy_huffman(dist, budget=merge_budget)
            except (MergeBudgetExceededError, NoFeasibleMergeError):
                pass  # capped instances still contribute their elapsed time
            greedy_total += time.perf_counter_ns() - t0
            t0 = time.perf_counter_ns()
            dna_gbsc(dist)
            gbsc_total += time.perf_counter_ns() - t0
        points.append(
            RuntimePoint(
                n=n,
                mean_time_greedy_ns=greedy_total / seeds_per_length,
                mean_time_gbsc_ns=gbsc_total / seeds_per_length,
            )
        )
    return points
