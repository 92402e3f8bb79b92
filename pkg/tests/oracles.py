"""Independent reference implementations used to freeze expected values.

Everything here works on plain frozensets and explicit enumeration, on
purpose: these oracles share no code or data layout with the package
internals they check.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import chain, combinations


def proper_subsets_containing_first(s: frozenset) -> list[frozenset]:
    """Nonempty proper subsets of s that contain min(s): one per bipartition."""
    anchor = min(s)
    rest = sorted(s - {anchor})
    out = []
    for r in range(len(rest) + 1):
        for combo in combinations(rest, r):
            sub = frozenset({anchor, *combo})
            if sub != s:
                out.append(sub)
    return out


def intervals(lo: int, hi: int) -> list[frozenset]:
    """All integer intervals [a, b] with lo <= a <= b <= hi, as sets."""
    return [
        frozenset(range(a, b + 1)) for a in range(lo, hi + 1) for b in range(a, hi + 1)
    ]


def interval_splits(candidates: frozenset, lo: int, hi: int) -> set[frozenset]:
    """Sides realizable by intersecting candidates with some interval."""
    sides = set()
    for iv in intervals(lo, hi):
        inside = candidates & iv
        if inside and inside != candidates:
            sides.add(inside)
            sides.add(candidates - inside)
    return sides


def min_expected_depth(probs, split_sides):
    """Minimum expected depth over all feasible trees, by direct recursion.

    ``split_sides(candidates)`` must return an iterable of candidate
    subsets usable as one side of a split.  Returns None when no
    feasible tree exists.
    """
    probs = dict(enumerate(probs))

    @lru_cache(maxsize=None)
    def cost(candidates: frozenset):
        if len(candidates) == 1:
            return 0
        best = None
        for side in split_sides(candidates):
            other = candidates - side
            if not side or not other or side == candidates:
                continue
            a = cost(frozenset(side))
            if a is None:
                continue
            b = cost(frozenset(other))
            if b is None:
                continue
            if best is None or a + b < best:
                best = a + b
        if best is None:
            return None
        return sum(probs[i] for i in candidates) + best

    return cost(frozenset(probs))


def min_depth_unconstrained(probs):
    return min_expected_depth(probs, proper_subsets_containing_first)


def min_depth_intervals(probs):
    n = len(probs)
    return min_expected_depth(
        probs, lambda c: interval_splits(c, 0, n - 1)
    )


def mergeable_by_interval(a: frozenset, b: frozenset, lo: int, hi: int) -> bool:
    """Whether some interval C has (A ∪ B) minus C equal to A or B."""
    union = a | b
    return any(union - c in (a, b) for c in intervals(lo, hi))


def best_interval_partition(members, masses_by_index, lo: int, hi: int):
    """Brute force over every interval; key = (imbalance, width, start).

    Returns (best key, inside frozenset).
    """
    candidates = frozenset(members)
    total = sum(masses_by_index[i] for i in candidates)
    best = None
    for a in range(lo, hi + 1):
        for b in range(a, hi + 1):
            inside = candidates & frozenset(range(a, b + 1))
            if not inside or inside == candidates:
                continue
            mass = sum(masses_by_index[i] for i in inside)
            key = (abs(total - 2 * mass), b - a + 1, a)
            if best is None or key < best[0]:
                best = (key, inside)
    return best


def powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def exact(*nums_dens) -> list[Fraction]:
    """Shorthand: exact([.. (num, den) pairs ..])."""
    return [Fraction(n, d) for n, d in nums_dens]
