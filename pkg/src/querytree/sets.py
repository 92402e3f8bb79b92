"""Outcome sets and families of allowed yes/no queries.

Queries are subsets of the alphabet.  A query family answers two
questions for the solvers: which bipartitions of a candidate set it can
realize, and whether one specific bipartition is realizable.  Outcome
sets are kept as sorted tuples with a cached bitmask so the solvers can
work on plain integers internally.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import AlphabetTooLargeError

DECISION_COMPLETE_GUARD = 24


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits_of(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def span_mask(mask: int) -> int:
    """Contiguous mask from the lowest to the highest set bit."""
    if mask == 0:
        return 0
    hi = mask.bit_length()
    lo = (mask & -mask).bit_length() - 1
    return ((1 << hi) - 1) ^ ((1 << lo) - 1)


class OutcomeSet:
    """Immutable sorted set of outcome indices."""

    __slots__ = ("_members", "_mask")

    def __init__(self, members: Iterable[int]):
        try:
            mask = mask_of(members)
        except ValueError:
            raise ValueError("outcome indices must be nonnegative") from None
        self._members = tuple(bits_of(mask))
        self._mask = mask

    @classmethod
    def from_mask(cls, mask: int) -> "OutcomeSet":
        obj = object.__new__(cls)
        obj._mask = mask
        obj._members = tuple(bits_of(mask))
        return obj

    @property
    def members(self) -> tuple[int, ...]:
        return self._members

    @property
    def mask(self) -> int:
        return self._mask

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self):
        return iter(self._members)

    def __contains__(self, index: int) -> bool:
        return index >= 0 and bool(self._mask >> index & 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, OutcomeSet) and self._mask == other._mask

    def __lt__(self, other: "OutcomeSet") -> bool:
        return self._members < other._members

    def __hash__(self) -> int:
        return hash(self._mask)

    def __repr__(self) -> str:
        return f"OutcomeSet({list(self._members)!r})"

    def is_singleton(self) -> bool:
        return self._mask != 0 and self._mask & (self._mask - 1) == 0

    def intersection(self, other: "OutcomeSet") -> "OutcomeSet":
        return OutcomeSet.from_mask(self._mask & other._mask)

    def difference(self, other: "OutcomeSet") -> "OutcomeSet":
        return OutcomeSet.from_mask(self._mask & ~other._mask)

    def union(self, other: "OutcomeSet") -> "OutcomeSet":
        return OutcomeSet.from_mask(self._mask | other._mask)

    def isdisjoint(self, other: "OutcomeSet") -> bool:
        return self._mask & other._mask == 0


def full_set(n: int) -> OutcomeSet:
    return OutcomeSet.from_mask((1 << n) - 1)


class DecisionSet(ABC):
    """A fixed family of subsets of the alphabet usable as queries.

    Asking a query S at a node with candidate set C splits C into
    (C and S, C minus S).  Asking S is interchangeable with asking its
    complement, so realizability is symmetric in the two sides.
    """

    @abstractmethod
    def split_masks(self, c_mask: int) -> Iterator[tuple[int, int]]:
        """Distinct proper splits of ``c_mask`` realizable by the family.

        Yields each unordered split once as ``(a, b)`` with the side
        containing the lowest candidate first.  Order is deterministic.
        """

    def realizes_mask(self, c_mask: int, part_mask: int) -> bool:
        """Whether some query separates ``part_mask`` from the rest of ``c_mask``."""
        other = c_mask & ~part_mask
        return any(a == part_mask or a == other for a, _ in self.split_masks(c_mask))

    def splits(self, candidates: OutcomeSet) -> list[tuple[OutcomeSet, OutcomeSet]]:
        return [
            (OutcomeSet.from_mask(a), OutcomeSet.from_mask(b))
            for a, b in self.split_masks(candidates.mask)
        ]

    def realizes(self, candidates: OutcomeSet, part: OutcomeSet) -> bool:
        return self.realizes_mask(candidates.mask, part.mask)

    def query_masks(self) -> Sequence[int]:
        """Distinct nontrivial queries as masks, when finitely enumerable."""
        raise NotImplementedError(f"{type(self).__name__} does not enumerate queries")


def _canonical_split(c_mask: int, a_mask: int) -> tuple[int, int]:
    """Orient a split so the side holding the lowest candidate comes first."""
    low = c_mask & -c_mask
    b_mask = c_mask & ~a_mask
    return (a_mask, b_mask) if a_mask & low else (b_mask, a_mask)


class Unconstrained(DecisionSet):
    """Every nonempty proper subset of the alphabet may be asked."""

    def split_masks(self, c_mask: int) -> Iterator[tuple[int, int]]:
        low = c_mask & -c_mask
        rest = c_mask ^ low
        # every submask of `rest` joined with the lowest bit, except all of c
        sub = rest
        while True:
            a = low | sub
            if a != c_mask:
                yield a, c_mask ^ a
            if sub == 0:
                break
            sub = (sub - 1) & rest

    def realizes_mask(self, c_mask: int, part_mask: int) -> bool:
        return 0 < part_mask < c_mask and c_mask & part_mask == part_mask

    def __repr__(self) -> str:
        return "Unconstrained()"


class IntervalSet(DecisionSet):
    """Queries are integer intervals ``[a, b]`` within an n-outcome axis.

    The intersection of an interval with a candidate set is a contiguous
    run of the candidate's sorted members, so the realizable splits are
    exactly the member runs versus their complements.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("alphabet size must be >= 1")
        self.n = n

    def split_masks(self, c_mask: int) -> Iterator[tuple[int, int]]:
        members = tuple(bits_of(c_mask))
        k = len(members)
        seen = set()
        for i in range(k):
            run = 0
            for j in range(i, k):
                run |= 1 << members[j]
                if run == c_mask:
                    continue
                a, b = _canonical_split(c_mask, run)
                if a not in seen:
                    seen.add(a)
                    yield a, b

    def realizes_mask(self, c_mask: int, part_mask: int) -> bool:
        other = c_mask & ~part_mask
        if part_mask == 0 or other == 0 or part_mask & ~c_mask:
            return False
        # an interval isolates a side iff no other-side member falls in its span
        return span_mask(part_mask) & other == 0 or span_mask(other) & part_mask == 0

    def query_masks(self) -> Sequence[int]:
        out = []
        for a in range(self.n):
            m = 0
            for b in range(a, self.n):
                m |= 1 << b
                out.append(m)
        full = (1 << self.n) - 1
        return [m for m in out if m != full]

    def __repr__(self) -> str:
        return f"IntervalSet({self.n})"


class WinePairs(DecisionSet):
    """Mixture-tasting queries when exactly two of ``k`` bottles are bad.

    Outcomes are the k-choose-2 bottle pairs in lexicographic order.
    Tasting a mixture of bottles T answers whether the bad pair meets T,
    for any nonempty proper subset T of the bottles.
    """

    def __init__(self, bottles: int):
        if bottles < 2:
            raise ValueError("need at least two bottles")
        self.bottles = bottles
        self.pairs = tuple(combinations(range(1, bottles + 1), 2))
        self.n = len(self.pairs)
        full = (1 << self.n) - 1
        masks = set()
        for size in range(1, bottles):
            for taste in combinations(range(1, bottles + 1), size):
                chosen = set(taste)
                m = mask_of(i for i, pair in enumerate(self.pairs) if chosen & set(pair))
                if 0 < m < full:
                    masks.add(m)
        self._masks = tuple(sorted(masks))

    def split_masks(self, c_mask: int) -> Iterator[tuple[int, int]]:
        seen = set()
        for m in self._masks:
            a = c_mask & m
            if a == 0 or a == c_mask:
                continue
            a, b = _canonical_split(c_mask, a)
            if a not in seen:
                seen.add(a)
                yield a, b

    def realizes_mask(self, c_mask: int, part_mask: int) -> bool:
        other = c_mask & ~part_mask
        if part_mask == 0 or other == 0 or part_mask & ~c_mask:
            return False
        return any(c_mask & m in (part_mask, other) for m in self._masks)

    def query_masks(self) -> Sequence[int]:
        return self._masks

    def __repr__(self) -> str:
        return f"WinePairs({self.bottles})"


class Explicit(DecisionSet):
    """A decision set given by an explicit list of allowed query sets."""

    def __init__(self, queries: Iterable[OutcomeSet | Iterable[int]], n: int):
        self.n = n
        full = (1 << n) - 1
        masks = set()
        for q in queries:
            m = q.mask if isinstance(q, OutcomeSet) else mask_of(q)
            if m & ~full:
                raise ValueError("query mentions an outcome outside the alphabet")
            if 0 < m < full:
                masks.add(m)
        self._masks = tuple(sorted(masks))

    def split_masks(self, c_mask: int) -> Iterator[tuple[int, int]]:
        seen = set()
        for m in self._masks:
            a = c_mask & m
            if a == 0 or a == c_mask:
                continue
            a, b = _canonical_split(c_mask, a)
            if a not in seen:
                seen.add(a)
                yield a, b

    def realizes_mask(self, c_mask: int, part_mask: int) -> bool:
        other = c_mask & ~part_mask
        if part_mask == 0 or other == 0 or part_mask & ~c_mask:
            return False
        return any(c_mask & m in (part_mask, other) for m in self._masks)

    def query_masks(self) -> Sequence[int]:
        return self._masks

    def __repr__(self) -> str:
        return f"Explicit({len(self._masks)} queries, n={self.n})"


def realizable_bipartitions(ds: DecisionSet, n: int) -> int:
    """Distinct unordered bipartitions of the full alphabet the family realizes."""
    if isinstance(ds, Unconstrained):
        return 2 ** (n - 1) - 1
    full = (1 << n) - 1
    return len({min(m & full, full ^ (m & full)) for m in ds.query_masks() if 0 < m & full < full})


def is_decision_complete(ds: DecisionSet, n: int) -> bool:
    """Whether every bipartition of the alphabet is realizable.

    Exhaustive over all subsets, so guarded to small alphabets.  A family
    that passes makes every tree shape feasible, and the plain Huffman
    tree is then optimal.
    """
    if n < 1:
        raise ValueError("alphabet size must be >= 1")
    if isinstance(ds, Unconstrained):
        return True
    if n > DECISION_COMPLETE_GUARD:
        raise AlphabetTooLargeError(
            f"exhaustive completeness check needs n <= {DECISION_COMPLETE_GUARD}, got {n}"
        )
    full = (1 << n) - 1
    available = {m & full for m in ds.query_masks()}
    # quick necessary condition: enough distinct bipartitions to cover them all
    if realizable_bipartitions(ds, n) < 2 ** (n - 1) - 1:
        return False
    for m in range(1, full):
        comp = full ^ m
        if comp < m:
            continue
        if m not in available and comp not in available:
            return False
    return True
