"""Probability distributions over a finite alphabet of outcome indices.

A distribution is an ordered vector of strictly positive probabilities,
one per outcome index ``0..n-1``, summing to one.  Two numeric modes are
supported: exact (every entry a ``fractions.Fraction``, sum checked
exactly) and float (64-bit, sum checked to an absolute tolerance).
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence, Union

Probability = Union[Fraction, float]

SUM_TOLERANCE = 1e-9


class Distribution:
    """Immutable probability vector indexed by outcome.

    Entries must be strictly positive; zero-probability outcomes are
    rejected because they would never be reachable in a decision tree.
    """

    __slots__ = ("_probs",)

    def __init__(self, probs: Iterable[Probability]):
        entries = tuple(probs)
        if not entries:
            raise ValueError("distribution needs at least one outcome")
        exact = all(isinstance(p, (Fraction, int)) for p in entries)
        if exact:
            entries = tuple(Fraction(p) for p in entries)
        else:
            entries = tuple(float(p) for p in entries)
        for i, p in enumerate(entries):
            if p <= 0:
                raise ValueError(f"probability at index {i} is {p}; must be > 0")
        total = sum(entries)
        if exact:
            if total != 1:
                raise ValueError(f"probabilities sum to {total}, expected exactly 1")
        elif abs(total - 1.0) > SUM_TOLERANCE:
            raise ValueError(f"probabilities sum to {total!r}, expected 1 within {SUM_TOLERANCE}")
        self._probs = entries

    @property
    def probs(self) -> tuple[Probability, ...]:
        return self._probs

    @property
    def is_exact(self) -> bool:
        """True when every entry is a Fraction and arithmetic stays exact."""
        return bool(self._probs) and isinstance(self._probs[0], Fraction)

    def __len__(self) -> int:
        return len(self._probs)

    def __getitem__(self, index: int) -> Probability:
        return self._probs[index]

    def __iter__(self):
        return iter(self._probs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Distribution) and self._probs == other._probs

    def __hash__(self) -> int:
        return hash(self._probs)

    def __repr__(self) -> str:
        return f"Distribution({list(self._probs)!r})"

    def mass(self, outcomes: Iterable[int]) -> Probability:
        """Total probability of a collection of outcome indices."""
        return sum(self._probs[i] for i in outcomes)

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(p) for p in self._probs)

    @classmethod
    def uniform(cls, n: int) -> "Distribution":
        return cls([Fraction(1, n)] * n)


def parse_probability(token: str) -> Fraction:
    """Parse one probability token, either a decimal or an ``a/b`` rational.

    Decimals are converted exactly (``0.1`` becomes ``1/10``), so files
    written with decimal entries still get exact arithmetic.
    """
    token = token.strip()
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse probability {token!r}: {exc}") from None


def load_distribution(path: Union[str, Path]) -> Distribution:
    """Read a distribution file: one probability per line, ``#`` comments."""
    entries = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                entries.append(parse_probability(stripped))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
    return Distribution(entries)


def normalized(weights: Sequence[float]) -> Distribution:
    """Build a float-mode distribution proportional to the given weights."""
    total = float(sum(weights))
    if total <= 0:
        raise ValueError("weights must have a positive sum")
    return Distribution([w / total for w in weights])
