"""1-player Battleship solved by balanced-split querying.

The hypothesis space is every way to place the configured ships on the
board, kept as occupancy bitmasks.  Each turn the solver bombs the cell
whose hit probability is closest to one half, then discards every
hypothesis disagreeing with the answer, until a single occupancy
pattern remains.

Two placements can produce the same occupancy pattern (for example a
length-3 and a length-4 ship lined up end to end); such hypotheses can
never be told apart, so the game ends when the survivors all share one
pattern.  Both the placement count and the distinct-pattern count are
exposed.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_left
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import QueryTreeError


class NoInformativeCellError(QueryTreeError):
    """Every remaining hypothesis agrees on every cell."""


@dataclass(frozen=True)
class BoardConfig:
    rows: int = 10
    cols: int = 10
    ships: tuple[int, ...] = (5, 4, 3)

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1 or self.rows * self.cols > 100:
            raise ValueError("board must be between 1x1 and 100 cells")
        if not self.ships:
            raise ValueError("need at least one ship")
        for length in self.ships:
            if length < 1 or (length > self.rows and length > self.cols):
                raise ValueError(f"ship of length {length} does not fit")

    @property
    def cells(self) -> int:
        return self.rows * self.cols

    def cell_index(self, row: int, col: int) -> int:
        return row * self.cols + col


@dataclass(frozen=True)
class Board:
    """One occupancy pattern, row-major bit ``r * cols + c``."""

    mask: int
    config: BoardConfig

    def occupied(self, row: int, col: int) -> bool:
        return bool(self.mask >> self.config.cell_index(row, col) & 1)

    def popcount(self) -> int:
        return self.mask.bit_count()

    def to_grid(self) -> list[list[int]]:
        return [
            [int(self.occupied(r, c)) for c in range(self.config.cols)]
            for r in range(self.config.rows)
        ]


def ship_placements(config: BoardConfig, length: int) -> list[int]:
    """All masks for one ship, horizontal then vertical."""
    rows, cols = config.rows, config.cols
    out = []
    base = (1 << length) - 1
    for r in range(rows):
        for c in range(cols - length + 1):
            out.append(base << (r * cols + c))
    if length > 1:  # a 1-cell ship has identical orientations
        for c in range(cols):
            for r in range(rows - length + 1):
                m = 0
                for i in range(length):
                    m |= 1 << ((r + i) * cols + c)
                out.append(m)
    return out


class BoardSet:
    """Hypothesis collection: placement tuples plus distinct patterns.

    ``masks`` holds one entry per non-overlapping placement tuple in
    deterministic enumeration order; ``unique_masks`` is the sorted
    deduplication by occupancy.  Per-cell membership bitmaps (one big
    integer per cell, bit k = placement k occupies the cell) are built
    lazily for fast filtering and counting.
    """

    def __init__(self, config: BoardConfig, masks: Sequence[int]):
        if not masks:
            raise ValueError("empty hypothesis set")
        self.config = config
        self.masks = list(masks)
        self.unique_masks = sorted(set(self.masks))
        self._cell_maps: Optional[list[int]] = None

    @property
    def raw_count(self) -> int:
        return len(self.masks)

    @property
    def unique_count(self) -> int:
        return len(self.unique_masks)

    def __len__(self) -> int:
        return len(self.masks)

    def board(self, index: int) -> Board:
        return Board(self.masks[index], self.config)

    def contains_pattern(self, mask: int) -> bool:
        i = bisect_left(self.unique_masks, mask)
        return i < len(self.unique_masks) and self.unique_masks[i] == mask

    def cell_maps(self) -> list[int]:
        """Per-cell hypothesis-membership bitmaps, built on first use."""
        if self._cell_maps is None:
            n = len(self.masks)
            ncells = self.config.cells
            bufs = [bytearray((n + 7) // 8) for _ in range(ncells)]
            for k, m in enumerate(self.masks):
                byte, bit = k >> 3, 1 << (k & 7)
                while m:
                    low = m & -m
                    bufs[low.bit_length() - 1][byte] |= bit
                    m ^= low
            self._cell_maps = [int.from_bytes(b, "little") for b in bufs]
        return self._cell_maps

    @property
    def all_alive(self) -> int:
        return (1 << len(self.masks)) - 1


def enumerate_boards(config: BoardConfig = BoardConfig()) -> BoardSet:
    """Every non-overlapping placement of the configured ships.

    Ships are placed in the configured order; two placement tuples that
    cover the same cells stay separate entries (see ``BoardSet``).
    """
    per_ship = [ship_placements(config, length) for length in config.ships]
    masks: list[int] = []

    def extend(i: int, occupied: int) -> None:
        if i == len(per_ship):
            masks.append(occupied)
            return
        for m in per_ship[i]:
            if occupied & m == 0:
                extend(i + 1, occupied | m)

    extend(0, 0)
    return BoardSet(config, masks)


def hit_counts(boards: BoardSet, alive: int) -> list[int]:
    """Surviving-hypothesis count per cell, row-major."""
    maps = boards.cell_maps()
    return [(alive & cm).bit_count() for cm in maps]


def hit_probability(boards: BoardSet, alive: Optional[int] = None) -> np.ndarray:
    """Fraction of surviving hypotheses occupying each cell."""
    if alive is None:
        alive = boards.all_alive
    total = alive.bit_count()
    if total == 0:
        raise ValueError("no surviving hypotheses")
    counts = hit_counts(boards, alive)
    grid = np.array(counts, dtype=float).reshape(boards.config.rows, boards.config.cols)
    return grid / total


def select_query(
    matrix: np.ndarray, asked: Iterable[tuple[int, int]]
) -> tuple[int, int]:
    """Unasked cell with hit probability closest to one half.

    Cells already resolved to 0 or 1 carry no information and are
    skipped; ties break row-major to the lowest index.
    """
    asked_set = set(asked)
    best = None
    rows, cols = matrix.shape
    for r in range(rows):
        for c in range(cols):
            if (r, c) in asked_set:
                continue
            p = matrix[r, c]
            if p <= 0.0 or p >= 1.0:
                continue
            key = abs(p - 0.5)
            if best is None or key < best[0]:
                best = (key, r, c)
    if best is None:
        raise NoInformativeCellError("every informative cell is already determined")
    return best[1], best[2]


@dataclass(frozen=True)
class GameStep:
    query: tuple[int, int]
    answer: bool  # True = hit
    remaining: int
    entropy_bits: float


@dataclass
class GameTranscript:
    """Per-step record of one game.

    ``remaining`` counts distinguishable hypotheses after the step; the
    final step always shows 1 (indistinguishable survivors count as one
    board).  The entropy trace prepends the pre-game value.
    """

    initial_remaining: int
    steps: list[GameStep] = field(default_factory=list)

    @property
    def total_queries(self) -> int:
        return len(self.steps)

    def entropies(self) -> list[float]:
        return [math.log2(self.initial_remaining)] + [
            s.entropy_bits for s in self.steps
        ]

    def to_dict(self) -> dict:
        return {
            "initial_remaining": self.initial_remaining,
            "total_queries": self.total_queries,
            "steps": [
                {
                    "query": list(s.query),
                    "answer": "hit" if s.answer else "miss",
                    "remaining": s.remaining,
                    "entropy_bits": s.entropy_bits,
                }
                for s in self.steps
            ],
        }


def play_game(target: Board | int, boards: BoardSet) -> GameTranscript:
    """Query until the target's occupancy pattern is pinned down.

    The target must belong to the hypothesis space.  Each turn bombs the
    cell closest to even odds (exact integer comparison on twice the hit
    count, row-major ties) and filters the survivors by the answer.
    """
    target_mask = target.mask if isinstance(target, Board) else target
    if not boards.contains_pattern(target_mask):
        raise ValueError("target board is not in the hypothesis space")
    config = boards.config
    maps = boards.cell_maps()
    ncells = config.cells
    full = boards.all_alive

    alive = full
    alive_n = boards.raw_count
    transcript = GameTranscript(initial_remaining=alive_n)
    asked = 0  # cell bitmask over the board

    while True:
        best = None
        for cell in range(ncells):
            if asked >> cell & 1:
                continue
            h = (alive & maps[cell]).bit_count()
            if 0 < h < alive_n:
                key = abs(2 * h - alive_n)
                if best is None or key < best[0]:
                    best = (key, cell, h)
        if best is None:
            break  # survivors all share one pattern: identified
        _, cell, h = best
        asked |= 1 << cell
        hit = bool(target_mask >> cell & 1)
        if hit:
            alive &= maps[cell]
            alive_n = h
        else:
            alive &= ~maps[cell]
            alive_n -= h
        transcript.steps.append(
            GameStep(
                query=(cell // config.cols, cell % config.cols),
                answer=hit,
                remaining=alive_n,
                entropy_bits=math.log2(alive_n),
            )
        )

    if transcript.steps and transcript.steps[-1].remaining > 1:
        # surviving placements are indistinguishable; count them as one
        last = transcript.steps[-1]
        transcript.steps[-1] = GameStep(last.query, last.answer, 1, 0.0)
    return transcript


@dataclass
class ExperimentStats:
    games: int
    mean_queries: float
    stddev_queries: float
    theoretical_floor: int
    raw_count: int
    unique_count: int
    query_counts: list[int]
    histogram: list[tuple[int, int]]  # (bin lower edge, count)
    traces: list[list[float]]

    def to_dict(self) -> dict:
        return {
            "games": self.games,
            "mean_queries": self.mean_queries,
            "stddev_queries": self.stddev_queries,
            "theoretical_floor": self.theoretical_floor,
            "raw_count": self.raw_count,
            "unique_count": self.unique_count,
            "histogram": [[lo, c] for lo, c in self.histogram],
        }


_WORKER_BOARDS: Optional[BoardSet] = None


def _play_by_pattern(target_mask: int) -> GameTranscript:
    assert _WORKER_BOARDS is not None
    return play_game(target_mask, _WORKER_BOARDS)


def run_experiment(
    num_targets: int,
    master_seed: int,
    boards: Optional[BoardSet] = None,
    config: BoardConfig = BoardConfig(),
    workers: int = 1,
    bin_width: int = 2,
) -> ExperimentStats:
    """Play seeded games against uniformly sampled target patterns.

    Targets are drawn from the distinct occupancy patterns.  Results are
    deterministic for a given master seed regardless of worker count.
    """
    if num_targets < 1:
        raise ValueError("need at least one target")
    if boards is None:
        boards = enumerate_boards(config)
    rng = random.Random(master_seed)
    targets = [
        boards.unique_masks[rng.randrange(boards.unique_count)]
        for _ in range(num_targets)
    ]

    transcripts = _run_games(targets, boards, workers)

    counts = [t.total_queries for t in transcripts]
    mean = sum(counts) / len(counts)
    if len(counts) > 1:
        stddev = math.sqrt(sum((c - mean) ** 2 for c in counts) / (len(counts) - 1))
    else:
        stddev = 0.0
    top = max(counts)
    histogram = []
    for lo in range(0, top + bin_width, bin_width):
        histogram.append((lo, sum(1 for c in counts if lo <= c < lo + bin_width)))
    return ExperimentStats(
        games=num_targets,
        mean_queries=mean,
        stddev_queries=stddev,
        theoretical_floor=math.ceil(math.log2(boards.raw_count)),
        raw_count=boards.raw_count,
        unique_count=boards.unique_count,
        query_counts=counts,
        histogram=histogram,
        traces=[t.entropies() for t in transcripts],
    )


def _run_games(
    targets: list[int], boards: BoardSet, workers: int
) -> list[GameTranscript]:
    import multiprocessing

    if (
        workers <= 1
        or len(targets) < 2
        or multiprocessing.get_start_method(allow_none=True) not in (None, "fork")
    ):
        return [play_game(t, boards) for t in targets]
    # fork-inherited global avoids pickling the hypothesis set per task
    global _WORKER_BOARDS
    boards.cell_maps()
    _WORKER_BOARDS = boards
    try:
        ctx = multiprocessing.get_context("fork")
        with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
            return list(pool.map(_play_by_pattern, targets, chunksize=8))
    finally:
        _WORKER_BOARDS = None
