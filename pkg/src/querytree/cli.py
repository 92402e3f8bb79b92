"""Command-line interface.

Subcommands: ``wine`` (worked examples), ``codes FILE`` (baseline code
lengths for a distribution file), ``dna-compare`` (greedy vs optimal
sweep), ``battleship bench`` / ``battleship play`` (game experiments).

Exit codes: 0 success, 2 infeasible or unsolvable instance, 1 usage or
I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import battleship as bs
from . import dna
from .codes import entropy, huffman_tree, shannon_length
from .distribution import Distribution, load_distribution
from .errors import (
    MergeBudgetExceededError,
    NoFeasibleMergeError,
    PartitionStuckError,
    UnsolvableError,
)
from .sets import Unconstrained, WinePairs
from .solvers import brute_force_optimal, gbsc
from .svgplot import histogram_chart, line_chart
from .tree import expected_depth, validate_tree

DEFAULT_SEED = 42


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="master random seed")
    p.add_argument("--out", type=Path, default=Path("."), help="output directory")
    p.add_argument(
        "--format",
        choices=("csv", "json", "svg"),
        default="svg",
        help="csv: tables only; svg: tables and plots; json: tables plus JSON stats",
    )
    p.add_argument("--threads", type=int, default=1, help="worker processes")


def build_parser() -> _Parser:
    parser = _Parser(prog="querytree", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("wine", help="solve the bad-wine worked examples")

    p_codes = sub.add_parser("codes", help="code-length table for a distribution file")
    p_codes.add_argument("file", type=Path)

    p_dna = sub.add_parser("dna-compare", help="greedy vs optimal on random instances")
    _common_flags(p_dna)
    p_dna.add_argument("-n", type=int, default=6, help="sequence length")
    p_dna.add_argument("--instances", type=int, default=10000)
    p_dna.add_argument(
        "--runtime-lengths",
        type=str,
        default=None,
        help="also sweep runtimes over comma-separated lengths",
    )
    p_dna.add_argument("--runtime-seeds", type=int, default=100)

    p_bs = sub.add_parser("battleship", help="1-player Battleship experiments")
    bs_sub = p_bs.add_subparsers(dest="bs_command", required=True)

    p_bench = bs_sub.add_parser("bench", help="play many games, report statistics")
    _common_flags(p_bench)
    p_bench.add_argument("--games", type=int, default=1000)
    p_bench.add_argument("--ships", type=str, default="5,4,3")
    p_bench.add_argument("--rows", type=int, default=10)
    p_bench.add_argument("--cols", type=int, default=10)

    p_play = bs_sub.add_parser("play", help="play one game, print its transcript")
    _common_flags(p_play)
    p_play.add_argument("--target-seed", type=int, default=0)
    p_play.add_argument("--ships", type=str, default="5,4,3")
    p_play.add_argument("--rows", type=int, default=10)
    p_play.add_argument("--cols", type=int, default=10)

    return parser


def _frac_str(x) -> str:
    if isinstance(x, Fraction):
        return f"{x} ~ {float(x):.4f}"
    return f"{float(x):.4f}"


def cmd_wine() -> int:
    one_bad = Distribution(
        [Fraction(8, 23), Fraction(6, 23), Fraction(4, 23), Fraction(2, 23),
         Fraction(2, 23), Fraction(1, 23)]
    )
    print("One bad bottle among six, free mixing:")
    print(f"  probabilities: {' '.join(str(p) for p in one_bad)}")
    huff = huffman_tree(one_bad)
    brute = brute_force_optimal(one_bad, Unconstrained())
    assert validate_tree(brute.tree, Unconstrained()).feasible
    print(f"  huffman expected tastings:    {_frac_str(expected_depth(huff, one_bad))}")
    print(f"  exhaustive-search optimum:    {_frac_str(brute.expected_len)}")

    two_bad = Distribution(
        [Fraction(1, 10), Fraction(1, 10), Fraction(3, 20), Fraction(3, 20),
         Fraction(3, 10), Fraction(1, 5)]
    )
    family = WinePairs(4)
    print("Two bad bottles among four, mixture tasting:")
    print(f"  pair probabilities: {' '.join(str(p) for p in two_bad)}")
    huff2 = huffman_tree(two_bad)
    huff2_len = expected_depth(huff2, two_bad)
    report = validate_tree(huff2, family)
    print(f"  huffman bound:                {_frac_str(huff2_len)}")
    print(f"  huffman tree vs mixtures:     {report.describe()}")
    feasible = brute_force_optimal(two_bad, family)
    assert validate_tree(feasible.tree, family).feasible
    print(f"  feasible optimum:             {_frac_str(feasible.expected_len)}")
    return 0


def cmd_codes(path: Path) -> int:
    dist = load_distribution(path)
    ent = entropy(dist)
    huff = huffman_tree(dist)
    huff_len = float(expected_depth(huff, dist))
    balanced = gbsc(dist, Unconstrained())
    gbsc_len = float(balanced.expected_len)
    shan = float(shannon_length(dist))
    assert validate_tree(balanced.tree, Unconstrained()).feasible
    print(f"outcomes: {len(dist)}")
    print(f"entropy:  {ent:.6f}")
    print(f"huffman:  {huff_len:.6f}")
    print(f"gbsc:     {gbsc_len:.6f}")
    print(f"shannon:  {shan:.6f}")
    tol = 1e-9
    chain = ent <= huff_len + tol <= gbsc_len + 2 * tol <= shan + 3 * tol
    plus_one = gbsc_len < ent + 1
    print(f"bounds: entropy <= huffman <= gbsc <= shannon: {'OK' if chain else 'VIOLATED'}")
    print(f"bounds: gbsc < entropy + 1: {'OK' if plus_one else 'VIOLATED'}")
    return 0 if chain and plus_one else 2


def _write_csv(path: Path, header: Sequence[str], rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def cmd_dna_compare(args) -> int:
    args.out.mkdir(parents=True, exist_ok=True)
    rows, summary = dna.compare_experiment(args.n, args.instances, args.seed)
    csv_rows = [
        (
            r.instance_id,
            r.n,
            "" if r.length_brute is None else f"{r.length_brute:.9f}",
            f"{r.length_greedy:.9f}",
            f"{r.length_gbsc:.9f}",
            "" if r.gap is None else f"{r.gap:.9f}",
            r.time_greedy_ns,
            r.time_gbsc_ns,
        )
        for r in rows
    ]
    out_csv = args.out / "dna_compare.csv"
    _write_csv(
        out_csv,
        ("instance_id", "n", "L_brute", "L_huffman_greedy", "L_gbsc", "gap",
         "t_huffman_ns", "t_gbsc_ns"),
        csv_rows,
    )
    gaps = sorted(r.gap for r in rows if r.gap is not None)
    print(f"instances: {summary.instances} (n={args.n}, seed={args.seed})")
    print(f"zero-gap fraction: {summary.zero_gap_fraction:.4f}")
    if gaps:
        q = lambda f: gaps[min(len(gaps) - 1, int(f * len(gaps)))]
        print(f"gap quantiles: p50={q(0.50):.4f} p90={q(0.90):.4f} p99={q(0.99):.4f}")
    print(f"max gap: {summary.max_gap:.4f}")
    print(f"mean runtime: greedy-merge {summary.mean_time_greedy_ns / 1e6:.3f} ms, "
          f"balanced-split {summary.mean_time_gbsc_ns / 1e6:.3f} ms")
    print(f"wrote {out_csv}")

    if args.runtime_lengths:
        lengths = [int(tok) for tok in args.runtime_lengths.split(",") if tok]
        points = dna.runtime_sweep(lengths, args.runtime_seeds, args.seed)
        rt_csv = args.out / "dna_runtime.csv"
        _write_csv(
            rt_csv,
            ("n", "t_huffman_ns", "t_gbsc_ns"),
            [(p.n, f"{p.mean_time_greedy_ns:.0f}", f"{p.mean_time_gbsc_ns:.0f}")
             for p in points],
        )
        print(f"wrote {rt_csv}")
        if args.format == "svg":
            svg = line_chart(
                [
                    ("greedy merge", [(p.n, p.mean_time_greedy_ns / 1e6) for p in points]),
                    ("balanced split", [(p.n, p.mean_time_gbsc_ns / 1e6) for p in points]),
                ],
                title="mean solver runtime",
                x_label="sequence length",
                y_label="ms",
            )
            (args.out / "dna_runtime.svg").write_text(svg, encoding="utf-8")
            print(f"wrote {args.out / 'dna_runtime.svg'}")
    return 0


def _parse_ships(text: str) -> tuple[int, ...]:
    try:
        ships = tuple(int(tok) for tok in text.split(",") if tok)
    except ValueError:
        raise ValueError(f"bad ship list {text!r}") from None
    if not ships:
        raise ValueError("empty ship list")
    return ships


def cmd_battleship_bench(args) -> int:
    config = bs.BoardConfig(rows=args.rows, cols=args.cols, ships=_parse_ships(args.ships))
    args.out.mkdir(parents=True, exist_ok=True)
    boards = bs.enumerate_boards(config)
    print(f"hypothesis space: {boards.raw_count} placements, "
          f"{boards.unique_count} distinct patterns")
    stats = bs.run_experiment(
        args.games, args.seed, boards=boards, workers=args.threads
    )
    floor = stats.theoretical_floor
    print(f"games: {stats.games}  mean queries: {stats.mean_queries:.3f}  "
          f"stddev: {stats.stddev_queries:.3f}")
    print(f"theoretical floor: ceil(log2 {stats.raw_count}) = {floor}")

    _write_csv(
        args.out / "stats.csv",
        ("games", "mean_queries", "stddev_queries", "theoretical_floor",
         "raw_count", "unique_count"),
        [(stats.games, f"{stats.mean_queries:.6f}", f"{stats.stddev_queries:.6f}",
          floor, stats.raw_count, stats.unique_count)],
    )
    _write_csv(args.out / "histogram.csv", ("bin_lo", "count"), stats.histogram)
    trace_rows = []
    for game_id, trace in enumerate(stats.traces):
        for t, bits in enumerate(trace):
            trace_rows.append((game_id, t, f"{bits:.6f}"))
    _write_csv(args.out / "traces.csv", ("game_id", "t", "entropy_bits"), trace_rows)

    rng = random.Random(args.seed)
    targets = [boards.unique_masks[rng.randrange(boards.unique_count)]
               for _ in range(args.games)]
    with open(args.out / "transcripts.jsonl", "w", encoding="utf-8") as fh:
        for mask in targets[: min(args.games, 50)]:
            fh.write(json.dumps(bs.play_game(mask, boards).to_dict()) + "\n")

    if args.format == "svg":
        hist_svg = histogram_chart(
            stats.histogram, 2, title="queries per game",
            x_label="queries", y_label="games",
        )
        (args.out / "histogram.svg").write_text(hist_svg, encoding="utf-8")
        shown = stats.traces[: min(10, len(stats.traces))]
        trace_svg = line_chart(
            [(f"game {i}", list(enumerate(tr))) for i, tr in enumerate(shown)],
            title="hypothesis entropy per query",
            x_label="query",
            y_label="bits",
            hline=(float(floor), f"floor {floor}"),
            legend=False,
        )
        (args.out / "traces.svg").write_text(trace_svg, encoding="utf-8")
    if args.format == "json":
        (args.out / "stats.json").write_text(
            json.dumps(stats.to_dict(), indent=2), encoding="utf-8"
        )
    print(f"wrote outputs to {args.out}")
    return 0


def cmd_battleship_play(args) -> int:
    config = bs.BoardConfig(rows=args.rows, cols=args.cols, ships=_parse_ships(args.ships))
    boards = bs.enumerate_boards(config)
    rng = random.Random(args.target_seed)
    target = boards.unique_masks[rng.randrange(boards.unique_count)]
    transcript = bs.play_game(target, boards)
    print(json.dumps(transcript.to_dict(), indent=2))
    print(
        f"determined in {transcript.total_queries} queries "
        f"(start {math.log2(transcript.initial_remaining):.2f} bits)",
        file=sys.stderr,
    )
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "wine":
            return cmd_wine()
        if args.command == "codes":
            return cmd_codes(args.file)
        if args.command == "dna-compare":
            return cmd_dna_compare(args)
        if args.command == "battleship":
            if args.bs_command == "bench":
                return cmd_battleship_bench(args)
            return cmd_battleship_play(args)
        parser.error(f"unknown command {args.command}")
        return 1
    except (UnsolvableError, NoFeasibleMergeError, MergeBudgetExceededError,
            PartitionStuckError, bs.NoInformativeCellError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
