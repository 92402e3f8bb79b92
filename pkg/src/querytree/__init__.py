"""Decision trees for identifying a random variable with constrained queries.

The package provides the generic machinery (distributions, query
families, trees, entropy and the Huffman/Shannon baselines), three tree
builders (exact brute force, bottom-up greedy merging, top-down balanced
splitting), and two applications: locating a segment with interval
probes and 1-player Battleship.
"""

from .distribution import Distribution, load_distribution, normalized
from .errors import (
    AlphabetTooLargeError,
    MergeBudgetExceededError,
    NoFeasibleMergeError,
    PartitionStuckError,
    QueryTreeError,
    UnsolvableError,
)
from .sets import (
    DecisionSet,
    Explicit,
    IntervalSet,
    OutcomeSet,
    Unconstrained,
    WinePairs,
    is_decision_complete,
    realizable_bipartitions,
)
from .tree import (
    DecisionTree,
    FeasibilityReport,
    Internal,
    Leaf,
    expected_depth,
    validate_tree,
)
from .codes import entropy, huffman_tree, shannon_length, shannon_symbol_length
from .solvers import (
    SolveResult,
    SolveStats,
    brute_force_optimal,
    gbsc,
    greedy_huffman,
    optimal_partition,
)
from .dna import (
    IntervalQuery,
    can_merge,
    dna_gbsc,
    dna_greedy_huffman,
    interval_partition,
)
from .battleship import (
    Board,
    BoardConfig,
    BoardSet,
    GameTranscript,
    enumerate_boards,
    hit_probability,
    play_game,
    run_experiment,
    select_query,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetTooLargeError",
    "Board",
    "BoardConfig",
    "BoardSet",
    "DecisionSet",
    "DecisionTree",
    "Distribution",
    "Explicit",
    "FeasibilityReport",
    "GameTranscript",
    "Internal",
    "IntervalQuery",
    "IntervalSet",
    "Leaf",
    "MergeBudgetExceededError",
    "NoFeasibleMergeError",
    "OutcomeSet",
    "PartitionStuckError",
    "QueryTreeError",
    "SolveResult",
    "SolveStats",
    "Unconstrained",
    "UnsolvableError",
    "WinePairs",
    "brute_force_optimal",
    "can_merge",
    "dna_gbsc",
    "dna_greedy_huffman",
    "entropy",
    "enumerate_boards",
    "expected_depth",
    "gbsc",
    "greedy_huffman",
    "hit_probability",
    "huffman_tree",
    "interval_partition",
    "is_decision_complete",
    "load_distribution",
    "normalized",
    "optimal_partition",
    "play_game",
    "realizable_bipartitions",
    "run_experiment",
    "select_query",
    "shannon_length",
    "shannon_symbol_length",
    "validate_tree",
]
