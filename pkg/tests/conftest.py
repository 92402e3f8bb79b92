import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from querytree.battleship import BoardConfig, enumerate_boards


@pytest.fixture(scope="session")
def full_board_set():
    """The default 5+4+3 on 10x10 hypothesis space, enumerated once."""
    return enumerate_boards(BoardConfig())


@pytest.fixture(scope="session")
def tiny_board_set():
    """4x4 board with a single length-2 ship: 24 placements."""
    return enumerate_boards(BoardConfig(rows=4, cols=4, ships=(2,)))
